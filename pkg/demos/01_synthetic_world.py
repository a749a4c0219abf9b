"""Tour of the procedural world: maps per style, one traffic scenario,
and its rasterized views dumped as PNGs.

Run:  python3 demos/01_synthetic_world.py [out_dir]
"""

import sys
from pathlib import Path

import numpy as np

from scenariogen.core import validate_scenario
from scenariogen.raster import RasterSpec, render_entities, render_map, save_channels
from scenariogen.world import STYLES, WorldConfig, gen_map, gen_traffic

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "/tmp/scenariogen_demo")
out_dir.mkdir(parents=True, exist_ok=True)

for style in STYLES:
    m = gen_map(seed=7, style=style, extent=100.0)
    total_lane = sum(lane.length() for lane in m.lanes)
    print(f"{style:16s} lanes={len(m.lanes):3d} (total {total_lane:7.0f} m) "
          f"junctions={len(m.junctions):3d} parking lots={len(m.parking)}")

cfg = WorldConfig(seed=0, style="campus", density=10.0, extent=100.0)
map_model = gen_map(seed=7, style="campus", extent=100.0)
scn = gen_traffic(map_model, cfg, seed=42)
validate_scenario(scn, map_model)

stationary = sum(
    1 for a in scn.agents
    if np.hypot(*np.diff(a.trajectory.positions(), axis=0).T).sum() < 0.5)
print(f"\ncampus scenario: {scn.num_agents()} agents "
      f"({stationary} stationary), view center "
      f"({scn.view.center_x:.1f}, {scn.view.center_y:.1f})")
for agent in scn.agents[:4]:
    b = agent.box
    flag = " AV" if agent.is_av else ""
    print(f"  box ({b.cx:7.2f}, {b.cy:7.2f}) heading {b.heading:+.2f} "
          f"{b.length:.1f}x{b.width:.1f} m{flag}")

spec = RasterSpec(height=128, width=128, extent=100.0)
m_img = render_map(map_model, scn.view, spec)
x_img = render_entities(scn, scn.view, spec)
paths = save_channels(m_img, out_dir, "campus_m") + \
    save_channels(x_img, out_dir, "campus_x")
print(f"\nwrote {len(paths)} channel PNGs to {out_dir}")
print(f"map channel fill fractions: "
      f"{[round(float(c.mean()), 3) for c in m_img.channels]}")
