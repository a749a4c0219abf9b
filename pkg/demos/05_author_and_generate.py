"""Author agent tokens by hand and generate scenarios with the trained
desk-scale model (requires `scenariogen experiment all --out results` to
have produced results/checkpoints/).

Run:  python3 demos/05_author_and_generate.py [results_dir]
"""

import sys
from pathlib import Path

import torch

torch.set_num_threads(2)

from scenariogen.autoencoder.training import load_autoencoder
from scenariogen.core import ViewWindow
from scenariogen.diffusion import load_diffusion
from scenariogen.diffusion.generate import generate_scenarios
from scenariogen.metrics import match_tokens
from scenariogen.tokens import token_pose_target
from scenariogen.world import Dataset

results = Path(sys.argv[1] if len(sys.argv) > 1 else "results")
ckpts = results / "checkpoints"
if not (ckpts / "diff_tok_pose_cur_fin_s0.pt").exists():
    raise SystemExit(f"no trained checkpoints under {ckpts}; "
                     f"run `scenariogen experiment all --out {results}` first")

ae = load_autoencoder(ckpts / "ae_main.pt")
diff = load_diffusion(ckpts / "diff_tok_pose_cur_fin_s0.pt", autoencoder=ae,
                      autoencoder_path=ckpts / "ae_main.pt")
dataset = Dataset.load(results / "dataset")
map_id = sorted(dataset.maps)[0]
print(f"model {diff.manifest.get('name')} on map {map_id}")

# two authored agents: one crossing the center, one stopped to its left
tokens = [
    {"x_m": 0.0, "y_m": -1.75, "heading_rad": 0.0, "length_m": 4.8,
     "width_m": 2.4, "current_speed_mps": 8.0, "final_speed_mps": 8.0},
    {"x_m": -8.0, "y_m": 10.0, "heading_rad": -1.5708, "length_m": 4.8,
     "width_m": 2.4, "current_speed_mps": 0.0, "final_speed_mps": 0.0},
]
view = ViewWindow(0.0, 0.0, diff.spec.extent)
for p_mask in (0.0, 0.5, 0.9):
    result = generate_scenarios(diff, ae, dataset.maps[map_id], view, tokens,
                                p_mask, num_samples=3, seed=11)
    targets = [token_pose_target(t) for t in tokens]
    lines = []
    for scn in result.scenarios:
        res = match_tokens(scn, targets)
        lines.append(f"{scn.num_agents()} agents ({res.tp}/{len(tokens)} matched)")
    print(f"p_mask {p_mask:.1f}: " + "; ".join(lines))
print("\nhigher p_mask -> the model fills in more agents beyond the authored two")
