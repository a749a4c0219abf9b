"""End-to-end pipeline on a deliberately tiny budget (a few minutes on CPU):
generate data, train the detection VAE and the token-conditioned diffusion
model briefly, sample scenarios, and score them.

The numbers are not meaningful at this budget; the point is the shape of
the workflow. The real desk-scale run is `scenariogen experiment all`.

Run:  python3 demos/04_tiny_pipeline.py
"""

import time

import numpy as np
import torch

torch.set_num_threads(2)

from scenariogen.autoencoder import NetConfig
from scenariogen.autoencoder.training import AutoencoderTrainConfig, train_autoencoder
from scenariogen.diffusion import DiffusionNetConfig
from scenariogen.diffusion.training import DiffusionTrainConfig, train_diffusion
from scenariogen.harness.experiments import sample_conditioned
from scenariogen.diffusion.training import prepare_diffusion_scenes
from scenariogen.metrics import match_tokens, scenario_mmd2
from scenariogen.raster import RasterSpec
from scenariogen.world import WorldConfig, gen_dataset

t0 = time.time()
world = WorldConfig(seed=1, density=6.0, extent=64.0, speed_range=(2.0, 12.0))
dataset = gen_dataset(world, 120, styles=("urban-grid", "campus"))
spec = RasterSpec(height=64, width=64, extent=64.0)
print(f"dataset: {len(dataset.train)} train / {len(dataset.val)} val "
      f"({time.time() - t0:.0f}s)")

ae = train_autoencoder(
    dataset, spec,
    AutoencoderTrainConfig(steps=300, batch_size=8, seed=0, eval_every=150),
    net_cfg=NetConfig(widths=(16, 16, 32, 32)))
print(f"autoencoder trained, latent scale {ae.latent_scale:.3f} "
      f"({time.time() - t0:.0f}s)")

diff = train_diffusion(
    dataset, ae,
    DiffusionTrainConfig(steps=250, batch_size=8, seed=0, eval_every=125,
                         token_features=("current_pose", "extents",
                                         "current_speed", "final_speed")),
    net_cfg=DiffusionNetConfig(unet_widths=(24, 48, 96),
                               map_widths=(8, 8, 16, 16),
                               map_embed_channels=16, token_dim=24,
                               sigma_embed_dim=16))
print(f"diffusion trained ({time.time() - t0:.0f}s)")

records = prepare_diffusion_scenes(dataset, ae, "val")[:16]
evals = sample_conditioned(diff, ae, records, p_test=0.0, seed=3)
tp = fn = fp = 0
for e in evals:
    res = match_tokens(e["generated"], e["targets"])
    tp, fn, fp = tp + res.tp, fn + res.fn, fp + res.fp
generated = [e["generated"] for e in evals]
reference = [e["gt"] for e in evals]
print(f"\n16 conditional samples: token match rate "
      f"{tp / max(tp + fn, 1):.2f}, {fp} extra agents")
print(f"MMD^2 positions vs ground truth: "
      f"{scenario_mmd2(generated, reference, 'positions'):.4f}")
print(f"agent counts generated {[s.num_agents() for s in generated[:8]]} "
      f"vs truth {[s.num_agents() for s in reference[:8]]}")
print(f"total {time.time() - t0:.0f}s")
