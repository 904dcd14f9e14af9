"""Inversion, mixing and style interpolation with the cached reference models.

    python demos/style_mixing_tour.py [out_dir]

Needs the GAN and the rho=0.25 / rho=0 encoders from demos/build_reference.py.
Writes three PNG sheets into out_dir (default: the reference directory).
"""
import sys
from pathlib import Path

import numpy as np
import torch

from stylemix import deskbench as db
from stylemix.experiments import ReferenceRun, default_root

ref = ReferenceRun(default_root())
out = Path(sys.argv[1]) if len(sys.argv) > 1 else ref.root
out.mkdir(parents=True, exist_ok=True)
torch.set_grad_enabled(False)


def sheet(rows, path, scale=3):
    from PIL import Image

    grid = np.concatenate([np.concatenate([db.image_to_uint8(x) for x in r], axis=1) for r in rows], axis=0)
    Image.fromarray(grid).resize((grid.shape[1] * scale, grid.shape[0] * scale), Image.NEAREST).save(path)
    print("wrote", path)


val = ref.splits_a["source_val"]
content = db.stack_images(val[:6])
night = np.stack(ref.target_exemplars()[:6])
extra = np.stack(ref.extra_exemplars[:6])

# columns: content, its inversion, then (style, mix) for a night scene and an
# out-of-domain exemplar
masked = ref.mixer(0.25)
rows = []
for c, s1, s2 in zip(content, night, extra):
    rows.append([c, masked.invert(c), s1, masked.mix(c, s1), s2, masked.mix(c, s2)])
sheet(rows, out / "tour_mixing.png")

# Unmasked vs masked encoder on the same pairs. A mix that stays close to the
# content inversion means style went into the noise map.
plain = ref.mixer(0.0)
rows = [[c, s, plain.mix(c, s), masked.mix(c, s)] for c, s in zip(content, night)]
sheet(rows, out / "tour_rho0_vs_rho025.png")
for rho in (0.0, 0.25):
    print(f"rho={rho}:", ref.mixing_stats(rho))

# Moving towards the style's colours is not enough on its own: a mix that just
# copies the style image does that too. Pixel MSE mostly measures brightness
# here, so layout is compared on luminance normalized per image.
def layout(x):
    g = x.mean(axis=1)
    g = g - g.mean(axis=(1, 2), keepdims=True)
    return g / (g.std(axis=(1, 2), keepdims=True) + 1e-8)


def layout_corr(a, b):
    return float((layout(a) * layout(b)).mean())


for name, m in (("rho=0", plain), ("rho=0.25", masked)):
    mixed = np.stack([m.mix(c, s) for c, s in zip(content, night)])
    inv_c = np.stack([m.invert(c) for c in content])
    inv_s = np.stack([m.invert(s) for s in night])
    print(f"{name}: layout correlation with invert(content) {layout_corr(mixed, inv_c):.3f}, "
          f"with invert(style) {layout_corr(mixed, inv_s):.3f}")

# Style strength sweep: alpha=0 is the inversion, alpha=1 the full mix.
alphas = np.linspace(0, 1, 6)
rows = [[masked.interpolate_style(c, s, a) for a in alphas] for c, s in zip(content[:4], night[:4])]
sheet(rows, out / "tour_interpolation.png")
drift = [np.mean((masked.interpolate_style(content[0], night[0], a) - masked.invert(content[0])) ** 2) for a in alphas]
print("distance from the inversion along the sweep:", [round(float(d), 4) for d in drift])
