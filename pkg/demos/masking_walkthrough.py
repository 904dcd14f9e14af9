"""How a noise map gets masked, step by step, with no trained model involved.

    python demos/masking_walkthrough.py
"""
import numpy as np

from stylemix.masking import apply_noise_mask, masked_patch_count, resample_mask, sample_patch_mask

# A 64x128 image has a 16x32 noise map at quarter resolution. With 4x4 patches that is a 4x8 patch grid.
grid, patch, ratio = (16, 32), 4, 0.25
n_patches = (grid[0] // patch) * (grid[1] // patch)
print("patches:", n_patches, "masked:", masked_patch_count(n_patches, ratio))

# The count is exact for every draw, only the positions change with the seed.
for seed in range(3):
    pm = sample_patch_mask(grid, patch, ratio, seed)
    print(f"seed {seed}, patch view (1 = masked):")
    print(pm.mask[::patch, ::patch].astype(int))

# Masked cells of the predicted map are overwritten with prior noise; the rest
# is passed through untouched.
pm = sample_patch_mask(grid, patch, ratio, 0)
eps = np.random.default_rng(1).standard_normal(grid) * 3
eps_m = apply_noise_mask(eps, pm.mask, 2)
print("unmasked entries unchanged:", np.array_equal(eps_m[pm.mask == 0], eps[pm.mask == 0]))
print("std inside masked cells: %.2f (predicted map std %.2f)" % (eps_m[pm.mask == 1].std(), eps.std()))

# The same mask in image space (for the pixel loss) and on a coarser feature
# grid (for the perceptual loss). A coarse cell is dropped if it touches any
# masked pixel; with patch-aligned grids like these the share stays the same.
img_mask = resample_mask(pm, (64, 128))
for shape in [(64, 128), (32, 64), (16, 32), (8, 16)]:
    m = resample_mask(img_mask, shape)
    print(f"{shape}: {m.mean():.3f} of cells excluded")
