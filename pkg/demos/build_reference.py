"""Train (or reload) every desk-scale reference model and print the headline numbers.

    STYLEMIX_REFERENCE_DIR=runs/reference python demos/build_reference.py

Everything is cached, so the script can be interrupted and rerun; partially
trained GAN and encoder checkpoints resume where they stopped. On one CPU
core a cold build takes a few hours, most of it spent in the ten encoders.
"""
import logging
import sys
import time

from stylemix.experiments import ReferenceRun, default_root

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stdout)
ref = ReferenceRun(default_root())
t0 = time.time()


def stamp(msg):
    print(f"[{(time.time() - t0) / 60:6.1f} min] {msg}", flush=True)


# generative side: one GAN, one frozen perceptual net, ten encoders
ref.perceptual()
ref.gan_path()
stamp("gan ready")
for rho in (0.25, 0.0, 0.5):
    for seed in (range(3) if rho else range(1)):
        ref.encoder_path(rho, 4, seed)
        stamp(f"encoder rho={rho} seed={seed}: held-out mse {ref.heldout_mse(rho, 4, seed):.4f}")
for seed in range(3):
    ref.encoder_path(0.25, 16, seed)
    stamp(f"encoder 1/16 noise seed={seed}: held-out mse {ref.heldout_mse(0.25, 16, seed):.4f}")

for rho in (0.25, 0.0):
    stamp(f"mixing rho={rho}: {ref.mixing_stats(rho)}")
stamp(f"domain B mse {ref.heldout_mse(layout='b'):.4f}")

# segmentation side: the correlation family contains the 3x3 augmentation grid
for variant in ref.FAMILY:
    stamp(f"{ref.segmenter_name(**variant)}: {ref.seg_scores(**variant)}")
for aug in ("none", "issa"):
    for seed in range(3):
        stamp(f"layout b {aug} seed={seed}: {ref.seg_scores(aug, seed, layout='b')}")

for column in ("proxy", "source_val"):
    rep = ref.correlation(column)
    stamp(f"{column:>10} vs shifted-test over {len(rep.names)} models: spearman {rep.rho:.3f} kendall {rep.tau:.3f}")
rep = ref.correlation("proxy")
rep.write_csv(ref.root / "correlation.csv")
rep.plot(ref.root / "correlation.png")
