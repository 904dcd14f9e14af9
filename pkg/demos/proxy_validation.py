"""Rank segmenters on an unseen night domain without night labels.

    python demos/proxy_validation.py

The source validation images are restyled with a handful of unlabeled night
exemplars; their labels carry over unchanged. Each segmenter in the reference
family is scored on this proxy set, on plain source validation, and on the
real (labeled) night test split. A good proxy ranks the models the way the
real test split does.
"""
from stylemix.experiments import ReferenceRun, default_root

ref = ReferenceRun(default_root())
proxy = ref.proxy_set()
print(f"proxy set: {len(proxy)} samples from {len(ref.target_exemplars())} night exemplars")
print("first provenance pairs (content, exemplar):", proxy.provenance[:5])

scores = ref.family_scores()
print(f"\n{'model':28s} {'source-val':>10s} {'proxy':>8s} {'night-test':>10s}")
for name in sorted(scores, key=lambda n: scores[n]["shifted_test"]):
    s = scores[name]
    print(f"{name:28s} {s['source_val']:10.3f} {s['proxy']:8.3f} {s['shifted_test']:10.3f}")

for column in ("source_val", "proxy"):
    rep = ref.correlation(column)
    print(f"\nranking by {column}: spearman {rep.rho:.3f}, kendall {rep.tau:.3f}")
