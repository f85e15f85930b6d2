"""Random search for additivity defects.

Complexes are drawn with cycles coming from integral kernels, so each one
is the reduction of a complex over the integers. Each trial joins two of
them and records how the join index compares to the sum.
"""
from zpjoin import GenConfig, PrimeField, run_trials

for p, trials in ((3, 100), (5, 50)):
    rep = run_trials(GenConfig(PrimeField(p), seed=2024, trials=trials))
    print(f"p={p}: {rep.outcomes}  bounds respected: {rep.passed}")
    odd = [t for t in rep.trials if t["outcome"] != "exact"]
    for t in odd[:3]:
        print("   ", t["a"]["index"], "+", t["b"]["index"], "->", t["join_index"], t["outcome"])
