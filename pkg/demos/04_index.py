"""The cohomological index.

A chain map into the periodic free resolution exists for every free
complex and is unique up to homotopy. The index counts the degrees in
which the pulled-back generator is nonzero on orbit homology.
"""
import numpy as np

from zpjoin import PrimeField, complex_U, index_report, lens

f = PrimeField(5)

for k in range(5):
    print(f"lens {k}: index {index_report(lens(f, k)).index}")

u = complex_U(f)
rep = index_report(u)
print("\nU hit flags:", rep.hit_flags, " index", rep.index)

# a randomized lift differs by a homotopy and gives the same answer
alt = index_report(u, np.random.default_rng(3))
print("randomized lift flags:", alt.hit_flags)
