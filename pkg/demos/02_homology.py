"""Equivariant and orbit homology of small free complexes.

A free complex is stored by its orbit representatives: each boundary is a
matrix with entries in the group ring. Homology of the underlying complex
is an R-module and is reported by Jordan type; the orbit complex applies
the augmentation entrywise.
"""
from zpjoin import PrimeField, complex_U, complex_V, homology, lens
from zpjoin.rmod import describe

p = 3
f = PrimeField(p)

for c in (lens(f, 3), complex_U(f), complex_V(f)):
    h = homology(c)
    print(f"{c.name}: ranks {list(c.ranks)}")
    for n, jt in enumerate(h.jordan_types):
        print(f"  H_{n} = {describe(jt, p):<12} orbit dim {h.orbit_dims[n]}")
