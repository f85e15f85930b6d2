"""Joins of free complexes.

The join of X and Y has the cells of X, the cells of Y, and a cell a*b of
dimension |a| + |b| + 1 for each pair. The group acts diagonally, so a
pair of orbits contributes p free orbits. Joining with a single free orbit
acts like an equivariant suspension.
"""
from zpjoin import PrimeField, homology, join, join_with_point, lens, point_orbit
from zpjoin.explore import kunneth_holds
from zpjoin.rmod import describe

p = 3
f = PrimeField(p)
pt = point_orbit(f)

j = join(pt, pt)
print("pt * pt ranks:", list(j.ranks), " reduced orbit homology:", homology(j).reduced_orbit_dims)

a, b = lens(f, 1), lens(f, 2)
j = join(a, b)
print("\nlens 1 * lens 2 ranks:", list(j.ranks))
print("equivariant homology:", [describe(jt, p) for jt in homology(j).jordan_types])
print("same as lens 4:     ", [describe(jt, p) for jt in homology(lens(f, 4)).jordan_types])
print("Kunneth formula for the orbit Betti numbers holds:", kunneth_holds(a, b, j))

s = join_with_point(lens(f, 1))
print("\nlens 1 * pt homology:", [describe(jt, p) for jt in homology(s).jordan_types])
