"""The index is not additive under join.

For lens complexes ind(X * Y) = ind X + ind Y. Two small complexes U and V,
both of index 3, break this in opposite directions when joined with a
single free orbit (index 1): U * pt has index 5 and V * pt has index 3.
The homology tables show where the extra class comes from.
"""
from zpjoin import PrimeField, complex_U, complex_V, homology, index, join_with_point, point_orbit
from zpjoin.explore import check_additivity
from zpjoin.rmod import describe

for p in (3, 5, 7):
    f = PrimeField(p)
    pt = point_orbit(f)
    for c in (complex_U(f), complex_V(f)):
        j = join_with_point(c)
        h = homology(j)
        print(f"p={p} {c.name}: ind {index(c)} + ind pt 1 -> ind join {index(j)}"
              f"  [{check_additivity(c, pt)}]")
        print("    H(join):", ", ".join(describe(jt, p) for jt in h.jordan_types))
        print("    reduced orbit dims:", h.reduced_orbit_dims)
