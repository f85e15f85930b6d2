import numpy as np
import pytest

from zpjoin import gfp
from zpjoin.complexes import (EquivariantComplex, ValidationError, builtin_complex, complex_U, complex_V,
                              euler_characteristic, expand, homology, homology_equivariant, homology_orbit, lens,
                              orbit_complex, orbit_projection_induced, point_orbit, validate)
from zpjoin.gfp import PrimeField
from zpjoin.join import join_with_point
from zpjoin.rmod import GroupRingElem, jordan_type, ring_matmul

from oracles import group_ring_mul, tau_power

F3 = PrimeField(3)
PRIMES = [3, 5, 7]


def test_validate_builtin_lens():
    assert validate(lens(F3, 4)) == []


def test_validate_detects_nonzero_square():
    c = lens(F3, 4)
    tau = GroupRingElem.tau(F3).array().reshape(1, 1, 3)
    bad = EquivariantComplex(F3, c.ranks, (c.boundaries[0], tau) + c.boundaries[2:])
    # tau * tau != 0 in F_3[Z/3]
    assert group_ring_mul(tau_power(1, 3), tau_power(1, 3), 3) != [0, 0, 0]
    violations = validate(bad)
    assert "boundary squared nonzero at degree 2" in violations
    # the old degree-3 boundary tau now also composes to tau^2 with the new one
    assert violations == ["boundary squared nonzero at degree 2", "boundary squared nonzero at degree 3"]


def test_validate_detects_augmentation():
    one = GroupRingElem.group_element(F3).array().reshape(1, 1, 3)
    bad = EquivariantComplex(F3, (1, 1), (one,))
    assert any("augmentation" in v for v in validate(bad))
    with pytest.raises(ValidationError):
        expand(bad)


def test_validate_shapes_and_empty():
    assert validate(EquivariantComplex(F3, (), ())) == ["ranks[0] >= 1 required"]
    bad = EquivariantComplex(F3, (1, 2), (np.zeros((1, 1, 3), dtype=np.int64),))
    assert "shape" in validate(bad)[0]


def test_expand_examples():
    ex = expand(point_orbit(F3))
    assert ex.dims == (3,) and ex.boundaries == ()
    assert np.array_equal(gfp.matpow(ex.g_action[0], 3, 3), np.eye(3, dtype=np.int64))
    assert not np.array_equal(ex.g_action[0], np.eye(3, dtype=np.int64))
    ex = expand(lens(F3, 1))
    assert ex.dims == (3, 3)
    assert np.array_equal(ex.boundaries[0], GroupRingElem.tau(F3).mult_matrix())
    ex = expand(complex_U(F3))
    assert ex.dims == (3, 3, 3, 3)
    want = [GroupRingElem.tau(F3, k).mult_matrix() for k in (1, 2, 2)]
    assert all(np.array_equal(a, b) for a, b in zip(ex.boundaries, want))


def _builtins(p):
    f = PrimeField(p)
    return [point_orbit(f), complex_U(f), complex_V(f)] + [lens(f, k) for k in range(6)]


@pytest.mark.parametrize("p", [3, 5])
def test_expanded_invariants(p, random_p3):
    cs = _builtins(p) + (random_p3 if p == 3 else [])
    for c in cs:
        ex = expand(c)
        for n, g in enumerate(ex.g_action):
            assert np.array_equal(gfp.matpow(g, p, p), np.eye(ex.dims[n], dtype=np.int64))
            # free action: (1 - g)^(p-1) has rank dims / p
            assert gfp.rank(gfp.matpow(ex.tau_op(n), p - 1, p), p) == ex.dims[n] // p
        for n in range(1, len(ex.dims)):
            d = ex.boundaries[n - 1]
            assert np.array_equal(gfp.matmul(ex.g_action[n - 1], d, p), gfp.matmul(d, ex.g_action[n], p))
            if n >= 2:
                assert not gfp.matmul(ex.boundaries[n - 2], d, p).any()


@pytest.mark.parametrize("p", PRIMES)
def test_homology_U(p):
    h = homology_equivariant(complex_U(PrimeField(p)))
    assert h.jordan_types == [{1: 1}, {}, {1: 1}, {2: 1}]


@pytest.mark.parametrize("p", PRIMES)
def test_homology_V(p):
    h = homology_equivariant(complex_V(PrimeField(p)))
    assert h.jordan_types == [{1: 1}, {2: 1}, {1: 1}]


def _lens_oracle(p, k):
    """Homology of the truncated resolution from kernels of tau and tau^(p-1) on R."""
    f = PrimeField(p)
    t1 = GroupRingElem.tau(f).mult_matrix()
    tn = GroupRingElem.tau(f, p - 1).mult_matrix()
    out = []
    for n in range(k + 1):
        d_n = t1 if n % 2 else tn
        ker = p - gfp.rank(d_n, p) if n else p
        if n < k:
            d_up = t1 if (n + 1) % 2 else tn
            ker -= gfp.rank(d_up, p)
        out.append(ker)
    return out


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("k", range(6))
def test_homology_lens(p, k):
    h = homology_equivariant(lens(PrimeField(p), k))
    assert h.equivariant_dims == _lens_oracle(p, k)
    if k % 2:
        assert h.jordan_types == [{1: 1}] + [{}] * (k - 1) + [{1: 1}]
    else:
        assert h.jordan_types[k] == ({p - 1: 1} if k else {p: 1})


@pytest.mark.parametrize("p", PRIMES)
def test_orbit_complex(p):
    f = PrimeField(p)
    for k in range(5):
        assert all(not b.any() for b in orbit_complex(lens(f, k)).boundaries)
        assert homology_orbit(lens(f, k)).orbit_dims == [1] * (k + 1)
    u, v = orbit_complex(complex_U(f)), orbit_complex(complex_V(f))
    assert u.dims == (1, 1, 1, 1) and all(not b.any() for b in u.boundaries)
    assert v.dims == (1, 2, 1) and all(not b.any() for b in v.boundaries)


@pytest.mark.parametrize("p", [3, 5])
def test_orbit_homology_of_joins_with_point(p):
    f = PrimeField(p)
    assert homology_orbit(join_with_point(complex_U(f))).reduced_orbit_dims == [0, 1, 1, 2, 2]
    assert homology_orbit(join_with_point(complex_V(f))).reduced_orbit_dims == [0, 1, 2, 1]


@pytest.mark.parametrize("p", PRIMES)
def test_orbit_projection(p):
    f = PrimeField(p)
    u = complex_U(f)
    for n in range(1, 4):
        assert not orbit_projection_induced(u, n).any()
    for c in _builtins(p):
        assert gfp.rank(orbit_projection_induced(c, 0), p) == 1
    for k in (1, 3, 5):
        c = lens(f, k)
        # chain level: the top cycles are multiples of the norm, which the quotient sends to p = 0
        z = gfp.kernel_basis(c.expanded.boundary(k), p)
        assert z.T.tolist() == [[1] * p]
        assert int(z.sum()) % p == 0
        assert not orbit_projection_induced(c, k).any()
    with pytest.raises(ValueError):
        orbit_projection_induced(u, 4)


def test_builtins():
    v = builtin_complex("V", 3)
    d1, d2 = v.boundaries
    assert not ring_matmul(d1, d2, 3).any()
    u = builtin_complex("U", 3)
    assert group_ring_mul(tau_power(2, 3), tau_power(2, 3), 3) == [0, 0, 0]
    assert validate(u) == []
    l0 = builtin_complex("lens", 3, k=0)
    pt = builtin_complex("point_orbit", 3)
    assert l0.ranks == pt.ranks and l0.boundaries == pt.boundaries == ()
    with pytest.raises(ValueError):
        builtin_complex("W", 3)
    with pytest.raises(ValueError):
        builtin_complex("lens", 3)
    with pytest.raises(ValueError):
        builtin_complex("lens", 3, k=-1)


@pytest.mark.parametrize("p", [3, 5])
def test_euler_characteristic(p, random_p3):
    cs = _builtins(p) + (random_p3 if p == 3 else [])
    for c in cs:
        h = homology(c)
        chi = euler_characteristic(c.ranks)
        assert euler_characteristic(c.expanded.dims) == p * chi
        assert euler_characteristic(h.equivariant_dims) == p * chi
        assert euler_characteristic(h.orbit_dims) == chi
        assert all(a <= b for a, b in zip(h.equivariant_dims, c.expanded.dims))
        assert all(a <= b for a, b in zip(h.orbit_dims, c.ranks))


def test_homology_dims_match_expanded_betti(random_p3):
    for c in random_p3:
        ex = c.expanded
        h = homology_equivariant(c)
        for n in range(len(ex.dims)):
            betti = ex.dims[n] - gfp.rank(ex.boundary(n), 3) - gfp.rank(ex.boundary(n + 1), 3)
            assert h.equivariant[n].dim == betti
            assert sum(s * k for s, k in jordan_type(h.equivariant[n]).items()) == betti
