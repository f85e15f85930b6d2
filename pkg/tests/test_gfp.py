import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpjoin import gfp
from zpjoin.gfp import NotInvariantError, PrimeField, subquotient
from zpjoin.rmod import tau_matrix

from oracles import brute_kernel, brute_rank, brute_solutions

F3, F5 = PrimeField(3), PrimeField(5)


@st.composite
def matrices(draw, max_side=6):
    p = draw(st.sampled_from([3, 5, 7]))
    rows = draw(st.integers(0, max_side))
    cols = draw(st.integers(0, max_side))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return p, np.array(entries, dtype=np.int64).reshape(rows, cols)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15, 0, -3])
def test_prime_field_rejects(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_prime_field_accepts_odd_primes():
    assert [PrimeField(p).p for p in (3, 5, 7, 11, 101)] == [3, 5, 7, 11, 101]


def test_rank_examples():
    assert gfp.rank(np.zeros((3, 3), dtype=np.int64), F3) == 0
    assert gfp.rank(np.eye(4, dtype=np.int64), F5) == 4
    # dim tauR = p - 1, confirmed by enumerating the column span
    t = tau_matrix(3)
    assert brute_rank(t, 3) == 2
    assert gfp.rank(t, F3) == 2


def test_solve_examples():
    b = np.array([2, 0, 1])
    assert np.array_equal(gfp.solve(np.eye(3, dtype=np.int64), b, F3), b)
    t = tau_matrix(3)
    # eps-sum 1 lies outside im(tau) = ker(eps)
    assert brute_solutions(t, [1, 0, 0], 3) == []
    assert gfp.solve(t, np.array([1, 0, 0]), F3) is None
    # tau^2 = (1, 1, 1) in F_3[Z/3]; the free-variable-zero solution is (1, 2, 0)
    x = gfp.solve(t, np.array([1, 1, 1]), F3)
    assert [tuple(v) for v in brute_solutions(t, [1, 1, 1], 3)].count(tuple(x)) == 1
    assert x.tolist() == [1, 2, 0]


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        gfp.solve(np.eye(3, dtype=np.int64), np.array([1, 2]), F3)


def test_kernel_examples():
    assert gfp.kernel_basis(np.eye(4, dtype=np.int64), F5).shape == (4, 0)
    assert np.array_equal(gfp.kernel_basis(np.zeros((2, 3), dtype=np.int64), F3), np.eye(3, dtype=np.int64))
    k = gfp.kernel_basis(tau_matrix(3), F3)
    assert k.T.tolist() == [[1, 1, 1]]
    assert len(brute_kernel(tau_matrix(3), 3)) == 3


def test_kernel_matches_enumeration():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = rng.integers(0, 3, size=(3, 4))
        k = gfp.kernel_basis(m, F3)
        assert 3 ** k.shape[1] == len(brute_kernel(m, 3))


@given(matrices())
def test_rank_nullity(pm):
    p, m = pm
    k = gfp.kernel_basis(m, p)
    assert gfp.rank(m, p) + k.shape[1] == m.shape[1]
    assert not gfp.matmul(m, k, p).any()
    assert gfp.rank(k, p) == k.shape[1]


@given(matrices(), st.integers(0, 2**32 - 1))
def test_solve_solvable(pm, seed):
    p, a = pm
    x0 = np.random.default_rng(seed).integers(0, p, size=a.shape[1])
    b = gfp.matmul(a, x0.reshape(-1, 1), p)[:, 0]
    x = gfp.solve(a, b, p)
    assert x is not None
    assert np.array_equal(gfp.matmul(a, x.reshape(-1, 1), p)[:, 0], b)


@given(matrices())
def test_deterministic(pm):
    p, m = pm
    assert np.array_equal(gfp.kernel_basis(m, p), gfp.kernel_basis(m.copy(), p))
    r1, piv1 = gfp.rref(m, p)
    r2, piv2 = gfp.rref(m, p)
    assert np.array_equal(r1, r2) and piv1 == piv2


def _random_subquotient(p, seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    z = rng.integers(0, p, size=(n, int(rng.integers(0, n + 1))))
    b = z @ rng.integers(0, p, size=(z.shape[1], int(rng.integers(0, 4))))
    return subquotient(z, b % p, PrimeField(p))


@given(st.sampled_from([3, 5]), st.integers(0, 2**32 - 1))
def test_subquotient_invariants(p, seed):
    sq = _random_subquotient(p, seed)
    rz = gfp.rank(sq.cycle_basis, p)
    rb = gfp.rank(sq.boundary_basis, p)
    assert sq.dim == rz - rb
    assert not gfp.matmul(sq.lift_map, sq.boundary_basis, p).any()
    assert np.array_equal(gfp.matmul(sq.lift_map, sq.quotient_reps, p), np.eye(sq.dim, dtype=np.int64))
    # lift vanishes exactly on B: kernel of lift restricted to Z has dimension rank(B)
    restricted = gfp.matmul(sq.lift_map, sq.cycle_basis, p)
    assert sq.cycle_basis.shape[1] - gfp.rank(restricted, p) == rb
    assert np.array_equal(gfp.induce_on_subquotient(np.eye(sq.ambient_dim, dtype=np.int64), sq),
                          np.eye(sq.dim, dtype=np.int64))
    assert not gfp.induce_on_subquotient(np.zeros((sq.ambient_dim,) * 2, dtype=np.int64), sq).any()


def test_subquotient_requires_containment():
    with pytest.raises(ValueError):
        subquotient(np.array([[1], [0]]), np.array([[0], [1]]), F3)


def test_induce_rejects_non_invariant():
    sq = subquotient(np.array([[1], [0]]), np.zeros((2, 0), dtype=np.int64), F3)
    swap = np.array([[0, 1], [1, 0]])
    with pytest.raises(NotInvariantError):
        gfp.induce_on_subquotient(swap, sq)


def test_inverse_roundtrip():
    rng = np.random.default_rng(0)
    for _ in range(10):
        m = rng.integers(0, 7, size=(5, 5))
        if gfp.rank(m, 7) == 5:
            assert np.array_equal(gfp.matmul(m, gfp.inverse(m, 7), 7), np.eye(5, dtype=np.int64))


@settings(max_examples=30)
@given(matrices())
def test_rank_matches_enumeration(pm):
    p, m = pm
    if p ** m.shape[1] > 5000:
        return
    assert gfp.rank(m, p) == brute_rank(m, p)
