import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from bettilab import modp

P = 101
PRIMES = (101, 10007, modp.DEFAULT_PRIMES[0])


def test_default_primes_are_prime_31_bit():
    for p in modp.DEFAULT_PRIMES:
        assert modp.is_probable_prime(p)
        assert 1 << 30 < p < 1 << 31


def test_rank_identity_and_zero():
    assert modp.rank(np.eye(3, dtype=np.int64), P) == 3
    assert modp.rank(np.zeros((4, 7), dtype=np.int64), P) == 0


def test_rank_proportional_rows():
    assert modp.rank([[1, 2], [2, 4]], P) == 1


def test_nullspace_trivial_and_full():
    assert modp.nullspace(np.eye(2, dtype=np.int64), 7).shape[0] == 0
    assert modp.nullspace(np.zeros((1, 3), dtype=np.int64), 7).shape[0] == 3


def test_nullspace_single_relation_normal_form():
    basis = modp.nullspace([[1, 1, 0]], 7)
    assert basis.tolist() == [[6, 1, 0], [0, 0, 1]]


def test_det_examples():
    assert modp.det(np.eye(3, dtype=np.int64), P) == 1
    assert modp.det([[0, 1], [1, 0]], P) == P - 1
    assert modp.det(np.diag([2, 3, 4]), P) == 24
    with pytest.raises(ValueError):
        modp.det(np.zeros((2, 3), dtype=np.int64), P)


def test_pfaffian_2x2_and_4x4():
    a = 17
    assert modp.pfaffian([[0, a], [-a, 0]], P) == a
    rng = np.random.default_rng(0)
    m = np.zeros((4, 4), dtype=np.int64)
    idx = np.triu_indices(4, 1)
    m[idx] = rng.integers(0, P, size=6)
    m = (m - m.T) % P
    expected = (m[0, 1] * m[2, 3] - m[0, 2] * m[1, 3] + m[0, 3] * m[1, 2]) % P
    assert modp.pfaffian(m, P) == expected


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ValueError):
        modp.pfaffian(np.zeros((3, 3), dtype=np.int64), P)
    with pytest.raises(ValueError):
        modp.pfaffian([[1, 2], [2, 1]], P)


def _random_matrix(rng, rows, cols, p):
    return rng.integers(0, p, size=(rows, cols)).astype(np.int64)


@given(st.integers(0, 2**32 - 1), st.integers(1, 7), st.integers(1, 7),
       st.sampled_from(PRIMES))
@settings(max_examples=60, deadline=None)
def test_rank_transpose_and_rank_nullity(seed, rows, cols, p):
    m = _random_matrix(np.random.default_rng(seed), rows, cols, p)
    r = modp.rank(m, p)
    assert r == modp.rank(m.T, p)
    ns = modp.nullspace(m, p)
    assert ns.shape[0] + r == cols
    if ns.shape[0]:
        assert not np.any(modp.matmul(m, ns.T, p))


@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.sampled_from(PRIMES))
@settings(max_examples=40, deadline=None)
def test_pfaffian_squares_to_determinant(seed, half, p):
    n = 2 * half
    rng = np.random.default_rng(seed)
    m = np.zeros((n, n), dtype=np.int64)
    idx = np.triu_indices(n, 1)
    m[idx] = rng.integers(0, p, size=idx[0].size)
    m = (m - m.T) % p
    pf = modp.pfaffian(m, p)
    assert pf * pf % p == modp.det(m, p)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=20, deadline=None)
def test_determinism(seed):
    m = _random_matrix(np.random.default_rng(seed), 6, 9, P)
    assert modp.rank(m, P) == modp.rank(m.copy(), P)
    a = modp.nullspace(m, P)
    b = modp.nullspace(m.copy(), P)
    assert np.array_equal(a, b)


def test_solve_roundtrip():
    rng = np.random.default_rng(3)
    a = _random_matrix(rng, 5, 7, P)
    x0 = rng.integers(0, P, size=7).astype(np.int64)
    b = modp.matmul(a, x0.reshape(-1, 1), P).reshape(-1)
    x = modp.solve(a, b, P)
    assert x is not None
    assert np.array_equal(modp.matmul(a, x.reshape(-1, 1), P).reshape(-1), b)
    assert modp.solve([[1, 0], [1, 0]], [1, 2], P) is None


def test_sqrt_mod():
    for p in (2147483647, 2147483629):
        for a in (2, 5, 123456789):
            r = modp.sqrt_mod(a * a % p, p)
            assert r is not None and r * r % p == a * a % p
    assert modp.sqrt_mod(0, 101) == 0
    # 2 is a non-residue mod 101? 2^50 mod 101 == 100, so yes
    assert pow(2, 50, 101) == 100 and modp.sqrt_mod(2, 101) is None


def test_random_prime_31_seeded():
    rng = np.random.default_rng(11)
    q = modp.random_prime_31(rng)
    assert modp.is_probable_prime(q) and 1 << 30 <= q < 1 << 31
    assert modp.random_prime_31(np.random.default_rng(11)) == q


def test_matmul_large_prime_no_overflow():
    p = modp.DEFAULT_PRIMES[0]
    rng = np.random.default_rng(5)
    a = rng.integers(0, p, size=(20, 30)).astype(np.int64)
    b = rng.integers(0, p, size=(30, 10)).astype(np.int64)
    got = modp.matmul(a, b, p)
    want = np.array([[int(sum(int(x) * int(y) for x, y in zip(ra, cb)) % p)
                      for cb in b.T] for ra in a], dtype=np.int64)
    assert np.array_equal(got, want)
