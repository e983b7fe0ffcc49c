import numpy as np
import pytest

from bettilab import modp
from bettilab.points import (PointSet, PointRingSlices, evaluation_matrix,
                             graded_piece, hilbert_function, monomial_basis)

P = modp.DEFAULT_PRIMES[0]


def test_monomial_basis_examples():
    assert monomial_basis(1, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomial_basis(2, 1)) == 3
    assert len(monomial_basis(3, 3)) == 20


def test_monomial_basis_is_graded_lex():
    basis = monomial_basis(2, 3)
    assert all(sum(m) == 3 for m in basis)
    assert list(basis) == sorted(basis, reverse=True)


def test_pointset_rejects_degenerate_input():
    with pytest.raises(ValueError):
        PointSet(101, 1, ((0, 0),))
    with pytest.raises(ValueError):
        PointSet(101, 1, ((1, 2), (2, 4)))  # projectively equal
    with pytest.raises(ValueError):
        PointSet(101, 2, ((1, 2),))


def test_evaluation_matrix_examples():
    ps = PointSet(101, 1, ((1, 0), (0, 1)))
    assert evaluation_matrix(ps, 1).tolist() == [[1, 0], [0, 1]]
    assert evaluation_matrix(ps, 0).tolist() == [[1, 1]]


def test_five_random_points_impose_independent_conditions():
    for seed in range(5):
        ps = PointSet.random(2, 5, P, np.random.default_rng(seed))
        assert hilbert_function(ps, 1) == 3
        assert hilbert_function(ps, 2) == 5


def test_hilbert_function_monotone_and_stabilizes():
    ps = PointSet.random(2, 7, P, np.random.default_rng(1))
    values = [hilbert_function(ps, j) for j in range(6)]
    assert values == sorted(values)
    assert values[-1] == ps.gamma
    assert values[-2] == ps.gamma


def test_graded_piece_dimension_and_degree_zero():
    ps = PointSet.random(2, 6, P, np.random.default_rng(2))
    piece0 = graded_piece(ps, 0)
    assert piece0.dim == 1
    # degree-0 slice is spanned by the all-ones vector
    ones = np.ones(ps.gamma, dtype=np.int64)
    assert modp.rank(np.vstack([piece0.basis, ones]), P) == 1
    for j in range(4):
        assert graded_piece(ps, j).dim == hilbert_function(ps, j)


def test_multiplication_closure():
    ps = PointSet.random(2, 6, P, np.random.default_rng(3))
    piece1, piece2 = graded_piece(ps, 1), graded_piece(ps, 2)
    ell = (ps.coords() @ np.array([2, 3, 5])) % P  # values of a linear form
    product = piece1.basis * ell[None, :] % P
    assert modp.rank(np.vstack([piece2.basis, product]), P) == piece2.dim


def test_rank_invariance_under_rescaling():
    rng = np.random.default_rng(4)
    ps = PointSet.random(2, 8, P, rng)
    scal = rng.integers(1, P, size=ps.gamma)
    ps2 = ps.rescaled(scal)
    for j in range(4):
        assert hilbert_function(ps, j) == hilbert_function(ps2, j)


def test_multiplication_matrices_consistent():
    ps = PointSet.random(2, 6, P, np.random.default_rng(5))
    slices = PointRingSlices(ps)
    src, tgt = slices.piece(1), slices.piece(2)
    for v, mat in enumerate(slices.mult(1)):
        # coordinates recombine to the honest value vectors
        recon = modp.matmul(mat.T, tgt.basis, P)
        direct = src.basis * ps.coords()[:, v][None, :] % P
        assert np.array_equal(recon, direct)


def test_json_roundtrip():
    ps = PointSet.random(3, 4, P, np.random.default_rng(6))
    again = PointSet.from_json(ps.to_json())
    assert again == ps


def test_random_points_same_configuration_across_primes():
    a = PointSet.random(2, 5, modp.DEFAULT_PRIMES[0], np.random.default_rng(7))
    b = PointSet.random(2, 5, modp.DEFAULT_PRIMES[1], np.random.default_rng(7))
    assert a.points == b.points
