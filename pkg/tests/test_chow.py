import numpy as np
import pytest

from bettilab import modp
from bettilab.chow import (ChowMatrix, chow_evaluate, compare_on_curve,
                           compare_on_quadric, curve_plane_meets,
                           point_from_plane_wedge, pullback_form,
                           quadric_plane_meets, sylvester_resultant, tate_phi,
                           verify_linear_strand)
from bettilab.curves import rational_normal_curve
from bettilab.exterior import wedge_coordinates
from bettilab.ulrich import (line_bundle_on_rational_curve, quadric_form,
                             sheaf_on_quadric)

P = modp.DEFAULT_PRIMES[0]


@pytest.fixture(scope="module")
def twisted_cubic_chow():
    curve = rational_normal_curve(3, P)
    data = line_bundle_on_rational_curve(curve, 2)
    return curve, data, tate_phi(data)


def test_twisted_cubic_solution_dimension(twisted_cubic_chow):
    _, _, cm = twisted_cubic_chow
    assert cm.n == 3 and cm.coeffs.shape == (6, 3, 3) and not cm.skew


def test_strand_composition_vanishes(twisted_cubic_chow):
    curve, data, cm = twisted_cubic_chow
    assert verify_linear_strand(cm, data)


def test_resultant_oracle_trivial_cases():
    curve = rational_normal_curve(3, P)
    # x0 = x3 = 0 misses the twisted cubic: resultant of s^3, t^3 is a unit
    l_miss = [[1, 0, 0, 0], [0, 0, 0, 1]]
    assert not curve_plane_meets(curve, l_miss)
    # x1 = x2 = 0 meets it at the two coordinate points
    l_hit = [[0, 1, 0, 0], [0, 0, 1, 0]]
    assert curve_plane_meets(curve, l_hit)


def test_chow_evaluate_membership(twisted_cubic_chow):
    curve, _, cm = twisted_cubic_chow
    assert chow_evaluate(cm, [[1, 0, 0, 0], [0, 0, 0, 1]]) != 0
    assert chow_evaluate(cm, [[0, 1, 0, 0], [0, 0, 1, 0]]) == 0
    # plane through a sampled curve point
    q = curve.evaluate(1, 12345)
    forms = []
    # two independent forms vanishing at q
    forms.append([q[1], (-q[0]) % P, 0, 0])
    forms.append([0, 0, q[3], (-q[2]) % P])
    assert chow_evaluate(cm, forms) == 0


def test_chow_evaluate_rejects_dependent_forms(twisted_cubic_chow):
    _, _, cm = twisted_cubic_chow
    with pytest.raises(ValueError):
        chow_evaluate(cm, [[1, 2, 3, 4], [2, 4, 6, 8]])


def test_chow_scaling_homogeneity(twisted_cubic_chow):
    _, _, cm = twisted_cubic_chow
    rng = np.random.default_rng(0)
    base = rng.integers(0, P, size=(2, 4)).astype(np.int64)
    lam = 987654321
    scaled = base.copy()
    scaled[0] = scaled[0] * lam % P
    v0 = chow_evaluate(cm, base)
    v1 = chow_evaluate(cm, scaled)
    assert v1 == v0 * pow(lam, cm.n, P) % P


def test_compare_rational_normal_curves_ratio_constant():
    for d in (3, 4):
        curve = rational_normal_curve(d, P)
        cm = tate_phi(line_bundle_on_rational_curve(curve, d - 1))
        report = compare_on_curve(cm, curve, 40, np.random.default_rng(d))
        assert report.ok and report.ratio is not None


def test_quadric_rank1_det_is_the_quadric():
    cm = tate_phi(sheaf_on_quadric(((0, 1),), P))
    assert cm.n == 2 and not cm.skew
    report = compare_on_quadric(cm, 40, np.random.default_rng(1))
    assert report.ok and report.ratio is not None


def test_quadric_rank2_skew_pfaffian():
    cm = tate_phi(sheaf_on_quadric(((0, 1), (1, 0)), P))
    assert cm.n == 4 and cm.skew
    for t in range(cm.coeffs.shape[0]):
        assert not np.any((cm.coeffs[t] + cm.coeffs[t].T) % P)
        assert not np.any(cm.coeffs[t].diagonal())
    report = compare_on_quadric(cm, 40, np.random.default_rng(2))
    assert report.ok
    # pfaffian squared is the determinant at sampled planes
    rng = np.random.default_rng(3)
    for _ in range(10):
        forms = rng.integers(0, P, size=(3, 4)).astype(np.int64)
        if modp.rank(forms, P) < 3:
            continue
        w = wedge_coordinates(forms, P)
        mat = cm.matrix_at_wedge(w)
        assert modp.pfaffian(mat, P) ** 2 % P == modp.det(mat, P)


def test_point_from_plane_wedge_consistency():
    rng = np.random.default_rng(4)
    forms = rng.integers(0, P, size=(3, 4)).astype(np.int64)
    w = wedge_coordinates(forms, P)
    pt = point_from_plane_wedge(w, P)
    assert np.any(pt)
    assert not np.any(modp.matmul(forms, pt.reshape(-1, 1), P))


def test_quadric_membership_degenerate_pencil():
    # three dependent planes cut a line, which always meets the quadric
    forms = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]]
    assert quadric_plane_meets(forms, P)


def test_sylvester_resultant_basics():
    # s^3 and t^3 are coprime; s^2 t and s t^2 share two roots
    assert sylvester_resultant([1, 0, 0, 0], [0, 0, 0, 1], P) != 0
    assert sylvester_resultant([0, 1, 0, 0], [0, 0, 1, 0], P) == 0
    # degree drop in both forms: common root at a coordinate point
    assert sylvester_resultant([0, 1, 2, 1], [0, 3, 1, 4], P) == 0


def test_chow_matrix_serialization(twisted_cubic_chow):
    _, _, cm = twisted_cubic_chow
    again = ChowMatrix.from_json(cm.to_json())
    assert np.array_equal(again.coeffs, cm.coeffs) and again.n == cm.n
    assert "matrix of linear forms" in cm.render()


def test_pullback_form_degree():
    curve = rational_normal_curve(4, P)
    g = pullback_form(curve, [1, 2, 3, 4, 5])
    assert g.shape == (5,) and g[0] == 1 and g[4] == 5
