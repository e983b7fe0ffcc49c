import numpy as np
import pytest

from bettilab import modp
from bettilab.betti import (BettiTable, betti_table, brute_force_betti,
                            regularity)
from bettilab.errors import OracleSizeError
from bettilab.points import PointSet

P = modp.DEFAULT_PRIMES[0]
P2 = modp.DEFAULT_PRIMES[1]


def test_one_point_in_p1():
    ps = PointSet(P, 1, ((1, 0),))
    t = betti_table(ps)
    assert t.entry(0, 0) == 1 and t.entry(1, 0) == 1
    assert sum(sum(row) for row in t.entries) == 2
    assert regularity(t) == 0


def test_one_point_in_p2_brute_force():
    ps = PointSet(P, 2, ((1, 2, 3),))
    t = brute_force_betti(ps)
    assert t.entry(1, 0) == 2 and t.entry(2, 0) == 1
    assert betti_table(ps).same_table(t)


def test_five_general_points_in_p2():
    ps = PointSet.random(2, 5, P, np.random.default_rng(0))
    t = betti_table(ps)
    expect = {(0, 0): 1, (1, 1): 1, (1, 2): 2, (2, 2): 2}
    for i in range(4):
        for j in range(t.jmax + 1):
            assert t.entry(i, j) == expect.get((i, j), 0)
    assert regularity(t) == 2
    assert brute_force_betti(ps).same_table(t)


def test_three_collinear_points_pin_convention():
    # points on the line x0 = 0; complete intersection of a line and a cubic
    ps = PointSet(P, 2, ((0, 1, 1), (0, 1, 2), (0, 1, 5)))
    koszul = betti_table(ps)
    oracle = brute_force_betti(ps)
    assert koszul.same_table(oracle)
    assert koszul.entry(1, 0) == 1
    assert koszul.entry(1, 2) == 1
    assert koszul.entry(2, 2) == 1


def test_oracle_matches_on_random_instances():
    rng = np.random.default_rng(42)
    for r, gamma in [(1, 3), (2, 4), (2, 9), (3, 6), (3, 11)]:
        ps = PointSet.random(r, gamma, P, rng)
        assert betti_table(ps).same_table(brute_force_betti(ps))


def test_oracle_envelope_guard():
    ps = PointSet.random(3, 31, P, np.random.default_rng(1))
    with pytest.raises(OracleSizeError):
        brute_force_betti(ps)


def test_hilbert_euler_identity():
    ps = PointSet.random(2, 8, P, np.random.default_rng(3))
    t = betti_table(ps)
    for deg, h in enumerate(t.hilbert):
        assert t.hilbert_from_resolution(deg) == h


def test_table_invariant_under_lift_rescaling():
    rng = np.random.default_rng(4)
    ps = PointSet.random(2, 7, P, rng)
    t1 = betti_table(ps)
    t2 = betti_table(ps.rescaled(rng.integers(1, P, size=ps.gamma)))
    assert t1.same_table(t2) and t1.hilbert == t2.hilbert


def test_two_prime_agreement_same_configuration():
    t1 = betti_table(PointSet.random(2, 9, P, np.random.default_rng(5)))
    t2 = betti_table(PointSet.random(2, 9, P2, np.random.default_rng(5)))
    assert t1.same_table(t2)


def test_render_json_csv_roundtrip():
    ps = PointSet.random(2, 5, P, np.random.default_rng(6))
    t = betti_table(ps, meta={"sampled": True})
    text = t.render()
    assert "hilbert:" in text and "semicontinuity" in text
    again = BettiTable.from_json(t.to_json())
    assert again.same_table(t) and again.hilbert == t.hilbert
    csv_text = t.to_csv()
    assert csv_text.splitlines()[0].startswith("j,b0,b1")


def test_points_on_a_line_in_p3():
    # higher-codimension special position still matches the oracle
    pts = tuple((1, k, 0, 0) for k in (2, 5, 11, 17))
    ps = PointSet(P, 3, pts)
    assert betti_table(ps).same_table(brute_force_betti(ps))
