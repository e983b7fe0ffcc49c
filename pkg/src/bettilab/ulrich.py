"""Ulrich sheaf data: cohomological certification, explicit examples on
rational normal curves and on the smooth quadric surface, and the
numerical identities for rank-2 bundles on polarized K3 surfaces.

A sheaf E on a k-dimensional X in P^r of degree d is Ulrich exactly when
H^q(E(-q)) = 0 for q > 0 and H^q(E(-q-1)) = 0 for q < k; it then has
h^0(E) = d * rank(E) sections.  The module data carried here is the
multiplication tensor H^0(O(1)) (x) H^0(E) -> H^0(E(1)) plus the
cohomology dimensions h^q(E(t)) for t in [-k-1, 1], which is everything
the matrix-of-linear-forms construction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import ParametricCurve, binary_mult_matrix


def _p1_h0(n: int) -> int:
    return max(n + 1, 0)


def _p1_h1(n: int) -> int:
    return max(-n - 1, 0)


@dataclass(eq=False)
class UlrichModuleData:
    """Graded data of a candidate Ulrich sheaf.

    mult[v] is the matrix of multiplication by the v-th coordinate from
    H^0(E) to H^0(E(1)); cohomology maps (q, t) to h^q(E(t)).
    """

    p: int
    k: int
    r: int
    d: int
    rank: int
    mult: tuple
    cohomology: dict
    label: str = "ulrich-module"
    sections: tuple = ()

    def __post_init__(self):
        if len(self.mult) != self.r + 1:
            raise ValueError("need one multiplication matrix per coordinate")
        shapes = {m.shape for m in self.mult}
        if len(shapes) != 1:
            raise ValueError(f"inconsistent multiplication shapes {shapes}")
        dim_b = self.mult[0].shape[1]
        if self.cohomology.get((0, 0)) not in (None, dim_b):
            raise ValueError("h^0(E) inconsistent with the multiplication tensor")
        for q in range(self.k + 1):
            for t in range(-self.k - 1, 2):
                if (q, t) not in self.cohomology:
                    raise ValueError(f"missing cohomology entry h^{q}(E({t}))")

    @property
    def h0(self) -> int:
        return self.mult[0].shape[1]

    def h(self, q: int, t: int) -> int:
        return self.cohomology[(q, t)]


@dataclass(frozen=True)
class CertifyReport:
    ulrich: bool
    conditions: tuple  # ((description, value, ok), ...)
    sections_ok: bool
    slope_criterion: str | None

    def render(self) -> str:
        lines = [f"ulrich: {self.ulrich}"]
        for desc, value, ok in self.conditions:
            lines.append(f"  {desc} = {value}  [{'ok' if ok else 'VIOLATED'}]")
        lines.append(f"  h^0(E) = d * rank  [{'ok' if self.sections_ok else 'VIOLATED'}]")
        if self.slope_criterion:
            lines.append(f"  {self.slope_criterion}")
        return "\n".join(lines)


def ulrich_certify(m: UlrichModuleData) -> CertifyReport:
    """Check the defining cohomology vanishings.

    For curves additionally reports the slope form of the criterion: a
    bundle of slope d + g - 1 is Ulrich iff h^0(E(-1)) = 0.
    """
    conditions = []
    ok = True
    for q in range(1, m.k + 1):
        v = m.h(q, -q)
        conditions.append((f"h^{q}(E({-q}))", v, v == 0))
        ok = ok and v == 0
    for q in range(m.k):
        v = m.h(q, -q - 1)
        conditions.append((f"h^{q}(E({-q - 1}))", v, v == 0))
        ok = ok and v == 0
    sections_ok = m.h0 == m.d * m.rank
    slope = None
    if m.k == 1:
        v = m.h(0, -1)
        slope = (f"curve slope criterion: h^0(E(-1)) = {v}, so a slope"
                 f" d+g-1 bundle is {'Ulrich' if v == 0 else 'not Ulrich'}")
    return CertifyReport(ok and sections_ok, tuple(conditions), sections_ok, slope)


def line_bundle_on_rational_curve(curve: ParametricCurve, e: int) -> UlrichModuleData:
    """O(e) pulled along the degree-d parametrization: sections are binary
    forms of degree e, multiplication is by the defining forms.  e = d - 1
    is the Ulrich twist (slope d + g - 1 at g = 0 and no sections after
    one negative twist)."""
    d, p = curve.d, curve.p
    mult = tuple(binary_mult_matrix(f, e, p) for f in curve.forms)
    coh = {(q, t): (_p1_h0 if q == 0 else _p1_h1)(e + t * d)
           for q in (0, 1) for t in range(-2, 2)}
    return UlrichModuleData(p=p, k=1, r=curve.r, d=d, rank=1, mult=mult,
                            cohomology=coh,
                            label=f"O({e}) on degree-{d} rational curve")


# Segre coordinates on the quadric P^1 x P^1 in P^3:
#   x_0 = s_0 t_0, x_1 = s_0 t_1, x_2 = s_1 t_0, x_3 = s_1 t_1,
# so the quadric is x_0 x_3 - x_1 x_2 = 0.
QUADRIC_COORDS = ((0, 0), (0, 1), (1, 0), (1, 1))


def quadric_form(x, p: int) -> int:
    return (int(x[0]) * int(x[3]) - int(x[1]) * int(x[2])) % p


def _bidegree_basis(a: int, b: int):
    return [(al, be) for al in range(a + 1) for be in range(b + 1)]


def sheaf_on_quadric(summands: tuple, p: int) -> UlrichModuleData:
    """Direct sum of line bundles O(a, b) on the quadric surface.

    The Ulrich sheaves of the two rulings are O(0, 1) and O(1, 0); their
    sum is the rank-2 special Ulrich bundle with determinant O(1, 1).
    """
    summands = tuple(tuple(ab) for ab in summands)
    dims_b = [ (a + 1) * (b + 1) for a, b in summands ]
    dims_b1 = [ (a + 2) * (b + 2) for a, b in summands ]
    mult = []
    for (u, v) in QUADRIC_COORDS:
        mat = np.zeros((sum(dims_b1), sum(dims_b)), dtype=np.int64)
        roff, coff = 0, 0
        for (a, b), db, db1 in zip(summands, dims_b, dims_b1):
            src = _bidegree_basis(a, b)
            tgt = { m: i for i, m in enumerate(_bidegree_basis(a + 1, b + 1)) }
            for col, (al, be) in enumerate(src):
                mat[roff + tgt[(al + u, be + v)], coff + col] = 1
            roff += db1
            coff += db
        mult.append(mat)
    coh = {}
    for q in (0, 1, 2):
        for t in range(-3, 2):
            total = 0
            for a, b in summands:
                aa, bb = a + t, b + t
                if q == 0:
                    total += _p1_h0(aa) * _p1_h0(bb)
                elif q == 1:
                    total += _p1_h0(aa) * _p1_h1(bb) + _p1_h1(aa) * _p1_h0(bb)
                else:
                    total += _p1_h1(aa) * _p1_h1(bb)
            coh[(q, t)] = total
    name = " + ".join(f"O{ab}" for ab in summands)
    return UlrichModuleData(p=p, k=2, r=3, d=2, rank=len(summands),
                            mult=tuple(mult), cohomology=coh,
                            label=f"{name} on the quadric surface")


# ---------------------------------------------------------------------------
# K3 numerics
# ---------------------------------------------------------------------------

def euler_pairing(a: int, b: int, s: int) -> int:
    """chi(E^dual (x) F) for Ulrich bundles of ranks 2a, 2b on a polarized
    K3 surface of degree 2s."""
    return -2 * a * b * s - 8 * a * b


@dataclass(frozen=True)
class UlrichNumerics:
    rank: int
    det_twist: int
    c2: int
    balance_check: int  # H . (c1 - (rank/2)(K + 3H)), zero on a K3
    special_c2: int | None  # (5/2) H^2 + 4 at rank 2

    def render(self) -> str:
        out = [f"rank {self.rank}, det = O({self.det_twist}), c2 = {self.c2}",
               f"determinant balance H.(c1 - (rk/2)(K+3H)) = {self.balance_check}"]
        if self.special_c2 is not None:
            out.append(f"special rank-2 value (5/2)H^2 + 4 = {self.special_c2}")
        return "\n".join(out)


def ulrich_numerics(a: int, s: int) -> UlrichNumerics:
    """Chern data of a rank-2a Ulrich bundle on a degree-2s polarized K3:
    det twist 3a and c2 = 9 a^2 s - 4a(s - 1); with K = 0 the determinant
    balance H.(c1 - (rk/2) 3H) vanishes identically."""
    if a < 1 or s < 1:
        raise ValueError("need a >= 1 and s >= 1")
    c2 = 9 * a * a * s - 4 * a * (s - 1)
    balance = (3 * a - 3 * a) * 2 * s
    special = 5 * s + 4 if a == 1 else None
    return UlrichNumerics(2 * a, 3 * a, c2, balance, special)


def ulrich_numerics_for_rank(rank: int, s: int) -> UlrichNumerics:
    """Numerics by total rank; odd ranks are obstructed on a K3 surface of
    Picard number one."""
    if rank % 2 != 0:
        raise ValueError(
            f"rank {rank} is impossible: on a K3 surface with Picard group "
            "generated by the hyperplane class, the determinant relation "
            "H.(c1(E) - (rank/2)(K + 3H)) = 0 forces c1(E) = (3 rank / 2) H, "
            "so no Ulrich bundle of odd rank exists")
    return ulrich_numerics(rank // 2, s)


def zero_cycle_length(n: int, s: int) -> int:
    """c2 of the n-th positive twist of a rank-2 special Ulrich bundle on
    a degree-2s K3: the length of the zero scheme of a general section."""
    if n < 0 or s < 1:
        raise ValueError("need n >= 0 and s >= 1")
    return 2 * n * n * s + 6 * s * n + 5 * s + 4


def zero_cycle_u(n: int, s: int) -> int:
    """The row index u for zero_cycle_length(n, s) points on the K3, i.e.
    the unique u with P(u-1) <= gamma < P(u) for P(t) = t^2 s + 2."""
    gamma = zero_cycle_length(n, s)
    k = 0
    while (k + 1) * (k + 1) * s <= gamma - 2:
        k += 1
    return k + 1
