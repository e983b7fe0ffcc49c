"""Explicit curve constructions over F_p.

Two families power the experiments:

* parametric rational curves P^1 -> P^r given by r+1 binary forms of a
  common degree d (rational normal curves, monomial curves, random
  curves), with splitting-type detection for the restricted twisted
  tangent bundle and point sampling for the Betti engine;

* hyperelliptic curves y^2 = f(x) with deg f = 2g + 1, carrying exact
  divisor arithmetic and a Riemann-Roch space computed by linear algebra
  on valuation constraints.  These drive the degree-2 pencil
  constructions: the syzygy bundle of the re-embedding through the
  degree-r Veronese of the pencil splits as a sum of copies of the dual
  pencil, so both extra Betti rows of a point divisor reduce to h^0 and
  h^1 of explicit divisor classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

import numpy as np

from . import modp
from .errors import InvariantError
from .points import PointSet


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    inv = modp.inv_mod(b[-1], p)
    while len(a) >= len(b):
        lead = a[-1] * inv % p
        shift = len(a) - len(b)
        a = _poly_trim([(x - lead * b[i - shift]) % p if i >= shift else x
                        for i, x in enumerate(a)])
    return a


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def binary_form_values(coeffs: np.ndarray, s: int, t: int, p: int) -> int:
    """coeffs[k] multiplies s^(d-k) t^k."""
    d = len(coeffs) - 1
    total, sp, tp = 0, [1], [1]
    for _ in range(d):
        sp.append(sp[-1] * s % p)
        tp.append(tp[-1] * t % p)
    for k, c in enumerate(coeffs):
        total = (total + int(c) * sp[d - k] % p * tp[k]) % p
    return total


def binary_mult_matrix(coeffs, src_deg: int, p: int) -> np.ndarray:
    """Multiplication by a binary form as a matrix from degree src_deg
    coefficients to degree src_deg + deg(form)."""
    coeffs = np.mod(np.asarray(coeffs, dtype=np.int64), p)
    d = len(coeffs) - 1
    out = np.zeros((src_deg + d + 1, src_deg + 1), dtype=np.int64)
    for k, c in enumerate(coeffs):
        if c:
            for m in range(src_deg + 1):
                out[k + m, m] = c
    return out


# ---------------------------------------------------------------------------
# parametric rational curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParametricCurve:
    """P^1 -> P^r over F_p by r+1 linearly independent binary forms of
    degree d with no common zero (base-point-free, nondegenerate)."""

    p: int
    r: int
    d: int
    forms: tuple[tuple[int, ...], ...]  # forms[v][k] multiplies s^(d-k) t^k

    def __post_init__(self):
        forms = tuple(tuple(int(c) % self.p for c in f) for f in self.forms)
        object.__setattr__(self, "forms", forms)
        if len(forms) != self.r + 1 or any(len(f) != self.d + 1 for f in forms):
            raise ValueError("need r+1 binary forms of degree d")
        if modp.rank(np.array(forms, dtype=np.int64), self.p) != self.r + 1:
            raise ValueError("degenerate image: forms are linearly dependent")
        # base point at [0:1] iff every coefficient of t^d vanishes;
        # affine base point iff the dehomogenizations share a root
        if all(f[self.d] == 0 for f in forms):
            raise ValueError("base point at [0:1]")
        g = list(forms[0])
        for f in forms[1:]:
            g = poly_gcd(g, list(f), self.p)
        if len(_poly_trim(g)) - 1 >= 1:
            raise ValueError("base locus: forms share a common factor")

    def form_matrix(self) -> np.ndarray:
        return np.array(self.forms, dtype=np.int64)

    def evaluate(self, s: int, t: int) -> tuple[int, ...]:
        return tuple(binary_form_values(np.array(f, dtype=np.int64), s, t, self.p)
                     for f in self.forms)

    def to_json(self) -> str:
        return json.dumps({"kind": "parametric", "p": self.p, "r": self.r,
                           "d": self.d, "forms": [list(f) for f in self.forms]})

    @classmethod
    def from_json(cls, text: str) -> "ParametricCurve":
        d = json.loads(text)
        assert d["kind"] == "parametric"
        return cls(d["p"], d["r"], d["d"], tuple(tuple(f) for f in d["forms"]))


def rational_normal_curve(r: int, p: int) -> ParametricCurve:
    forms = tuple(tuple(1 if k == v else 0 for k in range(r + 1))
                  for v in range(r + 1))
    return ParametricCurve(p, r, r, forms)


def monomial_curve(exponents: tuple[int, ...], p: int) -> ParametricCurve:
    """Curve (..., s^e t^(d-e), ...) for the given distinct s-exponents;
    d is the maximum exponent."""
    d = max(exponents)
    if sorted(set(exponents)) != sorted(exponents):
        raise ValueError("repeated exponent")
    forms = tuple(tuple(1 if k == d - e else 0 for k in range(d + 1))
                  for e in exponents)
    return ParametricCurve(p, len(exponents) - 1, d, forms)


def random_rational_curve(r: int, d: int, p: int, rng) -> ParametricCurve:
    """Random degree-d curve in P^r; coefficients drawn below 2**30 so a
    seed names the same integral curve under every 31-bit prime."""
    while True:
        forms = tuple(tuple(int(x) for x in rng.integers(0, 1 << 30, size=d + 1))
                      for _ in range(r + 1))
        try:
            return ParametricCurve(p, r, d, forms)
        except ValueError:
            continue


@dataclass(frozen=True)
class SplittingType:
    """Degrees a_1 <= ... <= a_r of the line-bundle summands of the
    restricted twisted tangent bundle; the syzygy bundle of the
    parametrization is the dual, a sum of O(-a_i)."""

    a: tuple[int, ...]

    @property
    def balanced(self) -> bool:
        return self.a[-1] - self.a[0] <= 1

    def render(self) -> str:
        duals = ", ".join(f"O({-x})" for x in self.a)
        return (f"splitting type {self.a} "
                f"({'balanced' if self.balanced else 'UNBALANCED'}); "
                f"syzygy bundle {duals}")


def splitting_type(curve: ParametricCurve) -> SplittingType:
    """Recover the splitting type from kernel dimensions.

    k(m) = dim ker(V (x) H^0(O(m)) -> H^0(O(d+m))) counts sections of the
    twisted syzygy bundle, so the second differences of m -> k(m) count
    the summands of each degree.
    """
    p, r, d = curve.p, curve.r, curve.d
    counts: list[int] = []
    found = 0
    kernel = [0, 0]  # k(m-2), k(m-1)
    m = 0
    while found < r and m <= d:
        blocks = [binary_mult_matrix(f, m, p) for f in curve.forms]
        mat = np.hstack(blocks)
        k_m = mat.shape[1] - modp.rank(mat, p)
        c = k_m - 2 * kernel[1] + kernel[0]
        counts.append(c)
        found += c
        kernel = [kernel[1], k_m]
        m += 1
    a: list[int] = []
    for deg, c in enumerate(counts):
        a.extend([deg] * c)
    if len(a) != r or sum(a) != d:
        raise InvariantError("splitting-type-sum",
                             f"recovered {a}, expected r={r} parts summing to {d}")
    return SplittingType(tuple(a))


def sample_points(curve: ParametricCurve, gamma: int, seed_rng) -> PointSet:
    """gamma distinct points on the curve from seeded random parameters,
    rejecting projective coincidences.  Parameters are drawn below 2**30,
    so a seed names the same configuration under every 31-bit prime."""
    from .points import _normalize_point

    pts: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    attempts = 0
    while len(pts) < gamma:
        attempts += 1
        if attempts > 200 * (gamma + 1):
            raise ValueError("insufficient distinct curve points")
        t = int(seed_rng.integers(0, 1 << 30))
        q = curve.evaluate(1, t)
        if not any(q):
            continue
        canon = _normalize_point(q, curve.p)
        if canon in seen:
            continue
        seen.add(canon)
        pts.append(q)
    return PointSet(curve.p, curve.r, tuple(pts))


class CurveRingSlices:
    """Graded slices of the homogeneous coordinate ring of the image
    curve: degree-j slice is the span of j-fold products of the defining
    forms inside the binary forms of degree j*d."""

    def __init__(self, curve: ParametricCurve):
        self.curve = curve
        self.n = curve.r + 1
        self.p = curve.p
        self._bases: dict[int, tuple[np.ndarray, tuple[int, ...]]] = {}
        self._mults: dict[int, list[np.ndarray]] = {}

    def _piece(self, j: int):
        if j not in self._bases:
            p, d = self.p, self.curve.d
            if j == 0:
                basis = np.ones((1, 1), dtype=np.int64)
                self._bases[0] = (basis, (0,))
            else:
                prev, _ = self._piece(j - 1)
                rows = []
                for f in self.curve.forms:
                    m = binary_mult_matrix(f, (j - 1) * d, p)
                    rows.append(modp.matmul(prev, m.T, p))
                red, piv = modp.rref(np.vstack(rows), p)
                self._bases[j] = (red[:len(piv)].copy(), tuple(piv))
        return self._bases[j]

    def dim(self, j: int) -> int:
        if j < 0:
            return 0
        return self._piece(j)[0].shape[0]

    def mult(self, j: int) -> list[np.ndarray]:
        if j not in self._mults:
            p, d = self.p, self.curve.d
            src, _ = self._piece(j)
            tgt, piv = self._piece(j + 1)
            mats = []
            for f in self.curve.forms:
                m = binary_mult_matrix(f, j * d, p)
                prod = modp.matmul(src, m.T, p)
                mats.append(prod[:, list(piv)].T.copy())
            self._mults[j] = mats
        return self._mults[j]


def curve_betti_table(curve: ParametricCurve, j_hi: int | None = None):
    """Betti table of the image curve's coordinate ring."""
    from .betti import betti_from_module
    return betti_from_module(CurveRingSlices(curve), curve.p, j_hi=j_hi,
                             meta={"source": "curve-ring", "d": curve.d})


# ---------------------------------------------------------------------------
# hyperelliptic curves and divisors
# ---------------------------------------------------------------------------

INFINITY = "inf"


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(x) with f squarefree of degree 2g+1 over F_p (one point at
    infinity, a Weierstrass point).  The canonical class is (2g-2) * inf
    and the degree-2 pencil is cut by x, i.e. the class of 2 * inf."""

    p: int
    g: int
    f: tuple[int, ...]  # coefficients, ascending, degree 2g+1

    def __post_init__(self):
        f = tuple(int(c) % self.p for c in self.f)
        object.__setattr__(self, "f", f)
        if self.p % 2 == 0 or not modp.is_probable_prime(self.p):
            raise ValueError("p must be an odd prime")
        if len(f) != 2 * self.g + 2 or f[-1] == 0:
            raise ValueError(f"f must have degree exactly {2 * self.g + 1}")
        der = [c * k % self.p for k, c in enumerate(f)][1:]
        if len(_poly_trim(poly_gcd(list(f), der, self.p))) - 1 >= 1:
            raise ValueError("f must be squarefree")

    def f_at(self, x: int) -> int:
        total = 0
        for c in reversed(self.f):
            total = (total * x + c) % self.p
        return total

    def on_curve(self, x: int, y: int) -> bool:
        return y * y % self.p == self.f_at(x)

    def random_point(self, rng) -> tuple[int, int]:
        while True:
            x = int(rng.integers(0, self.p))
            root = modp.sqrt_mod(self.f_at(x), self.p)
            if root is None:
                continue
            y = root if int(rng.integers(0, 2)) == 0 else (-root) % self.p
            return (x, y)

    def to_json(self) -> str:
        return json.dumps({"kind": "hyperelliptic", "p": self.p,
                           "g": self.g, "f": list(self.f)})

    @classmethod
    def from_json(cls, text: str) -> "HyperellipticCurve":
        d = json.loads(text)
        assert d["kind"] == "hyperelliptic"
        return cls(d["p"], d["g"], tuple(d["f"]))

    @classmethod
    def random(cls, g: int, p: int, rng) -> "HyperellipticCurve":
        while True:
            coeffs = [int(x) for x in rng.integers(0, 1 << 30, size=2 * g + 1)] + [1]
            try:
                return cls(p, g, tuple(coeffs))
            except ValueError:
                continue


class Divisor:
    """Formal integer combination of affine points (x, y) and the point
    at infinity ("inf")."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def of_points(cls, points, mult: int = 1) -> "Divisor":
        d: dict = {}
        for q in points:
            d[q] = d.get(q, 0) + mult
        return cls(d)

    @classmethod
    def infinity(cls, mult: int = 1) -> "Divisor":
        return cls({INFINITY: mult})

    def __add__(self, other: "Divisor") -> "Divisor":
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d.get(k, 0) + v
        return Divisor(d)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "Divisor":
        return Divisor({k: v * c for k, v in self.coeffs.items()})

    @property
    def degree(self) -> int:
        return sum(self.coeffs.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Divisor({self.coeffs!r})"


def _sqrt_series(curve: HyperellipticCurve, x0: int, y0: int, order: int) -> list[int]:
    """Taylor coefficients of y = sqrt(f(x0 + t)) with y(0) = y0 != 0."""
    p = curve.p
    fs = _taylor_shift(curve.f, x0, p)
    ys = [y0 % p]
    inv2y0 = modp.inv_mod(2 * y0 % p, p)
    for n in range(1, order):
        conv = sum(ys[i] * ys[n - i] for i in range(1, n)) % p
        fn = fs[n] if n < len(fs) else 0
        ys.append((fn - conv) % p * inv2y0 % p)
    return ys


def _x_series_at_weierstrass(curve: HyperellipticCurve, x0: int, order: int) -> list[int]:
    """Coefficients of x(t) - x0 where t = y is the local parameter at the
    ramification point (x0, 0); solves f(x0 + s(t)) = t^2 iteratively."""
    p = curve.p
    fs = _taylor_shift(curve.f, x0, p)  # fs[0] == 0, fs[1] = f'(x0) != 0
    inv_f1 = modp.inv_mod(fs[1], p)
    s = [0] * order
    for n in range(1, order):
        # coefficient of t^n in sum_m fs[m] * s(t)^m, excluding the fs[1]*s_n term
        acc = 0
        powers = [0] * order
        powers[0] = 1  # s^0
        cur = [1] + [0] * (order - 1)
        for m in range(1, min(n, len(fs) - 1) + 1):
            cur = _series_mul(cur, s, order, p)
            if m >= 2 and m < len(fs):
                acc = (acc + fs[m] * cur[n]) % p
        target = 1 if n == 2 else 0
        s[n] = (target - acc) % p * inv_f1 % p
    return s


def _taylor_shift(coeffs, x0: int, p: int) -> list[int]:
    """Coefficients of f(x0 + t) in t."""
    out = [0] * len(coeffs)
    for c in reversed(list(coeffs)):
        carry = 0
        for i in range(len(out) - 1, 0, -1):
            out[i] = (out[i] * x0 + out[i - 1]) % p
        out[0] = (out[0] * x0 + int(c)) % p
    return out


def _series_mul(a: list[int], b: list[int], order: int, p: int) -> list[int]:
    out = [0] * order
    for i, ai in enumerate(a):
        if ai and i < order:
            for j, bj in enumerate(b):
                if i + j >= order:
                    break
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def h0_divisor(curve: HyperellipticCurve, D: Divisor) -> int:
    """dim L(D) = dim { h = poly(x) + poly(x) y : div(h) + D >= 0 }.

    Poles at affine points are cleared by a polynomial phi(x) vanishing
    to sufficient order at every x-fiber of the positive part, turning
    membership into (1) degree bounds at infinity, where the monomials
    x^a and x^b y have the distinct valuations -2a and -2b - (2g+1), and
    (2) local vanishing conditions read off t-adic series expansions at
    the finitely many affine constraint points.  h^0 is then a nullspace
    dimension.
    """
    p, g = curve.p, curve.g
    for q in D.coeffs:
        if q == INFINITY:
            continue
        if not curve.on_curve(q[0], q[1]):
            raise ValueError(f"{q} is not on the curve")

    # multiplicity of phi over each x-fiber
    fiber_clear: dict[int, int] = {}
    for q, m in D.coeffs.items():
        if q == INFINITY or m <= 0:
            continue
        x0, y0 = q
        e = 2 if y0 == 0 else 1
        need = -(-m // e)  # ceil(m / e)
        fiber_clear[x0] = max(fiber_clear.get(x0, 0), need)
    deg_phi = sum(fiber_clear.values())
    m_inf = D.coeffs.get(INFINITY, 0)
    b_inf = -2 * deg_phi - m_inf

    a_max = (-b_inf) // 2 if -b_inf >= 0 else -1
    b_max = (-b_inf - (2 * g + 1)) // 2 if -b_inf - (2 * g + 1) >= 0 else -1
    span: list[tuple[str, int]] = [("x", a) for a in range(a_max + 1)]
    span += [("xy", b) for b in range(b_max + 1)]
    if not span:
        return 0

    # constraint points: everything in the x-fibers phi touches, plus any
    # required zeros from the negative part of D
    constraints: list[tuple[tuple[int, int], int]] = []
    fibers = set(fiber_clear)
    points: set[tuple[int, int]] = set()
    for x0 in fibers:
        fx = curve.f_at(x0)
        root = modp.sqrt_mod(fx, p)
        if root is None:
            raise InvariantError("fiber-rationality",
                                 f"divisor point above x={x0} left the field")
        points.add((x0, root))
        points.add((x0, (-root) % p))
    for q, m in D.coeffs.items():
        if q != INFINITY and m < 0:
            points.add(q)
    for q in sorted(points):
        x0, y0 = q
        e = 2 if y0 == 0 else 1
        order = fiber_clear.get(x0, 0) * e - D.coeffs.get(q, 0)
        if order > 0:
            constraints.append((q, order))

    rows = []
    for (x0, y0), order in constraints:
        if y0 != 0:
            ys = _sqrt_series(curve, x0, y0, order)
            xs = [x0, 1] + [0] * max(0, order - 2)  # x = x0 + t
        else:
            s = _x_series_at_weierstrass(curve, x0, order)
            xs = [(x0 + s[0]) % p] + [c % p for c in s[1:order]]
            ys = [0, 1] + [0] * max(0, order - 2)   # y = t
        # powers of x as series, then one row per vanishing order
        x_pows = [[1] + [0] * (order - 1)]
        for _ in range(max(a_max, b_max, 0)):
            x_pows.append(_series_mul(x_pows[-1], xs[:order], order, p))
        block = np.zeros((order, len(span)), dtype=np.int64)
        for col, (kind, e) in enumerate(span):
            series = x_pows[e]
            if kind == "xy":
                series = _series_mul(series, ys[:order], order, p)
            block[:, col] = series[:order]
        rows.append(block)

    if not rows:
        return len(span)
    mat = np.vstack(rows)
    return len(span) - modp.rank(mat, curve.p)


def canonical_divisor(curve: HyperellipticCurve) -> Divisor:
    return Divisor.infinity(2 * curve.g - 2)


def sample_curve_divisor(curve: HyperellipticCurve, degree: int, rng) -> Divisor:
    """Random class of the given degree: degree + g random affine points
    minus g * infinity, so the class sweeps the whole degree-d Picard
    variety as the points vary."""
    pts = [curve.random_point(rng) for _ in range(degree + curve.g)]
    return Divisor.of_points(pts) - Divisor.infinity(curve.g)


# ---------------------------------------------------------------------------
# degree-2 pencil constructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GonalRows:
    """Both extra Betti rows of a point divisor on a re-embedded
    hyperelliptic curve, computed purely cohomologically."""

    g: int
    r: int
    d: int
    gamma: int
    u: int
    h0: tuple[int, ...]             # h^0 of the i-th diagonal bundle class
    h1: tuple[int, ...]
    row_u_minus_1: tuple[int, ...]  # b_{i+1, u-1} = C(r, i) h0[i]
    row_u: tuple[int, ...]          # b_{i, u}     = C(r, i) h1[i]
    deltas: tuple[int, ...]
    differences_ok: bool
    diagonal_products: tuple[int, ...]

    @property
    def all_products_zero(self) -> bool:
        return not any(self.diagonal_products)

    def render(self) -> str:
        lines = [f"g={self.g} r={self.r} d={self.d} gamma={self.gamma} u={self.u}",
                 "row u-1: " + " ".join(map(str, self.row_u_minus_1)),
                 "row u  : " + " ".join(map(str, self.row_u)),
                 f"differences == deltas: {self.differences_ok}",
                 f"diagonal products: {self.diagonal_products}"]
        return "\n".join(lines)


def gonal_betti_rows(curve: HyperellipticCurve, r: int, points_divisor: Divisor,
                     u: int | None = None) -> GonalRows:
    """Extra Betti rows for a degree-gamma point divisor under the
    re-embedding by the r-th power of the degree-2 pencil (d = 2r).

    The i-th diagonal reduces to the divisor class 2(ur - i) inf minus the
    points; h^1 follows from h^0 by Riemann-Roch, and the difference of
    the diagonal entries is forced to equal the closed-form delta for
    every sample, generic or not.
    """
    from .predictor import delta as delta_fn, u_value

    g, d = curve.g, 2 * r
    if g > r + 1:
        raise ValueError(f"degree-2 pencil construction needs g <= r+1, "
                         f"got g={g}, r={r}")
    gamma = points_divisor.degree
    if u is None:
        u = u_value(gamma, g, d)
    h0s, h1s, products = [], [], []
    deltas = tuple(delta_fn(i, g, r, d, gamma, u) for i in range(r + 1))
    ok = True
    for i in range(r + 1):
        cls = Divisor.infinity(2 * (u * r - i)) - points_divisor
        h0 = h0_divisor(curve, cls)
        chi = cls.degree + 1 - g
        h1 = h0 - chi
        if h1 < 0:
            raise InvariantError("riemann-roch-h1-nonnegative",
                                 f"h0={h0}, chi={chi} at diagonal {i}")
        h0s.append(h0)
        h1s.append(h1)
        if comb(r, i) * chi != deltas[i]:
            ok = False
        products.append(comb(r, i) * h0 * comb(r, i) * h1)
    row_hi = tuple(comb(r, i) * h0s[i] for i in range(r + 1))
    row_lo = tuple(comb(r, i) * h1s[i] for i in range(r + 1))
    return GonalRows(g, r, d, gamma, u, tuple(h0s), tuple(h1s),
                     row_hi, row_lo, deltas, ok, tuple(products))


def sample_gamma_points(curve: HyperellipticCurve, gamma: int, rng) -> Divisor:
    """gamma distinct affine points as a divisor."""
    pts: set[tuple[int, int]] = set()
    while len(pts) < gamma:
        pts.add(curve.random_point(rng))
    return Divisor.of_points(sorted(pts))


def property_r_sample(curve: HyperellipticCurve, r: int, i: int,
                      trials: int, rng) -> float:
    """Vanishing frequency for the generic-vanishing property of the i-th
    exterior power of the syzygy bundle at the degree-2 pencil (d = 2r).

    Each trial draws a random class xi of degree g - 1 + 2i and tests
    h^0(xi - 2i*inf) = 0; the twisted class has degree g - 1, where the
    effective locus is a proper theta divisor, so generic samples vanish.
    Reported as a frequency, never as a theorem.
    """
    if not 1 <= i <= r - 1:
        raise ValueError(f"need 1 <= i <= r-1, got i={i}, r={r}")
    g = curve.g
    hits = 0
    for _ in range(trials):
        xi = sample_curve_divisor(curve, g - 1 + 2 * i, rng)
        cls = xi - Divisor.infinity(2 * i)
        if h0_divisor(curve, cls) == 0:
            hits += 1
    return hits / trials
