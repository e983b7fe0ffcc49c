"""From Ulrich module data to a square matrix of linear forms in Pluecker
coordinates whose determinant (pfaffian in the skew case) cuts out the
locus of codimension-(k+1) planes meeting the variety, checked against an
independent resultant/membership oracle.

The matrix comes from the linear strand of the exterior-module resolution
of the section module.  Concretely, Sol is the space of linear maps
beta: wedge^{k+1} V -> H^0(E) whose degree-one extension by module
linearity dies under the Koszul multiplication map:

    wedge^{k+2} V --comult--> V (x) wedge^{k+1} V --beta--> V (x) H^0(E)
                  --mult--> H^0(E(1))  must vanish.

Exactness of the resolution identifies Sol with H^k(E(-k-1)), so its
dimension must equal n = d * rank; a deterministic basis of Sol then
yields an n x n matrix whose entry coefficients live on the wedge basis,
i.e. linear forms on the Grassmannian cone.  Planes are evaluated through
their decomposable wedge l_1 ^ ... ^ l_{k+1}, so Pluecker relations never
enter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import modp
from .curves import ParametricCurve, binary_mult_matrix
from .errors import SkewNormalizationError, TateDimensionError
from .exterior import wedge_basis, wedge_coordinates, wedge_index
from .ulrich import UlrichModuleData, quadric_form, ulrich_certify


@dataclass(eq=False)
class ChowMatrix:
    """n x n matrix of linear forms in the C(r+1, k+1) Pluecker
    coordinates; coeffs[t] is the n x n coefficient slice of the t-th
    wedge basis element."""

    p: int
    k: int
    r: int
    d: int
    rank: int
    n: int
    coeffs: np.ndarray  # (num_wedge, n, n)
    skew: bool
    label: str = ""

    @property
    def wedge_subsets(self):
        return wedge_basis(self.r + 1, self.k + 1)

    def matrix_at_wedge(self, w: np.ndarray) -> np.ndarray:
        w = np.mod(np.asarray(w, dtype=np.int64), self.p)
        if w.shape[0] != self.coeffs.shape[0]:
            raise ValueError("wedge coordinate length mismatch")
        acc = np.zeros((self.n, self.n), dtype=np.int64)
        for t in range(w.shape[0]):
            # reduce every term so the int64 accumulator never overflows
            acc = (acc + int(w[t]) * self.coeffs[t]) % self.p
        return acc

    def to_json(self) -> str:
        return json.dumps({
            "p": self.p, "k": self.k, "r": self.r, "d": self.d,
            "rank": self.rank, "n": self.n, "skew": self.skew,
            "label": self.label,
            "coeffs": self.coeffs.tolist(),
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ChowMatrix":
        d = json.loads(text)
        return cls(d["p"], d["k"], d["r"], d["d"], d["rank"], d["n"],
                   np.array(d["coeffs"], dtype=np.int64), d["skew"], d["label"])

    def render(self) -> str:
        subsets = self.wedge_subsets
        names = ["w" + "".join(str(x) for x in t) for t in subsets]
        lines = [f"{self.n} x {self.n} matrix of linear forms"
                 f" ({'skew' if self.skew else 'generic'}), modulus {self.p}"]
        for i in range(self.n):
            row = []
            for j in range(self.n):
                terms = [f"{int(self.coeffs[t, i, j])}*{names[t]}"
                         for t in range(len(subsets)) if self.coeffs[t, i, j]]
                row.append(" + ".join(terms) if terms else "0")
            lines.append("  [ " + " | ".join(row) + " ]")
        return "\n".join(lines)


def _constraint_matrix(m: UlrichModuleData) -> np.ndarray:
    """Linear conditions on beta in Hom(wedge^{k+1} V, H^0(E)) expressing
    that the comultiplied extension composes to zero with the Koszul
    multiplication into H^0(E(1))."""
    n_vars = m.r + 1
    kk = m.k
    dim_b = m.mult[0].shape[1]
    dim_b1 = m.mult[0].shape[0]
    top = wedge_basis(n_vars, kk + 2)
    mid_pos = wedge_index(n_vars, kk + 1)
    num_unknowns = comb(n_vars, kk + 1) * dim_b
    out = np.zeros((len(top) * dim_b1, num_unknowns), dtype=np.int64)
    for u_idx, subset in enumerate(top):
        r0 = u_idx * dim_b1
        for pos, v in enumerate(subset):
            rest = subset[:pos] + subset[pos + 1:]
            c0 = mid_pos[rest] * dim_b
            sign = 1 if pos % 2 == 0 else -1
            block = m.mult[v] if sign == 1 else (-m.mult[v]) % m.p
            out[r0:r0 + dim_b1, c0:c0 + dim_b] = \
                (out[r0:r0 + dim_b1, c0:c0 + dim_b] + block) % m.p
    return out


def _skew_normalize(coeffs: np.ndarray, p: int, tries: int = 64) -> np.ndarray:
    """Change of basis P on the solution side making every coefficient
    slice skew-symmetric, i.e. the symplectic identification of the two
    section spaces.  Solves the linear system skew(C_t P) = 0 for all t
    and picks an invertible element of the solution space."""
    num_w, n, _ = coeffs.shape
    rows = []
    for t in range(num_w):
        c = coeffs[t]
        for a in range(n):
            for b in range(a, n):
                row = np.zeros((n, n), dtype=np.int64)
                row[:, b] = (row[:, b] + c[a, :]) % p
                row[:, a] = (row[:, a] + c[b, :]) % p
                rows.append(row.reshape(-1))
    basis = modp.nullspace(np.array(rows, dtype=np.int64), p)
    if basis.shape[0] == 0:
        raise SkewNormalizationError("no skew-making change of basis exists")
    candidates = [basis[i] for i in range(basis.shape[0])]
    rng = np.random.default_rng(20240229)
    for _ in range(tries):
        for cand in candidates:
            mat = cand.reshape(n, n)
            if modp.rank(mat, p) == n:
                return mat
        weights = rng.integers(0, p, size=(1, basis.shape[0])).astype(np.int64)
        candidates = [modp.matmul(weights, basis, p).reshape(-1)]
    raise SkewNormalizationError("skew solution space contains no invertible element")


def tate_phi(m: UlrichModuleData) -> ChowMatrix:
    """Build the matrix of linear forms from certified Ulrich data.

    The solution space is computed as a nullspace with deterministic
    pivoting; its dimension is asserted to equal d * rank, which also
    equals h^k(E(-k-1)) recorded in the input.  Rank-2 surface data is
    symmetrized to a genuinely skew matrix (zero diagonal included) so
    the pfaffian is available.
    """
    report = ulrich_certify(m)
    if not report.ulrich:
        raise ValueError("input is not Ulrich:\n" + report.render())
    n = m.d * m.rank
    dim_b = m.h0
    sol = modp.nullspace(_constraint_matrix(m), m.p)
    expected = m.h(m.k, -m.k - 1)
    if sol.shape[0] != n or expected != n:
        raise TateDimensionError(
            f"solution space has dimension {sol.shape[0]}, expected "
            f"d*rank = {n} (= h^{m.k}(E({-m.k - 1})) = {expected}); "
            "input reported, not truncated")
    num_w = comb(m.r + 1, m.k + 1)
    coeffs = np.zeros((num_w, n, n), dtype=np.int64)
    for j in range(n):
        beta = sol[j].reshape(num_w, dim_b)
        for t in range(num_w):
            coeffs[t, :, j] = beta[t]
    skew = False
    if m.k == 2 and m.rank == 2:
        pmat = _skew_normalize(coeffs, m.p)
        coeffs = np.array([modp.matmul(coeffs[t], pmat, m.p)
                           for t in range(num_w)])
        for t in range(num_w):
            if np.any((coeffs[t] + coeffs[t].T) % m.p) or np.any(coeffs[t].diagonal()):
                raise SkewNormalizationError("normalized slice is not skew")
        skew = True
    return ChowMatrix(m.p, m.k, m.r, m.d, m.rank, n, coeffs, skew, m.label)


def verify_linear_strand(cm: ChowMatrix, m: UlrichModuleData) -> bool:
    """Re-check, directly from the finished matrix, that the comultiplied
    degree-one extension of every column map composes to zero with the
    Koszul multiplication (the two consecutive strand maps compose to
    zero).  Exact, not sampled."""
    n_vars = m.r + 1
    mid_pos = wedge_index(n_vars, m.k + 1)
    for j in range(cm.n):
        for subset in wedge_basis(n_vars, m.k + 2):
            acc = np.zeros(m.mult[0].shape[0], dtype=np.int64)
            for pos, v in enumerate(subset):
                rest = subset[:pos] + subset[pos + 1:]
                beta_val = cm.coeffs[mid_pos[rest], :, j]
                term = modp.matmul(m.mult[v], beta_val.reshape(-1, 1), m.p).reshape(-1)
                acc = (acc + ((-1) ** pos) * term) % m.p
            if np.any(acc):
                return False
    return True


def chow_evaluate(cm: ChowMatrix, plane_forms) -> int:
    """Value of the Chow form at the plane cut out by k+1 independent
    linear forms: substitute the Pluecker coordinates of their wedge and
    take the determinant (pfaffian when skew)."""
    forms = np.mod(np.array(plane_forms, dtype=np.int64), cm.p)
    if forms.shape != (cm.k + 1, cm.r + 1):
        raise ValueError(f"need {cm.k + 1} forms with {cm.r + 1} coefficients")
    if modp.rank(forms, cm.p) != cm.k + 1:
        raise ValueError("dependent defining forms")
    w = wedge_coordinates(forms, cm.p)
    mat = cm.matrix_at_wedge(w)
    return modp.pfaffian(mat, cm.p) if cm.skew else modp.det(mat, cm.p)


# ---------------------------------------------------------------------------
# independent membership oracles
# ---------------------------------------------------------------------------

def sylvester_resultant(a, b, p: int) -> int:
    """Resultant of two binary forms given by full coefficient vectors of
    the same formal degree d (vanishes iff they share a projective root,
    the root at [0:1] included via vanishing leading coefficients)."""
    a = [int(x) % p for x in a]
    b = [int(x) % p for x in b]
    if len(a) != len(b):
        raise ValueError("forms must have the same formal degree")
    d = len(a) - 1
    size = 2 * d
    mat = np.zeros((size, size), dtype=np.int64)
    for i in range(d):
        mat[i, i:i + d + 1] = a
        mat[d + i, i:i + d + 1] = b
    return modp.det(mat, p)


def pullback_form(curve: ParametricCurve, linear_form) -> np.ndarray:
    """Binary degree-d form obtained by substituting the parametrization
    into a linear form on P^r."""
    lf = np.mod(np.array(linear_form, dtype=np.int64), curve.p)
    out = np.zeros(curve.d + 1, dtype=np.int64)
    for v, c in enumerate(lf):
        if c:
            out = (out + c * np.array(curve.forms[v], dtype=np.int64)) % curve.p
    return out


def curve_plane_meets(curve: ParametricCurve, plane_forms) -> bool:
    """Does the codimension-2 plane meet the curve over the algebraic
    closure?  Resultant of the two pulled-back binary forms."""
    forms = np.array(plane_forms, dtype=np.int64)
    g1 = pullback_form(curve, forms[0])
    g2 = pullback_form(curve, forms[1])
    return sylvester_resultant(g1, g2, curve.p) == 0


def point_from_plane_wedge(w, p: int) -> np.ndarray:
    """The point of P^3 cut out by three independent planes, from the
    wedge of their coefficient rows (signed complementary coordinates);
    scales linearly with the wedge."""
    w = np.mod(np.asarray(w, dtype=np.int64), p)
    # wedge basis of 3-subsets of {0,1,2,3} in lex order: complements 3,2,1,0
    return np.array([w[3], -w[2] % p, w[1], -w[0] % p], dtype=np.int64)


def quadric_plane_meets(plane_forms, p: int) -> bool:
    """Does the intersection of three planes in P^3 meet the quadric
    x0 x3 = x1 x2?  Solves the linear system to a point in the generic
    case; a degenerate pencil cuts a line or worse, which always meets a
    surface in P^3."""
    forms = np.mod(np.array(plane_forms, dtype=np.int64), p)
    kernel = modp.nullspace(forms, p)
    if kernel.shape[0] >= 2:
        return True
    return quadric_form(kernel[0], p) == 0


# ---------------------------------------------------------------------------
# sampled comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChowComparison:
    samples: int
    zero_matches: int
    disagreements: tuple  # serialized offending planes
    ratio: int | None     # constant oracle ratio, when defined
    ratio_constant: bool
    ok: bool
    meta: dict = field(default_factory=dict, compare=False)

    def render(self) -> str:
        lines = [f"{self.samples} sampled planes: "
                 f"{self.zero_matches} zero-set agreements, "
                 f"{len(self.disagreements)} disagreements"]
        if self.ratio is not None:
            lines.append(f"constant ratio to oracle: {self.ratio} "
                         f"({'constant' if self.ratio_constant else 'NOT constant'})")
        lines.append("agreement: " + ("ok" if self.ok else "FAILED"))
        for plane in self.disagreements:
            lines.append(f"  offending plane: {plane}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "samples": self.samples, "zero_matches": self.zero_matches,
            "disagreements": list(self.disagreements),
            "ratio": self.ratio, "ratio_constant": self.ratio_constant,
            "ok": self.ok}, sort_keys=True)


def _random_plane(rng, count: int, width: int, p: int) -> np.ndarray:
    while True:
        forms = rng.integers(0, p, size=(count, width)).astype(np.int64)
        if modp.rank(forms, p) == count:
            return forms


def chow_compare(cm: ChowMatrix, oracle, samples: int, rng,
                 oracle_value=None) -> ChowComparison:
    """Compare the Chow matrix against a membership oracle on seeded
    random planes.

    oracle(plane_forms) -> bool decides membership independently; when
    oracle_value(plane_forms) -> int is supplied (resultant for curves,
    quadratic form at the cut point for the quadric), the ratio of the
    two nonzero values must be one constant across all samples.
    """
    disagreements = []
    matches = 0
    ratio = None
    ratio_constant = True
    for _ in range(samples):
        plane = _random_plane(rng, cm.k + 1, cm.r + 1, cm.p)
        val = chow_evaluate(cm, plane)
        member = oracle(plane)
        if (val == 0) == bool(member):
            matches += 1
        else:
            disagreements.append(json.dumps(plane.tolist()))
        if oracle_value is not None and val != 0:
            ov = int(oracle_value(plane)) % cm.p
            if ov != 0:
                q = val * modp.inv_mod(ov, cm.p) % cm.p
                if ratio is None:
                    ratio = q
                elif q != ratio:
                    ratio_constant = False
    ok = not disagreements and ratio_constant
    return ChowComparison(samples, matches, tuple(disagreements),
                          ratio, ratio_constant, ok)


def compare_on_curve(cm: ChowMatrix, curve: ParametricCurve, samples: int,
                     rng) -> ChowComparison:
    def oracle(plane):
        return curve_plane_meets(curve, plane)

    def oracle_value(plane):
        g1 = pullback_form(curve, plane[0])
        g2 = pullback_form(curve, plane[1])
        return sylvester_resultant(g1, g2, curve.p)

    return chow_compare(cm, oracle, samples, rng, oracle_value)


def compare_on_quadric(cm: ChowMatrix, samples: int, rng) -> ChowComparison:
    p = cm.p

    def oracle(plane):
        return quadric_plane_meets(plane, p)

    def oracle_value(plane):
        w = wedge_coordinates(np.array(plane, dtype=np.int64), p)
        return quadric_form(point_from_plane_wedge(w, p), p)

    return chow_compare(cm, oracle, samples, rng, oracle_value)
