"""Finite point sets in projective space and the graded slices of their
homogeneous coordinate rings.

A degree-j form is recorded by its vector of values at the fixed affine
lifts of the points, so the degree-j slice of the coordinate ring is the
row space of the evaluation matrix inside F_p^gamma, and multiplication
by a linear form acts coordinatewise by the form's values.  This keeps
the downstream syzygy matrices pure evaluation data: no polynomial
arithmetic in the hot path.

Rescaling a lift by lambda rescales degree-j values by lambda**j, which
changes none of the ranks computed from these slices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import modp


@lru_cache(maxsize=None)
def monomial_basis(r: int, j: int) -> tuple[tuple[int, ...], ...]:
    """All degree-j exponent vectors in r+1 variables, graded-lex order
    (x_0 > x_1 > ... > x_r).  Count is C(j+r, r)."""
    if j < 0:
        return ()
    if r == 0:
        return ((j,),)
    out = []
    for e0 in range(j, -1, -1):
        for rest in monomial_basis(r - 1, j - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(r: int, j: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(r, j))}


def _normalize_point(coords, p: int) -> tuple[int, ...]:
    """Canonical representative: first nonzero coordinate scaled to 1."""
    vec = [int(c) % p for c in coords]
    for c in vec:
        if c:
            inv = modp.inv_mod(c, p)
            return tuple(v * inv % p for v in vec)
    raise ValueError("projective point cannot be the zero vector")


@dataclass(frozen=True)
class PointSet:
    """gamma points in P^r over F_p, with fixed affine lifts.

    Coincident points are rejected at construction: all downstream
    formulas assume a reduced set.
    """

    p: int
    r: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not modp.is_probable_prime(self.p) or self.p == 2:
            raise ValueError(f"modulus {self.p} is not an odd prime")
        pts = tuple(tuple(int(c) % self.p for c in q) for q in self.points)
        seen = set()
        for q in pts:
            if len(q) != self.r + 1:
                raise ValueError(f"point {q} does not live in P^{self.r}")
            canon = _normalize_point(q, self.p)
            if canon in seen:
                raise ValueError(f"coincident point {q}")
            seen.add(canon)
        object.__setattr__(self, "points", pts)

    @property
    def gamma(self) -> int:
        return len(self.points)

    def coords(self) -> np.ndarray:
        """(gamma, r+1) array of the fixed lifts."""
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.r + 1)

    def rescaled(self, scalars) -> "PointSet":
        """Same projective points with lifts multiplied by the given
        nonzero scalars (one per point)."""
        if len(scalars) != self.gamma:
            raise ValueError("need one scalar per point")
        pts = []
        for q, lam in zip(self.points, scalars):
            lam = int(lam) % self.p
            if lam == 0:
                raise ValueError("rescaling by zero")
            pts.append(tuple(c * lam % self.p for c in q))
        return PointSet(self.p, self.r, tuple(pts))

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "r": self.r,
                           "points": [list(q) for q in self.points]})

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        data = json.loads(text)
        return cls(int(data["p"]), int(data["r"]),
                   tuple(tuple(q) for q in data["points"]))

    @classmethod
    def random(cls, r: int, gamma: int, p: int, rng) -> "PointSet":
        """gamma distinct random points; coordinates are drawn below 2**30
        so the same seed gives the same integral configuration under every
        31-bit prime."""
        pts: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        while len(pts) < gamma:
            q = tuple(int(x) for x in rng.integers(0, 1 << 30, size=r + 1))
            if not any(c % p for c in q):
                continue
            canon = _normalize_point(q, p)
            if canon in seen:
                continue
            seen.add(canon)
            pts.append(tuple(c % p for c in q))
        return cls(p, r, tuple(pts))


def evaluation_matrix(ps: PointSet, j: int) -> np.ndarray:
    """C(j+r, r) x gamma matrix of degree-j monomial values at the lifts."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    mons = monomial_basis(ps.r, j)
    coords = ps.coords()
    # powers[v][e] per point, e <= j
    powers = np.ones((ps.gamma, ps.r + 1, j + 1), dtype=np.int64)
    for e in range(1, j + 1):
        powers[:, :, e] = powers[:, :, e - 1] * coords % ps.p
    out = np.empty((len(mons), ps.gamma), dtype=np.int64)
    for i, mon in enumerate(mons):
        row = np.ones(ps.gamma, dtype=np.int64)
        for v, e in enumerate(mon):
            if e:
                row = row * powers[:, v, e] % ps.p
        out[i] = row
    return out


def hilbert_function(ps: PointSet, j: int) -> int:
    """dim of the degree-j slice of the coordinate ring; nondecreasing in
    j and eventually constant equal to gamma."""
    return modp.rank(evaluation_matrix(ps, j), ps.p)


@dataclass(frozen=True)
class GradedPiece:
    """Degree-j slice of the coordinate ring as a subspace of F_p^gamma.

    basis rows are in reduced echelon normal form, so the coordinates of
    any member vector are just its entries at the pivot columns.
    """

    degree: int
    basis: np.ndarray
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        return vectors[..., list(self.pivots)]


def graded_piece(ps: PointSet, j: int) -> GradedPiece:
    red, piv = modp.rref(evaluation_matrix(ps, j), ps.p)
    return GradedPiece(j, red[: len(piv)].copy(), tuple(piv))


class PointRingSlices:
    """Graded-module view of the coordinate ring of a point set, feeding
    the syzygy engine: slice dimensions plus one multiplication matrix
    per variable and degree."""

    def __init__(self, ps: PointSet):
        self.ps = ps
        self.n = ps.r + 1
        self.p = ps.p
        self._pieces: dict[int, GradedPiece] = {}

    def piece(self, j: int) -> GradedPiece:
        if j not in self._pieces:
            self._pieces[j] = graded_piece(self.ps, j)
        return self._pieces[j]

    def dim(self, j: int) -> int:
        if j < 0:
            return 0
        return self.piece(j).dim

    def mult(self, j: int) -> list[np.ndarray]:
        """Matrices of multiplication x_v: slice_j -> slice_{j+1}, indexed
        by variable, each of shape (dim_{j+1}, dim_j)."""
        src, tgt = self.piece(j), self.piece(j + 1)
        coords = self.ps.coords()
        mats = []
        for v in range(self.n):
            prod = src.basis * coords[:, v][None, :] % self.p
            mats.append(tgt.coordinates(prod).T.copy())
        return mats

    def stabilization_degree(self) -> int:
        """Least j with dim slice_j == gamma.  For a reduced point set the
        Hilbert function is strictly increasing until it hits gamma, and
        this degree equals the Castelnuovo-Mumford regularity of the
        coordinate ring, hence bounds the nonzero rows of the Betti table."""
        j = 0
        while self.dim(j) < self.ps.gamma:
            j += 1
            if j > self.ps.gamma + 1:
                raise RuntimeError("Hilbert function failed to stabilize")
        return j
