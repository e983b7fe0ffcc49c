"""Graded Betti tables from Koszul cohomology ranks, plus an independent
brute-force minimal-resolution oracle.

The primary route computes b[i][j] as the middle homology dimension of

    wedge^{i+1} V (x) M_{j-1} -> wedge^i V (x) M_j -> wedge^{i-1} V (x) M_{j+1}

for the graded slices M of a coordinate ring; this equals the number of
i-th syzygies of internal degree i+j in the minimal free resolution.  The
oracle route builds the resolution itself, degree by degree, from
nullspaces of evaluation and multiplication matrices, and exists purely
to cross-check the Koszul route on small instances.

Tables computed over sampled points carry a one-sided guarantee:
semicontinuity means a sampled table can only have entries >= the generic
ones, so matching the minimal predicted table certifies genericity of the
sample; a mismatch proves nothing about the generic table.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from . import modp
from .errors import InvariantError, OracleSizeError
from .exterior import koszul_differential
from .points import PointSet, PointRingSlices, monomial_basis, monomial_index, evaluation_matrix


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers b[i][j] for i in [0, r+1], j in [0, jmax], with the
    Hilbert-function row and run metadata."""

    r: int
    p: int
    entries: tuple[tuple[int, ...], ...]
    hilbert: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def jmax(self) -> int:
        return len(self.entries[0]) - 1

    def entry(self, i: int, j: int) -> int:
        if 0 <= i < len(self.entries) and 0 <= j <= self.jmax:
            return self.entries[i][j]
        return 0

    def row(self, j: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for i in range(len(self.entries)))

    def same_table(self, other: "BettiTable") -> bool:
        """Entry-for-entry equality ignoring metadata and modulus (used
        for multi-prime agreement)."""
        jm = max(self.jmax, other.jmax)
        im = max(len(self.entries), len(other.entries))
        return all(self.entry(i, j) == other.entry(i, j)
                   for i in range(im) for j in range(jm + 1))

    def hilbert_from_resolution(self, t: int) -> int:
        """Euler characteristic of the resolution at degree t; must equal
        the Hilbert function for every t."""
        total = 0
        for i, row in enumerate(self.entries):
            for j, b in enumerate(row):
                if b and t - i - j >= 0:
                    total += (-1) ** i * b * comb(t - i - j + self.r, self.r)
        return total

    def render(self) -> str:
        cols = len(self.entries)
        width = max(2, *(len(str(v)) for row in self.entries for v in row))
        lines = ["    " + " ".join(f"{i:>{width}}" for i in range(cols))]
        for j in range(self.jmax + 1):
            cells = " ".join(
                f"{self.entry(i, j) if self.entry(i, j) else '.':>{width}}"
                for i in range(cols))
            lines.append(f"{j:>2}: {cells}")
        lines.append("hilbert: " + " ".join(str(h) for h in self.hilbert))
        if self.meta.get("sampled"):
            lines.append("# sampled points: entries can only exceed the generic"
                         " values (semicontinuity); a match with the minimal"
                         " prediction certifies genericity of the sample")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "r": self.r, "p": self.p,
            "entries": [list(row) for row in self.entries],
            "hilbert": list(self.hilbert),
            "meta": self.meta,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        d = json.loads(text)
        return cls(d["r"], d["p"], tuple(tuple(r) for r in d["entries"]),
                   tuple(d["hilbert"]), d.get("meta", {}))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["j"] + [f"b{i}" for i in range(len(self.entries))] + ["hilbert"])
        for j in range(self.jmax + 1):
            h = self.hilbert[j] if j < len(self.hilbert) else ""
            w.writerow([j] + [self.entry(i, j) for i in range(len(self.entries))] + [h])
        return buf.getvalue()


class PolynomialRingSlices:
    """Graded slices of the full polynomial ring itself (free module);
    its Koszul cohomology vanishes except at (i, j) = (0, 0)."""

    def __init__(self, r: int, p: int):
        self.r = r
        self.n = r + 1
        self.p = p

    def dim(self, j: int) -> int:
        return comb(j + self.r, self.r) if j >= 0 else 0

    def mult(self, j: int) -> list[np.ndarray]:
        src = monomial_basis(self.r, j)
        tgt = monomial_index(self.r, j + 1)
        mats = []
        for v in range(self.n):
            m = np.zeros((self.dim(j + 1), self.dim(j)), dtype=np.int64)
            for k, mon in enumerate(src):
                bumped = mon[:v] + (mon[v] + 1,) + mon[v + 1:]
                m[tgt[bumped], k] = 1
            mats.append(m)
        return mats


def koszul_betti_numbers(slices, p: int, j_hi: int) -> tuple[list[list[int]], list[int]]:
    """Rows 0..j_hi of the Betti table of a graded module given by its
    slices, via ranks of the Koszul differentials."""
    n = slices.n
    mult_cache: dict[int, list[np.ndarray]] = {}
    rank_cache: dict[tuple[int, int], int] = {}

    def mults(j):
        if j not in mult_cache:
            mult_cache[j] = slices.mult(j)
        return mult_cache[j]

    def rank_d(i, j):
        if i <= 0 or i > n or slices.dim(j) == 0:
            return 0
        key = (i, j)
        if key not in rank_cache:
            mat = koszul_differential(n, i, mults(j), slices.dim(j),
                                      slices.dim(j + 1), p)
            rank_cache[key] = modp.rank(mat, p)
        return rank_cache[key]

    entries = [[0] * (j_hi + 1) for _ in range(n + 1)]
    dims = [slices.dim(j) for j in range(j_hi + 2)]
    for j in range(j_hi + 1):
        for i in range(n + 1):
            entries[i][j] = comb(n, i) * dims[j] - rank_d(i, j) - rank_d(i + 1, j - 1)
            if entries[i][j] < 0:
                raise InvariantError("koszul-homology-nonnegative",
                                     f"b[{i}][{j}] = {entries[i][j]}")
    return entries, dims


def betti_from_module(slices, p: int, j_hi: int | None = None,
                      row_cap: int = 64, meta: dict | None = None) -> BettiTable:
    """Betti table of a general graded module (e.g. a curve coordinate
    ring).  Without an explicit row bound, rows are extended until two
    consecutive all-zero rows appear."""
    if j_hi is not None:
        entries, dims = koszul_betti_numbers(slices, p, j_hi)
    else:
        j = 1
        while True:
            j += 1
            entries, dims = koszul_betti_numbers(slices, p, j)
            zero_tail = (all(entries[i][j] == 0 for i in range(len(entries)))
                         and all(entries[i][j - 1] == 0 for i in range(len(entries))))
            if zero_tail:
                break
            if j > row_cap:
                raise InvariantError("betti-rows-bounded",
                                     f"no zero row through j={row_cap}")
        last = max((jj for jj in range(j + 1)
                    if any(entries[i][jj] for i in range(len(entries)))), default=0)
        entries = [row[:last + 1] for row in entries]
        dims = dims[:last + 2]
    r = slices.n - 1
    return BettiTable(r, p, tuple(tuple(row) for row in entries),
                      tuple(dims), dict(meta or {}))


def betti_table(ps: PointSet, j_max: int | None = None,
                meta: dict | None = None) -> BettiTable:
    """Betti table of a point set via Koszul ranks.

    Rows run through the regularity of the coordinate ring, which for a
    reduced point set equals the degree where the Hilbert function first
    reaches gamma; every later row is zero.  A caller-supplied j_max only
    ever extends the range.
    """
    if ps.gamma == 0:
        raise ValueError("Betti table of the empty point set is not defined")
    slices = PointRingSlices(ps)
    sigma = slices.stabilization_degree()
    j_hi = max(sigma, j_max or 0)
    entries, dims = koszul_betti_numbers(slices, ps.p, j_hi)
    if entries[0][0] != 1:
        raise InvariantError("betti-b00-one", f"b[0][0] = {entries[0][0]}")
    info = {"gamma": ps.gamma, "regularity": sigma}
    info.update(meta or {})
    return BettiTable(ps.r, ps.p, tuple(tuple(row) for row in entries),
                      tuple(dims), info)


def regularity(table: BettiTable) -> int:
    """Largest j with some b[i][j] nonzero (the number of nontrivial rows
    minus one, i.e. the Castelnuovo-Mumford regularity)."""
    last = 0
    for j in range(table.jmax + 1):
        if any(table.entry(i, j) for i in range(len(table.entries))):
            last = j
    return last


# ---------------------------------------------------------------------------
# brute-force minimal resolution oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _variable_shift(r: int, t: int, v: int) -> np.ndarray:
    """Index of m * x_v inside monomial_basis(r, t+1) for each m of degree t."""
    tgt = monomial_index(r, t + 1)
    out = np.empty(len(monomial_basis(r, t)), dtype=np.int64)
    for k, mon in enumerate(monomial_basis(r, t)):
        out[k] = tgt[mon[:v] + (mon[v] + 1,) + mon[v + 1:]]
    return out


class _FreeModule:
    """F = (+)_a S(-deg_a); graded piece F_t has basis (a, monomial)."""

    def __init__(self, degs: list[int], r: int):
        self.degs = list(degs)
        self.r = r

    def block_dims(self, t: int) -> list[int]:
        return [comb(t - d + self.r, self.r) if t >= d else 0 for d in self.degs]

    def dim(self, t: int) -> int:
        return sum(self.block_dims(t))

    def offsets(self, t: int) -> list[int]:
        offs, acc = [], 0
        for b in self.block_dims(t):
            offs.append(acc)
            acc += b
        return offs

    def shift_by_variable(self, rows: np.ndarray, t: int, v: int) -> np.ndarray:
        """x_v * (rows in F_t coordinates) as rows in F_{t+1} coordinates."""
        out = np.zeros((rows.shape[0], self.dim(t + 1)), dtype=np.int64)
        src_off, tgt_off = self.offsets(t), self.offsets(t + 1)
        for a, d in enumerate(self.degs):
            if t < d:
                continue
            idx = _variable_shift(self.r, t - d, v)
            out[:, tgt_off[a] + idx] = rows[:, src_off[a]:src_off[a] + idx.size]
        return out


def _new_pivot_rows(base: np.ndarray, candidates: np.ndarray, p: int) -> list[int]:
    """Indices of candidate rows outside the row space of `base`,
    earliest-first (pivot columns of the echelon form of the transpose)."""
    if candidates.shape[0] == 0:
        return []
    stacked = candidates if base.shape[0] == 0 else np.vstack([base, candidates])
    _, piv = modp._eliminate(np.mod(stacked.T, p), p, reduced=False)[:2]
    return [c - base.shape[0] for c in piv if c >= base.shape[0]]


class _GeneratorImages:
    """Incremental table of x^m * g for one generator g of a submodule of
    a free module, rows indexed by the monomials m in lex order."""

    def __init__(self, vec: np.ndarray, deg: int, ambient: _FreeModule):
        self.deg = deg
        self.ambient = ambient
        self._levels: dict[int, np.ndarray] = {deg: vec.reshape(1, -1)}

    def at(self, t: int) -> np.ndarray:
        if t < self.deg:
            return np.zeros((0, self.ambient.dim(t)), dtype=np.int64)
        if t not in self._levels:
            prev = self.at(t - 1)
            r = self.ambient.r
            mons = monomial_basis(r, t - self.deg)
            prev_pos = monomial_index(r, t - 1 - self.deg)
            rows = np.zeros((len(mons), self.ambient.dim(t)), dtype=np.int64)
            shifted = [None] * (r + 1)
            for k, m in enumerate(mons):
                v = next(i for i, e in enumerate(m) if e)
                if shifted[v] is None:
                    shifted[v] = self.ambient.shift_by_variable(prev, t - 1, v)
                parent = m[:v] + (m[v] - 1,) + m[v + 1:]
                rows[k] = shifted[v][prev_pos[parent]]
            self._levels[t] = rows
        return self._levels[t]


def brute_force_betti(ps: PointSet, size_cap: int = 4000) -> BettiTable:
    """Independent oracle: build the minimal free resolution of the
    coordinate ring degree by degree.

    Works entirely from nullspaces: the ideal slices are kernels of
    transposed evaluation matrices, minimal generators at each step are
    the slice vectors not reachable from one degree lower, and the next
    syzygy slices are kernels of the resulting presentation matrices.
    Restricted to small instances (this is the oracle path, not the
    performance path); raises OracleSizeError beyond the caps.
    """
    if ps.gamma == 0:
        raise ValueError("empty point set")
    if ps.r > 3 or ps.gamma > 30:
        raise OracleSizeError(f"oracle envelope is r <= 3, gamma <= 30; "
                              f"got r={ps.r}, gamma={ps.gamma}")
    p, r = ps.p, ps.r
    slices = PointRingSlices(ps)
    sigma = slices.stabilization_degree()
    dims = [slices.dim(j) for j in range(sigma + 2)]

    entries = [[0] * (sigma + 1) for _ in range(r + 2)]
    entries[0][0] = 1

    ambient = _FreeModule([0], r)

    def ideal_piece(t: int) -> np.ndarray:
        return modp.nullspace(evaluation_matrix(ps, t).T, p)

    kernel_piece = ideal_piece
    for step in range(1, r + 3):
        gens: list[tuple[int, np.ndarray]] = []
        pieces: dict[int, np.ndarray] = {}
        lo = (min(ambient.degs) + 1) if step > 1 else 1
        for t in range(lo, step + sigma + 1):
            cur = kernel_piece(t)
            pieces[t] = cur
            if cur.shape[0] == 0:
                continue
            if cur.shape[0] * cur.shape[1] > size_cap * size_cap:
                raise OracleSizeError(f"kernel slice {cur.shape} at degree {t}")
            prev = pieces.get(t - 1, np.zeros((0, ambient.dim(t - 1)), dtype=np.int64))
            if prev.shape[0]:
                reach = np.vstack([ambient.shift_by_variable(prev, t - 1, v)
                                   for v in range(r + 1)])
            else:
                reach = np.zeros((0, ambient.dim(t)), dtype=np.int64)
            for idx in _new_pivot_rows(reach, cur, p):
                gens.append((t, cur[idx]))
        if not gens:
            break
        if step > r + 1:
            raise InvariantError("resolution-length",
                                 f"syzygies persist past homological degree {r + 1}")
        for t, _ in gens:
            entries[step][t - step] += 1
        images = [_GeneratorImages(vec, t, ambient) for t, vec in gens]

        def kernel_piece(t, images=images) -> np.ndarray:
            cols = np.vstack([im.at(t) for im in images])
            if cols.shape[0] * max(1, cols.shape[1]) > size_cap * size_cap:
                raise OracleSizeError(f"presentation matrix {cols.shape} at degree {t}")
            return modp.nullspace(cols.T, p)

        ambient = _FreeModule([t for t, _ in gens], r)

    info = {"gamma": ps.gamma, "regularity": sigma, "oracle": "minimal-resolution"}
    return BettiTable(r, p, tuple(tuple(row) for row in entries),
                      tuple(dims), info)
