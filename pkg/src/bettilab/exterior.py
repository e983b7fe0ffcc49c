"""Exterior algebra combinatorics on V = H^0(O(1)): wedge bases, shuffle
comultiplication, and assembly of Koszul differentials against the graded
slices of a module.

Wedge basis elements of degree i are the strictly increasing i-subsets of
{0..n-1} in lexicographic order.  The differential sends

    e_{k_1} ^ ... ^ e_{k_i} (x) m  |-->  sum_t (-1)^t e_{..k_t dropped..} (x) x_{k_t} m

with t the 0-based position of k_t, so consecutive differentials compose
to zero for any module multiplication.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

import numpy as np


@lru_cache(maxsize=None)
def wedge_basis(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Lex-ordered strictly increasing i-subsets of {0..n-1}."""
    if i < 0 or i > n:
        return ()
    return tuple(itertools.combinations(range(n), i))


@lru_cache(maxsize=None)
def wedge_index(n: int, i: int) -> dict:
    return {s: k for k, s in enumerate(wedge_basis(n, i))}


def shuffle_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Sign of sorting the concatenation (left, right), both increasing."""
    inversions = sum(1 for a in left for b in right if b < a)
    return -1 if inversions % 2 else 1


def comultiply(n: int, i: int, k: int) -> dict:
    """Structure constants of the comultiplication
    wedge^{i+k} V -> wedge^i V (x) wedge^k V.

    Maps each (i+k)-subset to the list of (i-subset, k-subset, sign)
    shuffle splittings.  i = 0 or k = 0 gives the identity pairing.
    """
    if i < 0 or k < 0 or i + k > n:
        raise ValueError("degrees out of range")
    table = {}
    for total in wedge_basis(n, i + k):
        terms = []
        for left in itertools.combinations(total, i):
            right = tuple(sorted(set(total) - set(left)))
            terms.append((left, right, shuffle_sign(left, right)))
        table[total] = terms
    return table


def koszul_differential(n: int, i: int, mults, dim_src: int, dim_tgt: int,
                        p: int) -> np.ndarray:
    """Matrix of wedge^i V (x) M_j -> wedge^{i-1} V (x) M_{j+1}.

    mults is the list of n multiplication matrices x_v: M_j -> M_{j+1}
    (each dim_tgt x dim_src).  Column blocks are indexed by i-subsets S,
    row blocks by (i-1)-subsets, both in lex order; the (S minus k_t, S)
    block is (-1)^t times the matrix of x_{k_t}.
    """
    src_sets = wedge_basis(n, i)
    tgt_sets = wedge_basis(n, i - 1)
    tgt_pos = wedge_index(n, i - 1)
    rows = len(tgt_sets) * dim_tgt
    cols = len(src_sets) * dim_src
    out = np.zeros((rows, cols), dtype=np.int64)
    if rows == 0 or cols == 0:
        return out
    for s_idx, s in enumerate(src_sets):
        c0 = s_idx * dim_src
        for t, v in enumerate(s):
            rest = s[:t] + s[t + 1:]
            r0 = tgt_pos[rest] * dim_tgt
            block = mults[v] if t % 2 == 0 else (-mults[v]) % p
            out[r0:r0 + dim_tgt, c0:c0 + dim_src] = block
    return out


def wedge_coordinates(forms: np.ndarray, p: int) -> np.ndarray:
    """Expansion of l_1 ^ ... ^ l_m in the lex wedge basis of wedge^m V.

    forms is an (m, n) matrix of linear-form coefficients; the coordinate
    at the m-subset T of columns is the corresponding maximal minor.
    These are the Pluecker coordinates of the codimension-m plane the
    forms cut out.
    """
    from . import modp

    forms = np.mod(np.array(forms, dtype=np.int64), p)
    m, n = forms.shape
    coords = np.empty(comb(n, m), dtype=np.int64)
    for idx, t in enumerate(wedge_basis(n, m)):
        coords[idx] = modp.det(forms[:, list(t)], p)
    return coords
