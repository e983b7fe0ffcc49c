"""Exact dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  All
eliminations pick the first nonzero entry in column order as pivot, so
echelon forms, nullspace bases, determinants and pfaffians are
reproducible bit for bit across runs.  For p < 2**31 every intermediate
product fits in int64 (|a*b| <= (2**31 - 1)**2 < 2**63), which keeps the
hot loops vectorized in numpy with no arbitrary-precision fallback.

All functions are pure; nothing here mutates its arguments.
"""

from __future__ import annotations

import numpy as np

# 31-bit primes just below 2**31; the first is the Mersenne prime 2**31 - 1.
# Higher-level experiments rerun under at least two of these (or under
# seeded random 31-bit primes) and require agreement of every reported
# dimension, guarding against an unlucky characteristic.
DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers all int64)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime_31(rng) -> int:
    """Seeded random 31-bit prime (odd candidates from [2**30, 2**31))."""
    while True:
        n = int(rng.integers(1 << 30, 1 << 31)) | 1
        if is_probable_prime(n):
            return n


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def sqrt_mod(a: int, p: int):
    """A square root of a mod p, or None if a is a non-residue.

    Tonelli-Shanks; deterministic (smallest quadratic non-residue is used
    as auxiliary), so results are reproducible for fixed (a, p).
    """
    a = int(a) % p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def as_matrix(a, p: int) -> np.ndarray:
    """Copy input into a 2-d int64 array reduced mod p."""
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    return np.mod(m, p)


def matmul(a, b, p: int) -> np.ndarray:
    """(a @ b) mod p without int64 overflow.

    Splits b into 16-bit limbs so each accumulated dot product stays
    below 2**63 for p < 2**31 and inner dimension < 2**15.
    """
    a = as_matrix(a, p)
    b = as_matrix(b, p)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    hi, lo = b >> 16, b & 0xFFFF
    return ((a @ hi % p) * (1 << 16) + a @ lo) % p


def _eliminate(m: np.ndarray, p: int, reduced: bool, track: bool = False):
    """Shared elimination core.

    Returns (matrix, pivot_cols, det_factor) where det_factor is the
    product of pivots with swap signs (only meaningful when track=True
    and elimination ran unnormalized).
    """
    m = m.copy()
    rows, cols = m.shape
    piv_cols: list[int] = []
    r = 0
    sign = 1
    for c in range(cols):
        if r == rows:
            break
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        j = r + int(nz[0])
        if j != r:
            m[[r, j]] = m[[j, r]]
            sign = -sign
        if reduced:
            m[r] = m[r] * inv_mod(m[r, c], p) % p
            others = np.nonzero(m[:, c])[0]
            others = others[others != r]
            if others.size:
                m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        else:
            inv = inv_mod(m[r, c], p)
            below = np.nonzero(m[r + 1:, c])[0] + r + 1
            if below.size:
                factors = m[below, c] * inv % p
                m[below] = (m[below] - np.outer(factors, m[r])) % p
        piv_cols.append(c)
        r += 1
    det_factor = 0
    if track:
        det_factor = sign % p
        for i, c in enumerate(piv_cols):
            det_factor = det_factor * int(m[i, c]) % p
    return m, piv_cols, det_factor


def rank(a, p: int) -> int:
    """Row rank via fraction-free forward elimination."""
    m = as_matrix(a, p)
    if 0 in m.shape:
        return 0
    _, piv, _ = _eliminate(m, p, reduced=False)
    return len(piv)


def rref(a, p: int):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    m = as_matrix(a, p)
    if 0 in m.shape:
        return m, []
    return _eliminate(m, p, reduced=True)[:2]


def nullspace(a, p: int) -> np.ndarray:
    """Basis of the right kernel {v : a @ v = 0}, one vector per row.

    Vectors are in reduced echelon normal form: each carries a 1 in its
    own free coordinate and zeros in the other free coordinates, with
    pivot coordinates filled by back-substitution.  Deterministic given
    the column order; row count equals cols - rank(a).
    """
    m = as_matrix(a, p)
    cols = m.shape[1]
    if m.shape[0] == 0 or cols == 0:
        return np.eye(cols, dtype=np.int64)
    red, piv = rref(m, p)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-red[i, f]) % p
    return basis


def solve(a, b, p: int):
    """One solution x of a @ x = b (free coordinates zero), or None."""
    m = as_matrix(a, p)
    rhs = np.mod(np.array(b, dtype=np.int64).reshape(-1), p)
    if rhs.shape[0] != m.shape[0]:
        raise ValueError("right-hand side length mismatch")
    aug = np.hstack([m, rhs.reshape(-1, 1)])
    red, piv = rref(aug, p)
    if m.shape[1] in piv:
        return None
    x = np.zeros(m.shape[1], dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = red[i, m.shape[1]]
    return x


def det(a, p: int) -> int:
    """Exact determinant; rejects non-square input."""
    m = as_matrix(a, p)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"determinant of non-square matrix {m.shape}")
    if m.shape[0] == 0:
        return 1 % p
    _, piv, factor = _eliminate(m, p, reduced=False, track=True)
    if len(piv) < m.shape[0]:
        return 0
    return factor


def pfaffian(a, p: int) -> int:
    """Pfaffian of a skew-symmetric matrix of even size.

    Skew-symmetric congruence elimination: the matrix is reduced to
    2x2 blocks [[0, b], [-b, 0]] by unit transvections (pfaffian
    preserved) and symmetric transpositions (sign flip).  Satisfies
    pfaffian(a)**2 = det(a); rejects odd size and non-skew input.
    """
    m = as_matrix(a, p)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"pfaffian of non-square matrix {m.shape}")
    if n % 2 != 0:
        raise ValueError(f"pfaffian needs even dimension, got {n}")
    if np.any((m + m.T) % p != 0) or np.any(np.diagonal(m) % p != 0):
        raise ValueError("pfaffian needs a skew-symmetric zero-diagonal matrix")
    result = 1 % p
    sign = 1
    m = m.copy()
    for k in range(0, n, 2):
        col = m[k + 1:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return 0
        j = k + 1 + int(nz[0])
        if j != k + 1:
            m[[k + 1, j]] = m[[j, k + 1]]
            m[:, [k + 1, j]] = m[:, [j, k + 1]]
            sign = -sign
        if k + 2 < n:
            # clear column k below row k+1, then column k+1, by congruence
            for src in (k + 1, k):
                piv = int(m[src, k] if src == k + 1 else m[src, k + 1])
                colidx = k if src == k + 1 else k + 1
                inv = inv_mod(piv, p)
                factors = m[k + 2:, colidx] * inv % p
                m[k + 2:] = (m[k + 2:] - np.outer(factors, m[src])) % p
                m[:, k + 2:] = (m[:, k + 2:] - np.outer(m[:, src], factors)) % p
        result = result * int(m[k, k + 1]) % p
    return result * sign % p
