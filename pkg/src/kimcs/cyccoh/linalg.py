"""Linear algebra over Z and over Z/p^a.

Integer elimination is pure Python (small presentation matrices only).
Elimination over the local ring Z/p^a runs on int64 numpy arrays; every
entry whose valuation is at least the pivot's is an exact multiple of it,
so one sweep per pivot clears its row and column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..arith import factorize


# Integer Smith form ---------------------------------------------------------


@dataclass
class IntSmith:
    """U @ A @ V = diag(d) with U, V unimodular; Uinv = U^-1."""

    d: list
    U: list
    Uinv: list
    V: list
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.d)


def _ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def int_smith(A, track=True) -> IntSmith:
    """Diagonalize an integer matrix (list of rows). The diagonal need not
    satisfy the divisibility chain; callers only use coker structure."""
    r = len(A)
    c = len(A[0]) if r else 0
    M = [list(map(int, row)) for row in A]
    U = _ident(r) if track else None
    Uinv = _ident(r) if track else None
    V = _ident(c) if track else None
    diag = []

    def row_op(i, j, f):  # row_i -= f * row_j
        if f == 0:
            return
        Mi, Mj = M[i], M[j]
        for k in range(c):
            if Mj[k]:
                Mi[k] -= f * Mj[k]
        if track:
            Ui, Uj = U[i], U[j]
            for k in range(r):
                if Uj[k]:
                    Ui[k] -= f * Uj[k]
            for row in Uinv:  # col_j += f * col_i
                if row[i]:
                    row[j] += f * row[i]

    def col_op(i, j, f):  # col_i -= f * col_j
        if f == 0:
            return
        for row in M:
            if row[j]:
                row[i] -= f * row[j]
        if track:
            for row in V:
                if row[j]:
                    row[i] -= f * row[j]

    def swap_rows(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        if track:
            U[i], U[j] = U[j], U[i]
            for row in Uinv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in M:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        if track:
            U[i] = [-x for x in U[i]]
            for row in Uinv:
                row[i] = -row[i]

    for k in range(min(r, c)):
        while True:
            best = None
            for i in range(k, r):
                row = M[i]
                for j in range(k, c):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                return IntSmith(diag, U, Uinv, V, r, c)
            _, i, j = best
            swap_rows(k, i)
            swap_cols(k, j)
            if M[k][k] < 0:
                negate_row(k)
            piv = M[k][k]
            clean = True
            for i in range(k + 1, r):
                if M[i][k]:
                    row_op(i, k, M[i][k] // piv)
                    if M[i][k]:
                        clean = False
            for j in range(k + 1, c):
                if M[k][j]:
                    col_op(j, k, M[k][j] // piv)
                    if M[k][j]:
                        clean = False
            if clean:
                diag.append(piv)
                break
    return IntSmith(diag, U, Uinv, V, r, c)


def int_solve(A, b):
    """Some integer x with A x = b, or None."""
    S = int_smith(A)
    y = [sum(u * v for u, v in zip(Urow, b)) for Urow in S.U]
    z = [0] * S.cols
    for i in range(S.rows):
        if i < S.rank:
            if y[i] % S.d[i]:
                return None
            z[i] = y[i] // S.d[i]
        elif y[i]:
            return None
    return [sum(V_row[j] * z[j] for j in range(S.cols)) for V_row in S.V]


def invariant_factors(orders) -> list[int]:
    """Invariant factors d1 | d2 | ... of a direct sum of cyclic groups
    (order 0 means Z; orders 1 are dropped)."""
    free = sum(1 for o in orders if o == 0)
    powers: dict[int, list[int]] = {}
    for o in orders:
        if o > 1:
            for q, e in factorize(o).factors.items():
                powers.setdefault(q, []).append(q**e)
    for lst in powers.values():
        lst.sort(reverse=True)
    length = max((len(v) for v in powers.values()), default=0)
    out = []
    for i in range(length):
        out.append(math.prod(v[i] for v in powers.values() if i < len(v)))
    return sorted(out) + [0] * free


# Smith form over Z/p^a ------------------------------------------------------


class LocalRing:
    """Z/p^a with valuation and unit-inverse lookup tables."""

    def __init__(self, p: int, a: int):
        self.p, self.a, self.q = p, a, p**a
        q = self.q
        val = np.full(q, a, dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            v, y = 0, x
            while y % p == 0:
                y //= p
                v += 1
            val[x] = v
            if v == 0:
                inv[x] = pow(x, -1, q)
        self.val, self.inv = val, inv


@dataclass
class LocalSmith:
    """P @ A @ Q = diag(p^v) over Z/p^a; pivots have valuation v < a."""

    ring: LocalRing
    v: np.ndarray
    P: np.ndarray | None
    Pinv: np.ndarray | None
    Q: np.ndarray
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.v)


def local_smith(A: np.ndarray, ring: LocalRing, track_left: bool = True) -> LocalSmith:
    q, p = ring.q, ring.p
    A = np.array(A, dtype=np.int64) % q
    r, c = A.shape
    P = np.eye(r, dtype=np.int64) if track_left else None
    Pinv = np.eye(r, dtype=np.int64) if track_left else None
    Q = np.eye(c, dtype=np.int64)
    vals = []
    for k in range(min(r, c)):
        sub = ring.val[A[k:, k:]]
        flat = int(np.argmin(sub))
        i, j = divmod(flat, c - k)
        v = int(sub[i, j])
        if v >= ring.a:
            break
        i += k
        j += k
        if i != k:
            A[[k, i]] = A[[i, k]]
            if track_left:
                P[[k, i]] = P[[i, k]]
                Pinv[:, [k, i]] = Pinv[:, [i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            Q[:, [k, j]] = Q[:, [j, k]]
        pv = p**v
        unit = int(A[k, k]) // pv
        uinv = int(ring.inv[unit % q])
        A[k] = A[k] * uinv % q
        if track_left:
            P[k] = P[k] * uinv % q
            Pinv[:, k] = Pinv[:, k] * (unit % q) % q
        f = A[k + 1 :, k] // pv
        nz = np.nonzero(f)[0] + k + 1
        if len(nz):
            fz = f[nz - k - 1]
            A[nz] = (A[nz] - np.outer(fz, A[k])) % q
            if track_left:
                P[nz] = (P[nz] - np.outer(fz, P[k])) % q
                Pinv[:, k] = (Pinv[:, k] + Pinv[:, nz] @ fz) % q
        g = A[k, k + 1 :] // pv
        nzc = np.nonzero(g)[0] + k + 1
        if len(nzc):
            gz = g[nzc - k - 1]
            A[k, nzc] = 0
            Q[:, nzc] = (Q[:, nzc] - np.outer(Q[:, k], gz)) % q
        vals.append(v)
    return LocalSmith(ring, np.array(vals, dtype=np.int64), P, Pinv, Q, r, c)


def local_kernel(A: np.ndarray, ring: LocalRing) -> np.ndarray:
    """Columns generating {x : A x = 0} over Z/p^a."""
    S = local_smith(A, ring, track_left=False)
    cols = []
    for i in range(S.cols):
        if i < S.rank:
            if S.v[i] == 0:
                continue
            cols.append(S.Q[:, i] * ring.p ** (ring.a - int(S.v[i])) % ring.q)
        else:
            cols.append(S.Q[:, i])
    if not cols:
        return np.zeros((S.cols, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def local_solve(S: LocalSmith, b: np.ndarray) -> np.ndarray | None:
    """x with A x = b for the factored A, or None. b may be a matrix of columns."""
    ring = S.ring
    q = ring.q
    y = S.P @ (np.asarray(b, dtype=np.int64) % q) % q
    vec = y.ndim == 1
    if vec:
        y = y[:, None]
    z = np.zeros((S.cols, y.shape[1]), dtype=np.int64)
    for i in range(S.rows):
        if i < S.rank:
            pv = ring.p ** int(S.v[i])
            if np.any(y[i] % pv):
                return None
            z[i] = y[i] // pv
        elif np.any(y[i]):
            return None
    x = S.Q @ z % q
    return x[:, 0] if vec else x
