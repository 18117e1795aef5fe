"""Inhomogeneous bar cochains of G = Z/n with coefficients in a finitely
generated abelian group carrying an action of the generator g = 1.

Sign conventions (standard):

    (df)(g1..g_{k+1}) = g1.f(g2..g_{k+1})
                        + sum_{i=1..k} (-1)^i f(.., g_i g_{i+1}, ..)
                        + (-1)^{k+1} f(g1..g_k)

    (a u b)(g1..g_{i+j}) = pair(a(g1..g_i), (g1...g_i).b(g_{i+1}..g_{i+j}))

so d(a u b) = da u b + (-1)^i a u db.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from ..arith import factorize
from .linalg import (
    LocalRing,
    int_smith,
    int_solve,
    invariant_factors,
    local_kernel,
    local_smith,
    local_solve,
)

MAX_DEGREE = 4

SIGN_CONVENTION = (
    "inhomogeneous bar cochains; d = g1.f(tail) + sum (-1)^i f(merge i) + (-1)^(k+1) f(head); "
    "cup (a u b)(g) = a(head) . (head).b(tail); connecting maps by lift, coboundary, pullback"
)


class ExactnessError(ValueError):
    """A sequence of modules that is not short exact."""


@dataclass(frozen=True)
class GModule:
    """Direct sum of cyclic groups Z/orders[i] (0 means Z) with the generator
    of Z/n acting by the integer matrix ``action``."""

    n: int
    orders: tuple
    action: tuple

    @classmethod
    def trivial(cls, n: int, *orders: int) -> "GModule":
        r = len(orders)
        return cls(n, tuple(orders), tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))

    @classmethod
    def make(cls, n: int, orders, action) -> "GModule":
        M = cls(n, tuple(int(o) for o in orders), tuple(tuple(int(x) for x in row) for row in action))
        M.validate()
        return M

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def finite(self) -> bool:
        return all(o > 0 for o in self.orders)

    @property
    def free(self) -> bool:
        return all(o == 0 for o in self.orders)

    @property
    def size(self) -> int | None:
        return math.prod(self.orders) if self.finite else None

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.finite and self.orders else 1

    def matrix(self) -> np.ndarray:
        return np.array(self.action, dtype=np.int64).reshape(self.rank, self.rank)

    def reduce(self, values: np.ndarray) -> np.ndarray:
        """Reduce the last axis entrywise modulo the cyclic orders."""
        values = np.asarray(values, dtype=np.int64)
        out = values.copy()
        for i, o in enumerate(self.orders):
            if o:
                out[..., i] %= o
        return out

    def is_hom(self, target: "GModule", mat) -> bool:
        """Is ``mat`` a well-defined map self -> target (ignoring the action)?"""
        mat = np.asarray(mat, dtype=np.int64).reshape(target.rank, self.rank)
        for i, oi in enumerate(target.orders):
            for j, oj in enumerate(self.orders):
                x = int(mat[i, j]) * oj
                if oi == 0 and oj and mat[i, j]:
                    return False
                if oi and x % oi:
                    return False
        return True

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("group order must be positive")
        if any(o < 0 for o in self.orders):
            raise ValueError("cyclic orders must be >= 0")
        A = self.matrix()
        if A.shape != (self.rank, self.rank):
            raise ValueError("action matrix has the wrong shape")
        if not self.is_hom(self, A):
            raise ValueError("action does not respect the cyclic relations")
        An = np.linalg.matrix_power(A, self.n) if self.rank else A
        if np.any(self.reduce((An - np.eye(self.rank, dtype=np.int64)).T)):
            raise ValueError("generator^n does not act as the identity")

    def powers(self) -> np.ndarray:
        return _action_powers(self)

    def elements(self):
        if not self.finite:
            raise ValueError("module is infinite")
        return [np.array(v, dtype=np.int64) for v in product(*(range(o) for o in self.orders))]

    def __str__(self):
        parts = ["Z" if o == 0 else f"Z/{o}" for o in self.orders]
        act = "" if self.action == GModule.trivial(self.n, *self.orders).action else " (twisted)"
        return "+".join(parts) + act


@lru_cache(maxsize=None)
def _action_powers(M: GModule) -> np.ndarray:
    A = M.matrix()
    out = np.zeros((M.n, M.rank, M.rank), dtype=np.int64)
    cur = np.eye(M.rank, dtype=np.int64)
    for g in range(M.n):
        out[g] = cur
        cur = cur @ A
        for i, o in enumerate(M.orders):
            if o:
                cur[i] %= o
    return out


@lru_cache(maxsize=None)
def tuples(n: int, k: int) -> np.ndarray:
    """All k-tuples of group elements, row t = digits of t in base n (g1 first)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(n**k)
    cols = [(idx // n ** (k - 1 - i)) % n for i in range(k)]
    return np.stack(cols, axis=1).astype(np.int64)


def _encode(n: int, digits: np.ndarray) -> np.ndarray:
    k = digits.shape[1]
    out = np.zeros(digits.shape[0], dtype=np.int64)
    for i in range(k):
        out = out * n + digits[:, i]
    return out


@lru_cache(maxsize=None)
def _face_indices(n: int, k: int):
    """For (k+1)-tuples: g1, tail index, merged indices (i=1..k), head index."""
    T = tuples(n, k + 1)
    g1 = T[:, 0].copy()
    tail = _encode(n, T[:, 1:])
    head = _encode(n, T[:, :-1])
    merged = []
    for i in range(k):
        D = np.concatenate([T[:, :i], ((T[:, i] + T[:, i + 1]) % n)[:, None], T[:, i + 2 :]], axis=1)
        merged.append(_encode(n, D))
    return g1, tail, merged, head


@dataclass
class Cochain:
    module: GModule
    degree: int
    table: np.ndarray  # shape (n**degree, rank)

    def __post_init__(self):
        M = self.module
        if not 0 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"degree must be between 0 and {MAX_DEGREE}")
        t = np.asarray(self.table, dtype=np.int64).reshape(M.n**self.degree, M.rank)
        self.table = M.reduce(t)

    @property
    def n(self) -> int:
        return self.module.n

    @classmethod
    def zero(cls, M: GModule, k: int) -> "Cochain":
        return cls(M, k, np.zeros((M.n**k, M.rank), dtype=np.int64))

    @classmethod
    def from_function(cls, M: GModule, k: int, fn) -> "Cochain":
        T = tuples(M.n, k)
        return cls(M, k, np.array([np.atleast_1d(fn(*row)) for row in T.tolist()], dtype=np.int64))

    @classmethod
    def random(cls, M: GModule, k: int, rng: np.random.Generator, bound: int = 5) -> "Cochain":
        hi = [o if o else 2 * bound + 1 for o in M.orders]
        vals = np.stack([rng.integers(0, h, size=M.n**k) for h in hi], axis=1) if M.rank else None
        vals = vals - np.array([0 if o else bound for o in M.orders])
        return cls(M, k, vals)

    def __call__(self, *g) -> np.ndarray:
        idx = 0
        for x in g:
            idx = idx * self.n + (x % self.n)
        return self.table[idx]

    def _check(self, o: "Cochain"):
        if o.module != self.module or o.degree != self.degree:
            raise ValueError("cochains of different modules or degrees")

    def __add__(self, o: "Cochain") -> "Cochain":
        self._check(o)
        return Cochain(self.module, self.degree, self.table + o.table)

    def __sub__(self, o: "Cochain") -> "Cochain":
        self._check(o)
        return Cochain(self.module, self.degree, self.table - o.table)

    def __neg__(self) -> "Cochain":
        return Cochain(self.module, self.degree, -self.table)

    def __rmul__(self, k: int) -> "Cochain":
        return Cochain(self.module, self.degree, int(k) * self.table)

    def __eq__(self, o) -> bool:
        return (
            isinstance(o, Cochain)
            and o.module == self.module
            and o.degree == self.degree
            and np.array_equal(o.table, self.table)
        )

    def is_zero(self) -> bool:
        return not np.any(self.table)

    def is_cocycle(self) -> bool:
        return coboundary(self).is_zero()

    def flat(self) -> np.ndarray:
        return self.table.reshape(-1)


def coboundary(c: Cochain) -> Cochain:
    M, k, n = c.module, c.degree, c.n
    if k >= MAX_DEGREE:
        raise ValueError(f"coboundary of degree {k} exceeds the supported range")
    g1, tail, merged, head = _face_indices(n, k)
    acts = M.powers()
    f = c.table
    out = np.einsum("tij,tj->ti", acts[g1], f[tail])
    for i, idx in enumerate(merged, start=1):
        out += (-1) ** i * f[idx]
    out += (-1) ** (k + 1) * f[head]
    return Cochain(M, k + 1, out)


@lru_cache(maxsize=None)
def coboundary_matrix(M: GModule, k: int) -> np.ndarray:
    """Integer matrix of d on C^k -> C^{k+1}, coordinates (tuple, component)."""
    n, r = M.n, M.rank
    g1, tail, merged, head = _face_indices(n, k)
    rows_t = n ** (k + 1)
    D = np.zeros((rows_t * r, n**k * r), dtype=np.int64)
    acts = M.powers()
    t = np.arange(rows_t)
    for i in range(r):
        for j in range(r):
            np.add.at(D, (t * r + i, tail * r + j), acts[g1, i, j])
    for i in range(r):
        for s, idx in enumerate(merged, start=1):
            np.add.at(D, (t * r + i, idx * r + i), (-1) ** s)
        np.add.at(D, (t * r + i, head * r + i), (-1) ** (k + 1))
    D.setflags(write=False)
    return D


# Module maps -----------------------------------------------------------------


def _as_mat(M: GModule, N: GModule, mat) -> np.ndarray:
    return np.asarray(mat, dtype=np.int64).reshape(N.rank, M.rank)


def is_equivariant(M: GModule, N: GModule, mat) -> bool:
    F = _as_mat(M, N, mat)
    lhs = F @ M.matrix()
    rhs = N.matrix() @ F
    return not np.any(N.reduce((lhs - rhs).T))


def push(c: Cochain, target: GModule, mat) -> Cochain:
    """Apply a coefficient homomorphism to every value."""
    F = _as_mat(c.module, target, mat)
    return Cochain(target, c.degree, c.table @ F.T)


@dataclass(frozen=True)
class Pairing:
    """Bilinear map M x N -> P, (x, y) -> sum x_a y_b tensor[a][b]."""

    left: GModule
    right: GModule
    target: GModule
    tensor: tuple

    @classmethod
    def multiplication(cls, left: GModule, right: GModule, target: GModule) -> "Pairing":
        """Cyclic x cyclic -> cyclic, (x, y) -> x*y."""
        if not (left.rank == right.rank == target.rank == 1):
            raise ValueError("multiplication pairing needs rank-one modules")
        P = cls(left, right, target, (((1,),),))
        P.validate()
        return P

    def array(self) -> np.ndarray:
        return np.array(self.tensor, dtype=np.int64).reshape(self.left.rank, self.right.rank, self.target.rank)

    def validate(self) -> None:
        T = self.array()
        P = self.target
        # well defined in each variable: order(e_a) * T[a, b] = 0 in P, and symmetrically
        for a, oa in enumerate(self.left.orders):
            for b, ob in enumerate(self.right.orders):
                for c, oc in enumerate(P.orders):
                    for o in (oa, ob):
                        if o and oc and (o * int(T[a, b, c])) % oc:
                            raise ValueError("pairing is not well defined")
                        if o and oc == 0 and T[a, b, c]:
                            raise ValueError("pairing is not well defined")


def cup(alpha: Cochain, beta: Cochain, pairing: Pairing) -> Cochain:
    if alpha.module != pairing.left or beta.module != pairing.right:
        raise ValueError("cochain modules do not match the pairing")
    n = alpha.n
    i, j = alpha.degree, beta.degree
    if i + j > MAX_DEGREE:
        raise ValueError("cup product degree too large")
    T = tuples(n, i + j)
    head = _encode(n, T[:, :i])
    tail = _encode(n, T[:, i:])
    shift = T[:, :i].sum(axis=1) % n
    acts = beta.module.powers()
    b = np.einsum("tij,tj->ti", acts[shift], beta.table[tail])
    a = alpha.table[head]
    out = np.einsum("ta,tb,abc->tc", a, b, pairing.array())
    return Cochain(pairing.target, i + j, out)


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> sub --inc--> mid --proj--> quot -> 0."""

    sub: GModule
    mid: GModule
    quot: GModule
    inc: tuple
    proj: tuple

    @classmethod
    def make(cls, sub, mid, quot, inc, proj) -> "ShortExactSequence":
        s = cls(sub, mid, quot, tuple(np.asarray(inc).reshape(-1).tolist()), tuple(np.asarray(proj).reshape(-1).tolist()))
        s.validate()
        return s

    def inc_mat(self) -> np.ndarray:
        return _as_mat(self.sub, self.mid, self.inc)

    def proj_mat(self) -> np.ndarray:
        return _as_mat(self.mid, self.quot, self.proj)

    def validate(self) -> None:
        A, B, C = self.sub, self.mid, self.quot
        if not (A.n == B.n == C.n):
            raise ExactnessError("modules over different groups")
        i, p = self.inc_mat(), self.proj_mat()
        if not (A.is_hom(B, i) and B.is_hom(C, p)):
            raise ExactnessError("maps are not well defined")
        if not (is_equivariant(A, B, i) and is_equivariant(B, C, p)):
            raise ExactnessError("maps are not equivariant")
        if np.any(C.reduce((p @ i).T)):
            raise ExactnessError("proj o inc != 0")
        for e in np.eye(C.rank, dtype=np.int64):
            if _lift_value(B, C, p, e) is None:
                raise ExactnessError("proj is not surjective")
        if A.finite and B.finite and C.finite:
            if A.size * C.size != B.size:
                raise ExactnessError("orders do not multiply")
            images = {tuple(B.reduce(i @ x)) for x in A.elements()}
            if len(images) != A.size:
                raise ExactnessError("inc is not injective")
        else:
            free = lambda M: sum(1 for o in M.orders if o == 0)  # noqa: E731
            if free(A) + free(C) != free(B):
                raise ExactnessError("free ranks do not add up")
            if A.free and np.linalg.matrix_rank(i.astype(float)) < A.rank:
                raise ExactnessError("inc is not injective")


def _lift_value(M: GModule, N: GModule, mat: np.ndarray, target) -> np.ndarray | None:
    """Some x in M with mat @ x = target in N."""
    rels = [o for o in N.orders]
    cols = mat.tolist()
    A = [list(row) + [rels[i] if j == i else 0 for j in range(N.rank)] for i, row in enumerate(cols)]
    sol = int_solve(A, [int(v) for v in target])
    if sol is None:
        return None
    return M.reduce(np.array(sol[: M.rank], dtype=np.int64))


def _map_values(table: np.ndarray, solver) -> np.ndarray:
    cache: dict = {}
    out = []
    for row in table.tolist():
        key = tuple(row)
        if key not in cache:
            val = solver(row)
            if val is None:
                raise ValueError(f"value {key} cannot be lifted / pulled back")
            cache[key] = val
        out.append(cache[key])
    return np.array(out, dtype=np.int64).reshape(table.shape[0], -1)


def lift(c: Cochain, seq: ShortExactSequence, rng: np.random.Generator | None = None) -> Cochain:
    """A cochain in mid mapping to c; randomized by sub-values when rng is given."""
    p = seq.proj_mat()
    table = _map_values(c.table, lambda v: _lift_value(seq.mid, seq.quot, p, v))
    if rng is not None:
        noise = Cochain.random(seq.sub, c.degree, rng)
        table = table + noise.table @ seq.inc_mat().T
    return Cochain(seq.mid, c.degree, table)


def pullback(c: Cochain, seq: ShortExactSequence) -> Cochain:
    """The unique sub-valued cochain whose image under inc is c."""
    i = seq.inc_mat()
    table = _map_values(c.table, lambda v: _lift_value(seq.sub, seq.mid, i, v))
    out = Cochain(seq.sub, c.degree, table)
    if push(out, seq.mid, i) != c:
        raise ValueError("cochain does not lie in the image of inc")
    return out


def connecting(seq: ShortExactSequence, c: Cochain, rng: np.random.Generator | None = None) -> Cochain:
    """Connecting map H^k(quot) -> H^{k+1}(sub): lift, coboundary, pull back."""
    if c.module != seq.quot:
        raise ValueError("class does not live in the quotient module")
    if not c.is_cocycle():
        raise ValueError("connecting map needs a cocycle")
    return pullback(coboundary(lift(c, seq, rng)), seq)


# Standard modules and sequences ------------------------------------------------


def cyclic(n: int, m: int) -> GModule:
    """Z/m (m = 0 for Z) with trivial action."""
    return GModule.trivial(n, m)


def bockstein_sequence(n: int, m: int | None = None) -> ShortExactSequence:
    """0 -> Z/m -> Z/m^2 -> Z/m -> 0."""
    m = n if m is None else m
    return ShortExactSequence.make(cyclic(n, m), cyclic(n, m * m), cyclic(n, m), [m], [1])


def integral_sequence(n: int, m: int | None = None) -> ShortExactSequence:
    """0 -> Z --m--> Z -> Z/m -> 0."""
    m = n if m is None else m
    return ShortExactSequence.make(cyclic(n, 0), cyclic(n, 0), cyclic(n, m), [m], [1])


def identity_cocycle(n: int, m: int | None = None) -> Cochain:
    """The 1-cocycle g^a -> a in Z/m (a homomorphism when m | n)."""
    m = n if m is None else m
    return Cochain(cyclic(n, m), 1, np.arange(n)[:, None])


# Cohomology groups ---------------------------------------------------------------


@dataclass
class _PrimePart:
    p: int
    a: int
    ring: LocalRing
    exps: tuple  # v_p(order) per coordinate
    lam: list  # summand exponents
    gens_y: list  # generator vectors in y-coordinates
    SZ: object
    PR: np.ndarray


class CohomologyGroup:
    """H^k(Z/n, M) with explicit generators and class coordinates."""

    def __init__(self, M: GModule, k: int):
        if not 0 <= k <= MAX_DEGREE - 1:
            raise ValueError(f"cohomology degree must be between 0 and {MAX_DEGREE - 1}")
        self.module, self.degree, self.n = M, k, M.n
        if M.finite:
            self._build_finite()
        elif M.free:
            self._build_free()
        else:
            raise NotImplementedError("mixed torsion/free coefficient modules are not supported")

    # finite coefficients: p-primary parts over Z/p^a
    def _build_finite(self):
        M, k = self.module, self.degree
        self.kind = "finite"
        N = M.n**k * M.rank
        delta = coboundary_matrix(M, k)
        prev = coboundary_matrix(M, k - 1) if k > 0 else np.zeros((N, 0), dtype=np.int64)
        primes = sorted(factorize(M.exponent).factors) if M.exponent > 1 else []
        self.parts = []
        for p in primes:
            exps = tuple(_vp(o, p) for o in M.orders)
            a = max(exps)
            ring = LocalRing(p, a)
            q = ring.q
            coord_exp = np.tile(np.array(exps, dtype=np.int64), M.n**k)
            next_exp = np.tile(np.array(exps, dtype=np.int64), M.n ** (k + 1))
            scale = np.array([p ** (a - e) for e in next_exp], dtype=np.int64)
            Ak = (scale[:, None] * (delta % q)) % q
            Zg = local_kernel(Ak, ring)
            K = np.diag(np.array([p**e % q for e in coord_exp], dtype=np.int64))
            Bg = np.concatenate([prev % q, K], axis=1)
            SZ = local_smith(Zg, ring)
            X = local_solve(SZ, Bg)
            assert X is not None, "coboundaries are not cocycles"
            kerZ = local_kernel(Zg, ring)
            Rel = np.concatenate([X, kerZ], axis=1)
            SR = local_smith(Rel, ring)
            z = Zg.shape[1]
            lam = []
            gens = []
            for i in range(z):
                li = int(SR.v[i]) if i < SR.rank else a
                if li == 0:
                    continue
                lam.append(li)
                gens.append(Zg @ SR.Pinv[:, i] % q)
            part = _PrimePart(p, a, ring, exps, lam, gens, SZ, SR.P)
            part.keep = [i for i in range(z) if (int(SR.v[i]) if i < SR.rank else a) > 0]
            self.parts.append(part)
        self.summands = [(pt.p**l) for pt in self.parts for l in pt.lam]

    def _build_free(self):
        M, k = self.module, self.degree
        self.kind = "free"
        if k == 0:
            delta = coboundary_matrix(M, 0)
            S = int_smith(delta.tolist())
            self._h0_basis = [np.array([row[i] for row in S.V], dtype=np.int64) for i in range(S.rank, S.cols)]
            self.summands = [0] * len(self._h0_basis)
            return
        prev = coboundary_matrix(M, k - 1)
        S = int_smith(prev.tolist())
        self._smith = S
        self._torsion = [i for i in range(S.rank) if abs(S.d[i]) > 1]
        self.summands = [abs(S.d[i]) for i in self._torsion]
        self._free_gens = [
            np.array([row[i] for row in S.Uinv], dtype=np.int64) for i in self._torsion
        ]

    # structure
    @property
    def invariants(self) -> list[int]:
        return invariant_factors(self.summands)

    @property
    def order(self) -> int | None:
        if any(s == 0 for s in self.summands):
            return None
        return math.prod(self.summands)

    def generators(self) -> list[Cochain]:
        """One cocycle per cyclic summand, in the order of ``summands``."""
        M, k = self.module, self.degree
        shape = (M.n**k, M.rank)
        if self.kind == "free":
            vecs = self._h0_basis if k == 0 else self._free_gens
            return [Cochain(M, k, v.reshape(shape)) for v in vecs]
        out = []
        for pt in self.parts:
            for y in pt.gens_y:
                out.append(Cochain(M, k, self._from_y(pt, y).reshape(shape)))
        return out

    def _from_y(self, pt: _PrimePart, y: np.ndarray) -> np.ndarray:
        M = self.module
        orders = np.tile(np.array(M.orders, dtype=np.int64), M.n**self.degree)
        exps = np.tile(np.array(pt.exps, dtype=np.int64), M.n**self.degree)
        out = np.zeros_like(y)
        for idx in range(len(y)):
            e = int(exps[idx])
            if e == 0:
                continue
            pe = pt.p**e
            rest = int(orders[idx]) // pe
            # x = y mod p^e, x = 0 mod rest
            x = (int(y[idx]) % pe) * rest * pow(rest, -1, pe) % (pe * rest)
            out[idx] = x
        return out

    def coords(self, c: Cochain) -> tuple:
        """Coordinates of the class of a cocycle, one entry per summand."""
        if c.module != self.module or c.degree != self.degree:
            raise ValueError("cochain does not belong to this cohomology group")
        if not c.is_cocycle():
            raise ValueError("not a cocycle")
        v = c.flat()
        if self.kind == "free":
            if self.degree == 0:
                basis = np.stack(self._h0_basis, axis=1) if self._h0_basis else np.zeros((len(v), 0), dtype=np.int64)
                sol = int_solve(basis.tolist(), v.tolist()) if basis.shape[1] else []
                assert sol is not None
                return tuple(int(x) for x in sol)
            S = self._smith
            y = [sum(int(u) * int(x) for u, x in zip(row, v)) for row in S.U]
            assert all(y[i] == 0 for i in range(S.rank, S.rows)), "class is not torsion"
            return tuple(y[i] % abs(S.d[i]) for i in self._torsion)
        out = []
        for pt in self.parts:
            q = pt.ring.q
            w = local_solve(pt.SZ, v % q)
            assert w is not None, "cocycle outside the computed kernel"
            cpr = pt.PR @ w % q
            for i, l in zip(pt.keep, pt.lam):
                out.append(int(cpr[i]) % pt.p**l)
        return tuple(out)

    def is_zero(self, c: Cochain) -> bool:
        return not any(self.coords(c))

    def equal(self, a: Cochain, b: Cochain) -> bool:
        return self.is_zero(a - b)

    def class_order(self, c: Cochain) -> int:
        out = 1
        for x, s in zip(self.coords(c), self.summands):
            if s == 0:
                if x:
                    return 0
                continue
            out = math.lcm(out, s // math.gcd(s, x))
        return out

    def combination(self, coeffs) -> Cochain:
        gens = self.generators()
        out = Cochain.zero(self.module, self.degree)
        for a, g in zip(coeffs, gens):
            out = out + int(a) * g
        return out

    def elements(self) -> list[Cochain]:
        """A representative for every class (finite groups only)."""
        if self.order is None:
            raise ValueError("infinite cohomology group")
        return [self.combination(cf) for cf in product(*(range(s) for s in self.summands))]


def _vp(m: int, p: int) -> int:
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def cohomology_group(M: GModule, k: int) -> CohomologyGroup:
    return CohomologyGroup(M, k)


def cohomology(n: int, M: GModule, k: int) -> list[int]:
    """Invariant factors of H^k(Z/n, M); [] is the trivial group, 0 means Z."""
    if M.n != n:
        raise ValueError("module is defined over a different group")
    if not 0 <= k <= 3:
        raise ValueError("degree must be between 0 and 3")
    return cohomology_group(M, k).invariants
