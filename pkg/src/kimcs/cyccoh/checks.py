"""Structural checks on the cohomology of Z/n, run as a reproducible suite.

Every check is labelled an *analogue*: it is the finite cyclic group form of
a statement whose original setting is sheaf cohomology over a curve.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from ..arith import factorize
from .core import (
    SIGN_CONVENTION,
    Cochain,
    Pairing,
    bockstein_sequence,
    cohomology_group,
    connecting,
    cup,
    cyclic,
    identity_cocycle,
    integral_sequence,
    lift,
    push,
)

MAX_SUITE_N = 8
SIGN_PAIRS = 20


@dataclass
class CheckItem:
    name: str
    n: int
    passed: bool
    detail: str = ""
    witness: str | None = None
    analogue: bool = True


@dataclass
class SuiteReport:
    conventions: str
    items: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    def failures(self) -> list:
        return [it for it in self.items if not it.passed]

    def to_dict(self) -> dict:
        return {
            "conventions": self.conventions,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "items": [asdict(it) for it in self.items],
        }


def _mult(n_group: int, a: int, b: int, c: int) -> Pairing:
    return Pairing.multiplication(cyclic(n_group, a), cyclic(n_group, b), cyclic(n_group, c))


def h3_evaluation(z: Cochain) -> int:
    """Evaluate a 3-cocycle with trivial cyclic coefficients Z/m on the cycle
    sum_a [1 | a | 1], which generates H_3(Z/N, Z) = Z/N.  Since H_2 = 0 this
    value determines the class in H^3(Z/N, Z/m) = Hom(Z/N, Z/m)."""
    M = z.module
    if M.rank != 1 or z.degree != 3 or M.action != ((1,),):
        raise ValueError("needs a 3-cochain with trivial rank-one coefficients")
    N, m = M.n, M.orders[0]
    total = sum(int(z(1, a, 1)[0]) for a in range(N))
    return total % m if m else total


def check_orders(n: int) -> CheckItem:
    M = cyclic(n, n)
    orders = [cohomology_group(M, k).order for k in (1, 2, 3)]
    return CheckItem("cohomology orders |H^k(Z/n, Z/n)| = n, k=1,2,3", n, orders == [n, n, n], f"orders {orders}")


def check_cup_generation(n: int) -> CheckItem:
    """c1 = identity, c2 = its Bockstein; c1 u c2 generates H^3 and the cup
    pairing H^1 x H^2 -> H^3 is onto."""
    M = cyclic(n, n)
    H1, H2, H3 = (cohomology_group(M, k) for k in (1, 2, 3))
    c1 = identity_cocycle(n)
    c2 = connecting(bockstein_sequence(n), c1)
    pair = _mult(n, n, n, n)
    c = cup(c1, c2, pair)
    ok_gen = H1.class_order(c1) == n and H2.class_order(c2) == n
    ok_c = c.is_cocycle() and H3.class_order(c) == n and H3.order == n
    hits = {H3.coords(cup(a, b, pair)) for a in H1.elements() for b in H2.elements()}
    ok_onto = len(hits) == H3.order
    detail = f"ord(c1)={H1.class_order(c1)} ord(c2)={H2.class_order(c2)} ord(c1 u c2)={H3.class_order(c)} |H3|={H3.order}"
    return CheckItem("cup generation: c1 u c2 generates H^3", n, ok_gen and ok_c and ok_onto, detail)


def _p_min(n: int) -> int:
    return min(factorize(n).factors)


def verify_sign_identity(n: int, pairs: int = SIGN_PAIRS, seed: int = 0) -> list[CheckItem]:
    """Sign rule for the Bockstein d of 0 -> Z/n -> Z/n^2 -> Z/n -> 0.

    * Leibniz form on G = Z/n, for random 1-cocycles a, b:
          d(a u b) = d(a) u b - a u d(b)            in H^3(G, Z/n).
      The report counts pairs where a u d(b) != 0 and pairs on which the
      opposite sign would fail, so a pass is not vacuous.
    * Reduced form d(a u b) = -(a~ u d(b)) for a whose lift a~ to Z/n^2 is
      itself a cocycle.  On Z/n only a = 0 lifts, so the check runs on
      G = Z/(n p) (p the least prime of n), where a: 1 -> multiple of n/p
      lifts to a homomorphism into Z/n^2; a~ u d(b) uses Z/n^2 x Z/n -> Z/n.
      With trivial coefficients both sides vanish on every such pair; the
      report says so rather than counting it as evidence.
    """
    rng = np.random.default_rng(seed)
    items = []

    # Leibniz form
    M = cyclic(n, n)
    seq = bockstein_sequence(n)
    pair = _mult(n, n, n, n)
    H3 = cohomology_group(M, 3)
    c1 = identity_cocycle(n)
    bad, nonzero, sensitive = None, 0, 0
    for _ in range(pairs):
        a, b = (int(v) for v in rng.integers(0, n, size=2))
        alpha, beta = a * c1, b * c1
        lhs = connecting(seq, cup(alpha, beta, pair), rng)
        left = cup(connecting(seq, alpha, rng), beta, pair)
        right = cup(alpha, connecting(seq, beta, rng), pair)
        nonzero += not H3.is_zero(right)
        sensitive += not H3.equal(lhs, left + right)
        if not H3.equal(lhs, left - right):
            bad = f"a={a}, b={b}"
            break
    items.append(
        CheckItem(
            "sign identity, Leibniz form d(a u b) = da u b - a u db",
            n,
            bad is None,
            f"{pairs} random pairs on Z/{n}; a u db != 0 on {nonzero}; opposite sign fails on {sensitive}",
            bad,
        )
    )

    # reduced form on a larger cyclic group
    p = _p_min(n)
    N = n * p
    seqN = bockstein_sequence(N, n)
    big = cyclic(N, n * n)
    pairN = Pairing(big, cyclic(N, n), cyclic(N, n), (((1,),),))
    pairN.validate()
    unit = n // p
    bad, nonzero = None, 0
    for _ in range(pairs):
        k = int(rng.integers(1, p + 1))
        b = int(rng.integers(0, n))
        alpha_t = Cochain(big, 1, (k * unit * np.arange(N))[:, None])
        alpha = push(alpha_t, cyclic(N, n), [1])
        beta = Cochain(cyclic(N, n), 1, (b * np.arange(N))[:, None])
        assert alpha_t.is_cocycle() and alpha.is_cocycle() and beta.is_cocycle()
        lhs = connecting(seqN, cup(alpha, beta, _mult(N, n, n, n)), rng)
        rhs = -cup(alpha_t, connecting(seqN, beta, rng), pairN)
        lv, rv = h3_evaluation(lhs), h3_evaluation(rhs)
        nonzero += lv != 0 or rv != 0
        if lv != rv:
            bad = f"a~(1)={k * unit}, b(1)={b}: {lv} vs {rv}"
            break
    note = "both sides zero on every pair" if nonzero == 0 else f"{nonzero} pairs with nonzero sides"
    items.append(
        CheckItem(
            "sign identity, reduced form d(a u b) = -(a~ u db), a~ a cocycle lift",
            n,
            bad is None,
            f"{pairs} random pairs on Z/{N}, a~ into Z/{n * n}; {note}",
            bad,
        )
    )
    return items


def literal_sign_form(n: int, pairs: int = SIGN_PAIRS, seed: int = 0) -> dict:
    """Test d(a u b) = -(a~ u db) on G = Z/n with a~ merely a cochain lift of a
    to Z/n^2 (a~ u db taken through Z/n^2 x Z/n -> Z/n).  This reading drops
    the term da u b of the Leibniz rule, so it fails whenever a*b != 0 mod n."""
    rng = np.random.default_rng(seed)
    M = cyclic(n, n)
    seq = bockstein_sequence(n)
    pair = _mult(n, n, n, n)
    pair_t = Pairing(cyclic(n, n * n), M, M, (((1,),),))
    H3 = cohomology_group(M, 3)
    c1 = identity_cocycle(n)
    holds, failures = 0, []
    for _ in range(pairs):
        a, b = (int(v) for v in rng.integers(0, n, size=2))
        alpha, beta = a * c1, b * c1
        alpha_t = lift(alpha, seq, rng)
        lhs = connecting(seq, cup(alpha, beta, pair), rng)
        rhs = -cup(alpha_t, connecting(seq, beta, rng), pair_t)
        if H3.equal(lhs, rhs):
            holds += 1
        else:
            failures.append((a, b, H3.coords(lhs), H3.coords(rhs)))
    return {"n": n, "pairs": pairs, "holds": holds, "failures": failures}


def verify_bockstein_factorization(n: int) -> CheckItem:
    """Bockstein of 0 -> Z/n -> Z/n^2 -> Z/n -> 0 equals the connecting map of
    0 -> Z -n-> Z -> Z/n -> 0 followed by reduction mod n, on every class of
    H^1 and H^2 with Z/n coefficients."""
    M = cyclic(n, n)
    seq_b, seq_z = bockstein_sequence(n), integral_sequence(n)
    checked, bad = 0, None
    for k in (1, 2):
        Hk, Hn = cohomology_group(M, k), cohomology_group(M, k + 1)
        for x in Hk.elements():
            lhs = connecting(seq_b, x)
            rhs = push(connecting(seq_z, x), M, [1])
            checked += 1
            if not Hn.equal(lhs, rhs):
                bad = f"degree {k}, class {Hk.coords(x)}"
                break
    return CheckItem("Bockstein factorization through Z", n, bad is None, f"{checked} classes in H^1, H^2", bad)


def verify_periodicity(n: int, m: int) -> CheckItem:
    """Cup with the generator t = d(identity) of H^2(Z/n, Z) maps H^1(Z/n, Z/m)
    bijectively onto H^3(Z/n, Z/m)."""
    M = cyclic(n, m)
    t = connecting(integral_sequence(n), identity_cocycle(n))
    HZ = cohomology_group(cyclic(n, 0), 2)
    pair = Pairing(cyclic(n, 0), M, M, (((1,),),))
    pair.validate()
    if m == 0:
        H1 = cohomology_group(M, 1)
        return CheckItem(f"periodicity t u -: H^1 -> H^3, M = Z", n, H1.order == 1, "H^1 = 0")
    H1, H3 = cohomology_group(M, 1), cohomology_group(M, 3)
    images = [H3.coords(cup(t, x, pair)) for x in H1.elements()]
    ok = HZ.class_order(t) == n and H1.order == H3.order and len(set(images)) == len(images)
    w = None if ok else f"|H1|={H1.order} |H3|={H3.order} distinct images={len(set(images))}"
    return CheckItem(f"periodicity t u -: H^1 -> H^3, M = Z/{m}", n, ok, f"|H^1| = |H^3| = {H1.order}", w)


def periodicity_modules(n: int) -> list[int]:
    return sorted({n, n * n} | {m for m in range(2, n + 1) if n % m == 0})


def suite(n_list, seed: int = 0, pairs: int = SIGN_PAIRS) -> SuiteReport:
    report = SuiteReport(SIGN_CONVENTION)
    start = time.perf_counter()
    for n in n_list:
        if not 2 <= n <= MAX_SUITE_N:
            raise ValueError(f"n must be between 2 and {MAX_SUITE_N}")
        report.items.append(check_orders(n))
        report.items.append(check_cup_generation(n))
        report.items.extend(verify_sign_identity(n, pairs, seed))
        report.items.append(verify_bockstein_factorization(n))
        for m in periodicity_modules(n):
            report.items.append(verify_periodicity(n, m))
    report.seconds = time.perf_counter() - start
    return report
