"""The invariant pipeline for the quadratic family F = Q(sqrt(-pt)), K = F(sqrt p).

    eps -> x = eps -> u = x^2 -> y with sigma(y) = u*y -> w = Norm_{K/F}(y)
        -> w*O_F = I^2 -> S = Art([I])

plus the closed-form splitting oracle, the pairing route through
nu*sqrt(p), the triviality criteria, the dyadic witness, and batch scans.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_prime, is_squarefree, kronecker
from .artin import artin_of_class, artin_of_ideal, character_trace
from .idealcls import (
    FactoredIdeal,
    PrimeIdeal,
    QuadForm,
    compose,
    factor_principal,
    ideal_sqrt,
    ideal_to_form,
    identity_form,
    reduced_forms,
)
from .quadtower import (
    ZETA_2,
    EUnit,
    FamilyDatum,
    FElement,
    TowerElement,
    fundamental_unit,
    hilbert90_solve,
    norm_K_over_F,
    sigma,
    validate,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class Certificate:
    datum: FamilyDatum
    epsilon: EUnit
    x: TowerElement
    u: TowerElement
    y: TowerElement
    w: FElement
    wFactored: FactoredIdeal
    I: FactoredIdeal
    IClass: QuadForm
    characterTrace: list
    S: int

    def check(self) -> None:
        """Re-assert every internal invariant; raises AssertionError on failure."""
        d = self.datum
        one = FElement.of(1, 0, d.m)
        assert norm_K_over_F(self.x) == FElement.of(ZETA_2, 0, d.m)
        assert self.u == self.x * self.x
        assert norm_K_over_F(self.u) == one
        assert sigma(self.y) == self.u * self.y
        assert self.w == norm_K_over_F(self.y)
        assert self.wFactored == factor_principal(self.w, d.D)
        assert all(e % 2 == 0 for _, e in self.wFactored.factors)
        assert self.I == ideal_sqrt(self.wFactored)
        assert self.S == artin_of_ideal(self.I, d)
        assert self.IClass == ideal_to_form(self.I, d.D)
        assert compose(self.IClass, self.IClass) == identity_form(d.D)


def artin_from_resolvent(d: FamilyDatum, y: TowerElement) -> tuple[FactoredIdeal, FactoredIdeal, int]:
    """(w*O_F, I, Art([I])) for any nonzero y with sigma(y)/y a square times F*."""
    w = norm_K_over_F(y)
    wf = factor_principal(w, d.D)
    I = ideal_sqrt(wf)
    return wf, I, artin_of_ideal(I, d)


def compute_invariant(d: FamilyDatum) -> Certificate:
    eps = fundamental_unit(d.p)
    x = eps.embed(d)
    assert norm_K_over_F(x) == FElement.of(ZETA_2, 0, d.m)
    u = x * x
    y = hilbert90_solve(u)
    w = norm_K_over_F(y)
    wf, I, S = artin_from_resolvent(d, y)
    cls = ideal_to_form(I, d.D)
    cert = Certificate(d, eps, x, u, y, w, wf, I, cls, character_trace(I, d), S)
    cert.check()
    return cert


def oracle_invariant(d: FamilyDatum) -> int:
    """The prime over p splits in K iff t is a square mod p."""
    return 0 if kronecker(d.t, d.p) == 1 else 1


@dataclass(frozen=True)
class PairingValue:
    """[I] (x) zeta_2 in Cl(O_F) (x) mu_2, with kappa its Artin image."""

    cls: QuadForm
    sign: int
    nu: TowerElement
    I: FactoredIdeal

    def kappa(self, d: FamilyDatum) -> int:
        assert self.sign == ZETA_2
        return artin_of_class(self.cls, d)


def pairing_a_zeta(d: FamilyDatum) -> PairingValue:
    """(a, zeta_2)_2 with a = p: x^2/zeta_2 = sigma(nu)/nu, Norm(nu*sqrt p)*O_F = I^2."""
    x = fundamental_unit(d.p).embed(d)
    b = FElement.of(ZETA_2, 0, d.m)
    assert norm_K_over_F(x) == b
    nu = hilbert90_solve(x * x / TowerElement.from_f(d, b))
    root_a = TowerElement.from_rationals(d, 0, 0, 1)
    assert sigma(root_a) == ZETA_2 * root_a
    w = norm_K_over_F(nu * root_a)
    I = ideal_sqrt(factor_principal(w, d.D))
    return PairingValue(ideal_to_form(I, d.D), ZETA_2, nu, I)


@dataclass
class TrivialityReport:
    datum: FamilyDatum
    criterion_i: int  # S from the ideal-level pipeline
    criterion_iii: int  # Art([J]) evaluated on the class of J
    equivalent: bool
    criterion_ii: str = "not evaluated"


def check_triviality(d: FamilyDatum) -> TrivialityReport:
    cert = compute_invariant(d)
    s_i = cert.S
    s_iii = artin_of_class(ideal_to_form(cert.I, d.D), d)
    rep = TrivialityReport(d, s_i, s_iii, (s_i == 0) == (s_iii == 0))
    if not rep.equivalent:
        raise AssertionError(f"triviality criteria disagree for {d}")
    return rep


@dataclass
class WitnessReport:
    datum: FamilyDatum
    checks: list = field(default_factory=list)  # (name, bool)
    S: int | None = None
    out_of_scope: tuple = ("McCallum-Sharifi pairing value not evaluated",)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def remark_witness(d: FamilyDatum) -> WitnessReport:
    """Conditions for a nontrivial invariant with 2 inert in F."""
    S = compute_invariant(d).S
    mpt = -d.p * d.t
    checks = [
        ("p = 1 mod 4", d.p % 4 == 1),
        ("(t/p) = -1", kronecker(d.t, d.p) == -1),
        ("-pt = 5 mod 8", mpt % 8 == 5),
        ("2 inert in F", kronecker(d.D, 2) == -1),
        ("S != 0", S != 0),
    ]
    return WitnessReport(d, checks, S)


@dataclass(frozen=True)
class ScanRow:
    p: int
    t: int
    D: int | None
    h: int | None
    S: int | None
    oracle: int | None
    agree: bool
    error: str | None = None


def family_data(p_max: int, t_max: int) -> list[tuple[int, int]]:
    out = []
    for p in range(5, p_max + 1, 4):
        if not is_prime(p):
            continue
        for t in range(1, t_max + 1):
            if math.gcd(p, t) == 1 and is_squarefree(t):
                out.append((p, t))
    return out


def scan_row(pt: tuple[int, int]) -> ScanRow:
    p, t = pt
    try:
        d = validate(p, t)
        S = compute_invariant(d).S
        o = oracle_invariant(d)
        return ScanRow(p, t, d.D, reduced_forms(d.D).h, S, o, S == o)
    except Exception as exc:  # isolated per row
        log.warning("scan row (%d, %d) failed: %s", p, t, exc)
        return ScanRow(p, t, None, None, None, None, False, f"{type(exc).__name__}: {exc}")


def scan(p_max: int, t_max: int, workers: int = 1) -> list[ScanRow]:
    """One row per valid datum with p <= p_max, t <= t_max, ordered by (p, t)."""
    data = family_data(p_max, t_max)
    if workers > 1 and len(data) > 1:
        with ProcessPoolExecutor(workers) as ex:
            rows = list(ex.map(scan_row, data, chunksize=8))
    else:
        rows = [scan_row(pt) for pt in data]
    return sorted(rows, key=lambda r: (r.p, r.t))


def scan_summary(rows: list[ScanRow]) -> dict:
    return {
        "rows": len(rows),
        "trivial": sum(r.S == 0 for r in rows),
        "nontrivial": sum(r.S == 1 for r in rows),
        "failed": sum(r.error is not None for r in rows),
        "all_agree": all(r.agree for r in rows),
    }


# JSON shape -----------------------------------------------------------------


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _f_to(f: FElement) -> list[str]:
    return [_q(f.u), _q(f.v)]


def _k_to(y: TowerElement) -> dict:
    return {"alpha": _f_to(y.alpha), "beta": _f_to(y.beta)}


def _ideal_to(I: FactoredIdeal) -> list[dict]:
    return [{"q": P.q, "kind": P.kind, "root": P.root, "exponent": e} for P, e in I.factors]


def _ideal_from(rows) -> FactoredIdeal:
    return FactoredIdeal.from_dict({PrimeIdeal(r["q"], r["kind"], r["root"]): r["exponent"] for r in rows})


def certificate_to_dict(c: Certificate) -> dict:
    d = c.datum
    oracle = oracle_invariant(d)
    return {
        "schema": SCHEMA_VERSION,
        "datum": {"p": d.p, "t": d.t, "D": d.D, "D1": d.D1, "D2": d.D2},
        "epsilon": {"r": _q(c.epsilon.r), "s": _q(c.epsilon.s), "norm": _q(c.epsilon.norm())},
        "x": _k_to(c.x),
        "u": _k_to(c.u),
        "y": _k_to(c.y),
        "w": _f_to(c.w),
        "wFactored": _ideal_to(c.wFactored),
        "I": _ideal_to(c.I),
        "IClass": [c.IClass.A, c.IClass.B, c.IClass.C],
        "characterTrace": [
            {"q": P.q, "kind": P.kind, "root": P.root, "value": v} for P, v in c.characterTrace
        ],
        "S": c.S,
        "oracle": oracle,
        "agree": c.S == oracle,
    }


def certificate_from_dict(obj: dict) -> Certificate:
    if obj.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate schema {obj.get('schema')!r}")
    dd = obj["datum"]
    d = validate(dd["p"], dd["t"])
    if (d.D, d.D1, d.D2) != (dd["D"], dd["D1"], dd["D2"]):
        raise ValueError("datum discriminants inconsistent")

    def f_from(pair):
        return FElement.of(Fraction(pair[0]), Fraction(pair[1]), d.m)

    def k_from(o):
        return TowerElement(f_from(o["alpha"]), f_from(o["beta"]), d)

    eps = EUnit(Fraction(obj["epsilon"]["r"]), Fraction(obj["epsilon"]["s"]), d.p)
    trace = [(PrimeIdeal(r["q"], r["kind"], r["root"]), r["value"]) for r in obj["characterTrace"]]
    return Certificate(
        d,
        eps,
        k_from(obj["x"]),
        k_from(obj["u"]),
        k_from(obj["y"]),
        f_from(obj["w"]),
        _ideal_from(obj["wFactored"]),
        _ideal_from(obj["I"]),
        QuadForm(*obj["IClass"]),
        trace,
        obj["S"],
    )
