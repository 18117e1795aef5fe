"""Artin map Cl(O_F) -> Gal(K/F) = Z/2 for K = F(sqrt p), through the genus
character attached to D = D1 * D2 with D1 = p.

Values are written additively: 0 is the trivial Frobenius, 1 is sigma.
"""

from __future__ import annotations

import math

from .arith import kronecker
from .idealcls import INERT, FactoredIdeal, PrimeIdeal, QuadForm
from .quadtower import FamilyDatum


def _to_additive(symbol: int) -> int:
    if symbol not in (1, -1):
        raise ArithmeticError(f"genus character took value {symbol}")
    return 0 if symbol == 1 else 1


def frobenius(Q: PrimeIdeal, d: FamilyDatum) -> int:
    if Q.kind == INERT:
        return 0
    if math.gcd(Q.q, d.D1) == 1:
        return _to_additive(kronecker(d.D1, Q.norm))
    return _to_additive(kronecker(d.D2, Q.norm))


def artin_of_ideal(I: FactoredIdeal, d: FamilyDatum) -> int:
    return sum(e * frobenius(Q, d) for Q, e in I.factors) % 2


def character_trace(I: FactoredIdeal, d: FamilyDatum) -> list[tuple[PrimeIdeal, int]]:
    return [(Q, frobenius(Q, d)) for Q, _ in I.factors]


def artin_of_class(f: QuadForm, d: FamilyDatum) -> int:
    """Genus character on a form: kronecker(D1, m) for any m prime to D1 it
    represents primitively (m = A when possible)."""
    if f.disc != d.D:
        raise ValueError("form of the wrong discriminant")
    if math.gcd(f.A, d.D1) == 1:
        return _to_additive(kronecker(d.D1, f.A))
    for bound in range(1, 64):
        for x in range(-bound, bound + 1):
            for y in (-bound, bound):
                for a, b in ((x, y), (y, x)):
                    if math.gcd(a, b) != 1:
                        continue
                    m = f(a, b)
                    if math.gcd(m, d.D1) == 1:
                        return _to_additive(kronecker(d.D1, m))
    raise ArithmeticError(f"no value prime to {d.D1} found for {f}")
