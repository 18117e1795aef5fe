import random

from kimcs.quadtower import FElement, TowerElement


def random_f(d, rng, bound=4):
    while True:
        f = FElement.of(rng.randint(-bound, bound), rng.randint(-bound, bound), d.m)
        if not f.is_zero():
            return f


def random_k(d, rng, bound=3):
    while True:
        k = TowerElement.from_rationals(d, *(rng.randint(-bound, bound) for _ in range(4)))
        if not k.is_zero():
            return k


def gauge_perturbations(d, y, count, seed):
    """count replacements y -> f * k^2 * y with small random f in F*, k in K*."""
    rng = random.Random(seed)
    for _ in range(count):
        f, k = random_f(d, rng), random_k(d, rng)
        yield TowerElement.from_f(d, f) * k * k * y
