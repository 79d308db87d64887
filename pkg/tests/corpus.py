"""Seeded random monomial ideals shared by the property and acceptance tests."""

import random

from newtonideal.ideal import MonomialIdeal
from newtonideal.reduction import minimal_monomial_reduction


def random_ideal(rng, n, max_exp, max_gens=5, min_gens=1):
    """A proper nonzero monomial ideal with up to ``max_gens`` generators."""
    while True:
        k = rng.randint(min_gens, max_gens)
        gens = []
        for _ in range(k):
            v = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(v):
                gens.append(v)
        if gens:
            return MonomialIdeal(n, gens)


def random_squarefree(rng, n, max_gens=6):
    while True:
        gens = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if any(g)]
        if gens:
            return MonomialIdeal(n, gens)


def random_dim(rng, max_n):
    # weighted toward the largest dimensions, where the geometry is richest
    dims = list(range(1, max_n + 1))
    return rng.choices(dims, weights=[d * d for d in dims])[0]


def corpus(seed, count, max_n=3, max_exp=8, max_gens=5):
    rng = random.Random(seed)
    return [random_ideal(rng, random_dim(rng, max_n), max_exp, max_gens, min_gens=2)
            for _ in range(count)]


def extremal_corpus(seed, count, max_n=3, max_exp=8, max_gens=5):
    return [minimal_monomial_reduction(I) for I in corpus(seed, count, max_n, max_exp, max_gens)]
