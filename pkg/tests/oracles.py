"""Brute-force oracles shared by the unit and acceptance tests."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import gcd

import numpy as np

from prodquot.baskets import Basket
from prodquot.singtypes import QuotSing, inv_B


def brute_force_baskets(limit: int) -> dict[Fraction, set[Basket]]:
    """Every basket with B <= limit, by scanning all types 1/n(1,a) directly.

    n is a continuant of the string [b1..bl], so n <= prod(b_i) <= 3^(sum(b_i)/3),
    and sum(b_i) < B.  Baskets have at most limit/3 points since B >= 3.
    """
    nmax = int(3 ** (limit / 3)) + 1
    types = {QuotSing(a, n).canonical() for n in range(2, nmax + 1) for a in range(1, n) if gcd(a, n) == 1}
    types = sorted((q for q in types if inv_B(q) <= limit), key=lambda q: (q.n, q.a))
    out = defaultdict(set)
    out[Fraction(0)].add(Basket())
    for size in range(1, limit // 3 + 1):
        for combo in combinations_with_replacement(types, size):
            B = sum((inv_B(q) for q in combo), Fraction(0))
            if B <= limit:
                out[B].add(Basket(combo))
    return out


def minors_invariants(M: np.ndarray) -> list[int]:
    """Invariant factors as ratios d_k / d_(k-1) of gcds of k x k minors."""
    r, c = M.shape
    d = [1]
    for k in range(1, min(r, c) + 1):
        rows = list(combinations(range(r), k))
        cols = list(combinations(range(c), k))
        blocks = np.array([M[np.ix_(a, b)] for a in rows for b in cols], dtype=float)
        dets = np.rint(np.linalg.det(blocks)).astype(np.int64)
        g = 0
        for x in dets.tolist():
            g = gcd(g, x)
        if g == 0:
            break
        d.append(g)
    return [d[k] // d[k - 1] for k in range(1, len(d))]


def random_matrices(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        r, c = rng.integers(1, 7, size=2)
        M = rng.integers(-5, 6, size=(r, c))
        if rng.random() < 0.3:
            # low rank: duplicate or zero some rows
            M[rng.integers(0, r)] = 0
            if r > 1:
                M[-1] = M[0] * int(rng.integers(-2, 3))
        yield M
