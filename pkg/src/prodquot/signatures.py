"""Signatures of polygonal groups and the numerology tying them to a basket.

A signature is stored as a tuple of branching orders sorted in descending
order, e.g. ``(7, 3, 3)``.  Given a basket the admissible signatures are cut
down by the bounds relating K^2, the basket invariants, the Gorenstein index
and the curve genera.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import floor
from typing import Iterable

from .baskets import Basket, basket_invariants, enumerate_baskets, gorenstein_index

Signature = tuple[int, ...]

__all__ = [
    "Signature",
    "make_signature",
    "parse_signature",
    "format_signature",
    "theta",
    "alpha",
    "group_order",
    "candidate_signatures",
    "signatures_for_basket",
    "list_of_types",
]


def make_signature(orders: Iterable[int]) -> Signature:
    t = tuple(sorted((int(m) for m in orders), reverse=True))
    if any(m < 2 for m in t):
        raise ValueError(f"branching orders must be >= 2: {t}")
    return t


def parse_signature(text: str) -> Signature:
    """Parse ``"2^3, 4"``, ``"3^2 7"`` or ``"{2,4,7}"``."""
    body = text.strip().strip("{}()[]")
    out = []
    for tok in body.replace(",", " ").split():
        if "^" in tok:
            m, e = tok.split("^")
            out.extend([int(m)] * int(e))
        else:
            out.append(int(tok))
    return make_signature(out)


def format_signature(t: Signature, sep: str = ", ") -> str:
    """Ascending exponent notation as in the tables, e.g. ``2^3, 4``."""
    parts = []
    for m, e in sorted(Counter(t).items()):
        parts.append(str(m) if e == 1 else f"{m}^{e}")
    return sep.join(parts)


def theta(t: Signature) -> Fraction:
    return -2 + sum((1 - Fraction(1, m) for m in t), Fraction(0))


def _max_theta(b: Basket) -> Fraction:
    B, _, k = basket_invariants(b)
    return (8 - B / 3 + k) / 4


def alpha(t: Signature, b: Basket) -> Fraction:
    """(12 + k - e) / (6 Theta); the genus of the other curve minus one."""
    th = theta(t)
    if th <= 0:
        raise ValueError(f"signature {t} has non-positive Theta")
    _, e, k = basket_invariants(b)
    return (12 + k - e) / (6 * th)


def group_order(t1: Signature, t2: Signature, b: Basket) -> Fraction:
    """8 alpha1 alpha2 / (K^2 + k); non-integral values mean no group exists."""
    B, _, k = basket_invariants(b)
    return 8 * alpha(t1, b) * alpha(t2, b) / (8 - B / 3 + k)


def candidate_signatures(card_basket: int, length: int, s_bound, h_bound) -> set[Signature]:
    """Multisets of the given length obeying the per-entry bounds.

    With C = max(1/6, (length-3)/2) every entry is at most floor(h_bound/C) and
    all but floor(card_basket/2) entries are at most floor(s_bound/C).
    """
    C = max(Fraction(1, 6), Fraction(length - 3, 2))
    S = floor(Fraction(s_bound) / C)
    H = floor(Fraction(h_bound) / C)
    exc = card_basket // 2
    if length <= exc:
        return {make_signature(c) for c in combinations_with_replacement(range(2, H + 1), length)}
    out = {make_signature(c) for c in combinations_with_replacement(range(2, S + 1), length)}
    for k in range(1, exc + 1):
        heads = list(combinations_with_replacement(range(2, S + 1), length - k))
        tails = list(combinations_with_replacement(range(S + 1, H + 1), k))
        for head in heads:
            for tail in tails:
                out.add(make_signature(head + tail))
    return out


def signatures_for_basket(b: Basket) -> set[Signature]:
    """All signatures numerically compatible with the basket."""
    max_th = _max_theta(b)
    I = gorenstein_index(b)
    out = set()
    for length in range(3, floor(2 * max_th + 4) + 1):
        for cand in candidate_signatures(len(b), length, max_th + 1, 2 * I * max_th + 1):
            th = theta(cand)
            if not (0 < th <= max_th):
                continue
            a = max_th / th
            if a.denominator != 1:
                continue
            a = int(a)
            if any((2 * a * I) % m for m in cand):
                continue
            bads = sum(1 for m in cand if a % m)
            if 2 * bads <= len(b):
                out.add(cand)
    return out


def list_of_types(k2: int, strategy: str = "indexed") -> list[tuple[Basket, set[Signature]]]:
    """(basket, signatures) for every possible basket of the given K^2."""
    if not 1 <= k2 <= 8:
        raise ValueError("K^2 must lie in 1..8")
    out = []
    for b in sorted(enumerate_baskets(3 * (8 - k2), strategy)):
        sigs = signatures_for_basket(b)
        if sigs:
            out.append((b, sigs))
    return out
