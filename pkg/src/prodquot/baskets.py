"""Baskets of cyclic quotient singularities and their enumeration.

A basket is a multiset of singularity types, each stored by its canonical
representative (the smaller of a and a^-1 mod n).  For a product-quotient
surface with chi = 1 the basket satisfies B(basket) = 3 (8 - K^2), which leaves
finitely many candidates; :func:`enumerate_baskets` lists them.
"""

from __future__ import annotations

import bisect
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .singtypes import QuotSing, inv_B, inv_e, sing_index

__all__ = [
    "Basket",
    "basket_invariants",
    "gorenstein_index",
    "hj_strings",
    "rats_with_bounded_B",
    "baskets_with_B",
    "test_basket_integrality",
    "enumerate_baskets",
]


@dataclass(frozen=True)
class Basket:
    sings: tuple[QuotSing, ...] = ()

    def __post_init__(self):
        canon = tuple(sorted(q.canonical() for q in self.sings))
        object.__setattr__(self, "sings", canon)

    @classmethod
    def of(cls, *items) -> "Basket":
        """``Basket.of("1/7", "2/7", QuotSing(2, 7))`` or fractions."""
        out = []
        for x in items:
            if isinstance(x, QuotSing):
                out.append(x)
            elif isinstance(x, str):
                out.append(QuotSing.parse(x))
            else:
                out.append(QuotSing.from_fraction(x))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "Basket":
        """Accept ``{1/7, 2/7, 2/7}`` as well as the table form ``1/7, 2/7^2``."""
        body = text.strip().removeprefix("{").removesuffix("}")
        items = []
        for tok in body.replace(" ", ",").split(","):
            tok = tok.strip()
            if not tok or tok in ("∅", "empty"):
                continue
            if "^" in tok:
                q, mult = tok.split("^")
                items.extend([q] * int(mult))
            else:
                items.append(tok)
        return cls.of(*items)

    def __iter__(self):
        return iter(self.sings)

    def __len__(self):
        return len(self.sings)

    def __contains__(self, q):
        return q.canonical() in self.sings

    def __lt__(self, other: "Basket"):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.sings), [(q.n, q.a) for q in self.sings])

    def counts(self) -> Counter:
        return Counter(self.sings)

    def __str__(self):
        return "{" + ", ".join(str(q) for q in self.sings) + "}"

    def table_str(self) -> str:
        """Compact form used in the tables, e.g. ``1/7, 2/7^2``."""
        if not self.sings:
            return "∅"
        parts = []
        for q, m in sorted(self.counts().items()):
            parts.append(str(q) if m == 1 else f"{q}^{m}")
        return ", ".join(parts)

    def to_json(self) -> list[str]:
        return [str(q) for q in self.sings]


def basket_invariants(b: Basket) -> tuple[Fraction, Fraction, Fraction]:
    """Return (B, e, k) summed over the basket, with k = B - 2e."""
    B = sum((inv_B(q) for q in b), Fraction(0))
    e = sum((inv_e(q) for q in b), Fraction(0))
    return B, e, B - 2 * e


def gorenstein_index(b: Basket) -> int:
    return lcm(1, *(sing_index(q) for q in b))


def hj_strings(max_weight: int):
    """Yield every sequence of integers >= 2 with entry sum <= max_weight."""
    def extend(prefix, room):
        for b in range(2, room + 1):
            seq = prefix + (b,)
            yield seq
            yield from extend(seq, room - b)
    yield from extend((), max_weight)


@lru_cache(maxsize=None)
def _ordered_rats(max_weight: int) -> tuple[tuple[QuotSing, Fraction], ...]:
    from .singtypes import rat_num

    seen = {}
    for seq in hj_strings(max_weight):
        if seq[::-1] < seq:
            continue
        q = rat_num(seq).canonical()
        if q not in seen:
            seen[q] = inv_B(q)
    # descending B; ties broken by the rational itself for reproducibility
    return tuple(sorted(seen.items(), key=lambda kv: (-kv[1], kv[0].n, kv[0].a)))


def rats_with_bounded_B(maxB) -> list[QuotSing]:
    """All canonical types with B <= maxB, ordered by B descending.

    B(q) exceeds the entry sum of its continuous fraction, so only strings of
    weight below maxB need to be generated.
    """
    maxB = Fraction(maxB)
    if maxB < 3:
        return []
    weight = -(-maxB.numerator // maxB.denominator) - 1
    return [q for q, B in _ordered_rats(weight) if B <= maxB]


def _peel(items, Bs, start, target, out, prefix):
    # items sorted by B descending; Bs holds -B so bisect finds the cut point
    i = max(start, bisect.bisect_left(Bs, -target))
    for j in range(i, len(items)):
        Bj = -Bs[j]
        if Bj == target:
            out.append(prefix + (items[j],))
        else:
            _peel(items, Bs, j, target - Bj, out, prefix + (items[j],))


def _peel_indexed(items, Bs, by_B, start, target, out, prefix):
    # close the basket by dictionary lookup; recurse only while >= 3 remains afterwards
    for j in by_B.get(target, ()):
        if j >= start:
            out.append(prefix + (items[j],))
    i = max(start, bisect.bisect_left(Bs, -(target - 3)))
    for j in range(i, len(items)):
        _peel_indexed(items, Bs, by_B, j, target + Bs[j], out, prefix + (items[j],))


def baskets_with_B(target, strategy: str = "recursive") -> set[Basket]:
    """All baskets whose B-invariant equals ``target`` exactly.

    ``strategy="recursive"`` peels the element of largest B and recurses on the
    remainder, scanning every candidate.  ``strategy="indexed"`` enumerates the
    same tree but closes each basket with a hash lookup on the remaining B,
    which is orders of magnitude faster for large targets.
    """
    target = Fraction(target)
    if target == 0:
        return {Basket()}
    if target < 3:
        return set()
    rats = rats_with_bounded_B(target)
    Bs = [-inv_B(q) for q in rats]
    out: list[tuple] = []
    if strategy == "recursive":
        _peel(rats, Bs, 0, target, out, ())
    elif strategy == "indexed":
        by_B = defaultdict(list)
        for j, b in enumerate(Bs):
            by_B[-b].append(j)
        _peel_indexed(rats, Bs, by_B, 0, target, out, ())
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return {Basket(t) for t in out}


def test_basket_integrality(b: Basket) -> bool:
    """Whether some choice of a or a^-1 per point makes sum(a/n) an integer."""
    sums = {Fraction(0)}
    for q in b:
        reps = {q.value % 1, Fraction(q.inverse_a, q.n)}
        sums = {(s + r) % 1 for s in sums for r in reps}
    return 0 in sums


test_basket_integrality.__test__ = False  # not a pytest test


def enumerate_baskets(target, strategy: str = "recursive") -> set[Basket]:
    """Possible baskets: B equals ``target`` and the integrality test passes."""
    return {b for b in baskets_with_B(target, strategy) if test_basket_integrality(b)}


def k2_of_basket(b: Basket) -> Fraction:
    B, _, _ = basket_invariants(b)
    return 8 - B / 3
