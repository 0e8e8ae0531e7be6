"""Cyclic quotient singularities 1/n(1,a) and their numerical invariants.

A singularity of type 1/n(1,a) is encoded by the reduced rational a/n in (0, 1).
All invariants are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "QuotSing",
    "cont_frac",
    "rat_num",
    "inverse_type",
    "inv_k",
    "inv_e",
    "inv_B",
    "sing_index",
    "is_rdp",
    "format_hj",
    "parse_hj",
]


@total_ordering
@dataclass(frozen=True, eq=False)
class QuotSing:
    """The singularity type 1/n(1,a), stored as the reduced fraction a/n."""

    a: int
    n: int

    def __post_init__(self):
        if not (0 < self.a < self.n):
            raise ValueError(f"need 0 < a < n, got {self.a}/{self.n}")
        if gcd(self.a, self.n) != 1:
            raise ValueError(f"{self.a}/{self.n} is not in lowest terms")

    @classmethod
    def from_fraction(cls, value) -> "QuotSing":
        q = Fraction(value)
        return cls(q.numerator, q.denominator)

    @classmethod
    def parse(cls, text: str) -> "QuotSing":
        a, n = text.strip().split("/")
        return cls(int(a), int(n))

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.n)

    @property
    def inverse_a(self) -> int:
        return pow(self.a, -1, self.n)

    def canonical(self) -> "QuotSing":
        """Representative with the smaller of a and a^-1 mod n."""
        b = self.inverse_a
        return self if self.a <= b else QuotSing(b, self.n)

    def __eq__(self, other):
        if not isinstance(other, QuotSing):
            return NotImplemented
        return self.a == other.a and self.n == other.n

    def __hash__(self):
        return hash((self.a, self.n))

    def __lt__(self, other):
        if not isinstance(other, QuotSing):
            return NotImplemented
        return self.a * other.n < other.a * self.n

    def __str__(self):
        return f"{self.a}/{self.n}"

    def __repr__(self):
        return f"QuotSing({self.a}/{self.n})"


def cont_frac(q: QuotSing) -> list[int]:
    """Hirzebruch-Jung continued fraction [b1, ..., bl] of n/a."""
    num, den = q.n, q.a
    out = []
    while den:
        b = -(-num // den)
        out.append(b)
        num, den = den, b * den - num
    return out


def rat_num(cf: Sequence[int]) -> QuotSing:
    """Inverse of :func:`cont_frac`."""
    if not cf or any(b < 2 for b in cf):
        raise ValueError(f"not a Hirzebruch-Jung string: {list(cf)}")
    x = Fraction(cf[-1])
    for b in reversed(cf[:-1]):
        x = b - 1 / x
    return QuotSing.from_fraction(1 / x)


def inverse_type(q: QuotSing) -> QuotSing:
    return QuotSing(q.inverse_a, q.n)


def inv_k(q: QuotSing) -> Fraction:
    cf = cont_frac(q)
    return -2 + Fraction(2 + q.a + q.inverse_a, q.n) + sum(b - 2 for b in cf)


def inv_e(q: QuotSing) -> Fraction:
    return len(cont_frac(q)) + 1 - Fraction(1, q.n)


def inv_B(q: QuotSing) -> Fraction:
    # equals 2*inv_e + inv_k; this closed form avoids computing k and e separately
    return Fraction(q.a + q.inverse_a, q.n) + sum(cont_frac(q))


def sing_index(q: QuotSing) -> int:
    """Gorenstein index n / gcd(n, a+1) of the singularity."""
    return q.n // gcd(q.n, q.a + 1)


def is_rdp(q: QuotSing) -> bool:
    """True for the rational double points 1/n(1, n-1)."""
    return q.a == q.n - 1


def format_hj(cf: Iterable[int]) -> str:
    return "[" + ",".join(str(b) for b in cf) + "]"


def parse_hj(text: str) -> list[int]:
    body = text.strip().removeprefix("[").removesuffix("]")
    return [int(x) for x in body.split(",") if x.strip()]
