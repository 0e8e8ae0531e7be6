"""Singularities of a product-quotient surface, its invariants and minimality.

The diagonal action of G on C1 x C2 has nontrivial stabilizers only over pairs
of branch points.  For a pair of generating-vector entries ``(g1, g2)`` the
points over the corresponding pair of branch points are counted by the orbits
of <g1> on the cosets of <g2>; :func:`basket_by_pair` returns the cyclic
quotient singularities among them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .baskets import Basket, basket_invariants
from .groups import FiniteGroup
from .signatures import Signature, alpha, format_signature, make_signature, parse_signature, theta
from .singtypes import QuotSing, is_rdp

__all__ = [
    "Minimality",
    "SurfaceRecord",
    "basket_by_pair",
    "basket_by_pair_orbits",
    "basket_of_vectors",
    "check_sings",
    "compute_invariants",
    "classify_minimality",
    "make_record",
]


class Minimality(str, Enum):
    GUARANTEED = "guaranteed"
    UNKNOWN = "unknown"


def _cyclic(G: FiniteGroup, g: int) -> list[int]:
    """[1, g, g^2, ...] up to the order of g."""
    out = [0]
    x = g
    while x != 0:
        out.append(x)
        x = G.multiply(x, g)
    return out


def _right_coset_labels(G: FiniteGroup, H: Sequence[int]) -> np.ndarray:
    # label of Hx is its smallest element
    return G.mul[np.asarray(H)].min(axis=0)


def basket_by_pair(G: FiniteGroup, gen1: int, gen2: int) -> list[QuotSing]:
    """Singular points over one pair of branch points, as raw types ``d2/delta``.

    Orbit representatives g of <gen1> acting on the right cosets <gen2>x are
    scanned; for each, the first ``d1`` in ``1..delta-1`` with
    ``gen1^(d1*alpha1) == (gen2^(d2*alpha2))^g`` for some ``d2`` contributes
    ``d2/delta``.  Types are returned as computed, not canonicalized.
    """
    C1, C2 = _cyclic(G, gen1), _cyclic(G, gen2)
    o1, o2 = len(C1), len(C2)
    delta = gcd(o1, o2)
    if delta == 1:
        return []
    a1, a2 = o1 // delta, o2 // delta
    lab = _right_coset_labels(G, C2)
    # orbit of the coset Hx under right multiplication by <gen1>
    orbit = lab[G.mul[:, np.asarray(C1)]].min(axis=1)
    reps = np.unique(orbit)
    mul, inv = G.mul, G.inv
    p1 = [C1[(d * a1) % o1] for d in range(1, delta)]
    out = []
    for g in reps:
        g = int(g)
        gi = int(inv[g])
        conj = {int(mul[mul[gi, C2[(d * a2) % o2]], g]): d for d in range(1, delta)}
        for x in p1:
            d2 = conj.get(x)
            if d2 is not None:
                out.append(QuotSing.from_fraction(Fraction(d2, delta)))
                break
    return out


def basket_by_pair_orbits(G: FiniteGroup, g1: int, h: int) -> list[QuotSing]:
    """Independent computation of :func:`basket_by_pair` from the orbit description.

    Each orbit [g] of H = <g1> acting by left multiplication on the left cosets
    g<h> gives a point of type 1/n(1,a) with n = |H cap g<h>g^-1|: if
    g1^s = g h^c g^-1 with s minimal, the type is the fraction c/o(h).
    """
    H, K = _cyclic(G, g1), _cyclic(G, h)
    oh = len(K)
    mul, inv = G.mul, G.inv
    seen = np.zeros(G.order, dtype=bool)
    out = []
    for g in range(G.order):
        if seen[g]:
            continue
        # the H-orbit of the left coset gK
        orbit = mul[np.asarray(H)][:, mul[g, np.asarray(K)]].ravel()
        seen[orbit] = True
        gi = int(inv[g])
        conj = {int(mul[mul[g, k], gi]): c for c, k in enumerate(K) if c}
        n = sum(1 for x in H if x == 0 or x in conj)
        if n == 1:
            continue
        s = next(s for s in range(1, len(H)) if H[s] in conj)
        q = QuotSing.from_fraction(Fraction(conj[H[s]], oh))
        if q.n != n:
            raise AssertionError(f"type {q} disagrees with stabilizer order {n}")
        out.append(q)
    return out


def basket_of_vectors(G: FiniteGroup, v1: Sequence[int], v2: Sequence[int]) -> Basket:
    """The full induced basket of a pair of generating vectors."""
    pts = [q for x in v1 for y in v2 for q in basket_by_pair(G, x, y)]
    return Basket(tuple(pts))


def check_sings(target: Basket, v1: Sequence[int], v2: Sequence[int], G: FiniteGroup) -> bool:
    """Whether the induced singularities are exactly ``target``.

    Each computed point consumes itself or its inverse type from the target;
    the scan stops at the first point that cannot be matched.
    """
    left = Counter(q.canonical() for q in target)
    for x in v1:
        for y in v2:
            for q in basket_by_pair(G, x, y):
                c = q.canonical()
                if left[c] <= 0:
                    return False
                left[c] -= 1
    return not +left


# ---------------------------------------------------------------------------
# records


@dataclass
class SurfaceRecord:
    basket: Basket
    t1: Signature
    t2: Signature
    group: str
    order: int
    vectors: tuple[tuple[str, ...], tuple[str, ...]]
    k2: int | None = None
    euler: Fraction | None = None
    g1: int | None = None
    g2: int | None = None
    h1: list[int] | None = None
    minimality: Minimality | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "k2": self.k2,
            "basket": self.basket.to_json(),
            "t1": format_signature(self.t1),
            "t2": format_signature(self.t2),
            "group": self.group,
            "order": self.order,
            "vectors": [list(self.vectors[0]), list(self.vectors[1])],
            "g1": self.g1,
            "g2": self.g2,
            "euler": str(self.euler) if self.euler is not None else None,
            "h1": self.h1,
            "minimal": self.minimality.value if self.minimality else None,
        }

    @classmethod
    def from_json(cls, d: dict) -> "SurfaceRecord":
        return cls(
            basket=Basket.of(*d["basket"]),
            t1=parse_signature(d["t1"]),
            t2=parse_signature(d["t2"]),
            group=d["group"],
            order=d["order"],
            vectors=(tuple(d["vectors"][0]), tuple(d["vectors"][1])),
            k2=d["k2"],
            euler=Fraction(d["euler"]) if d.get("euler") is not None else None,
            g1=d["g1"],
            g2=d["g2"],
            h1=d["h1"],
            minimality=Minimality(d["minimal"]) if d.get("minimal") else None,
        )


def make_record(G: FiniteGroup, basket: Basket, v1: Sequence[int], v2: Sequence[int]) -> SurfaceRecord:
    t1 = make_signature(int(G.orders[x]) for x in v1)
    t2 = make_signature(int(G.orders[x]) for x in v2)
    rec = SurfaceRecord(basket=basket, t1=t1, t2=t2, group=G.name or "G", order=G.order,
                        vectors=(tuple(G.fmt(x) for x in v1), tuple(G.fmt(x) for x in v2)))
    return compute_invariants(rec)


def _genus(order: int, t: Signature) -> int:
    # Riemann-Hurwitz for a G-cover of P^1 branched with signature t
    g = order * theta(t) / 2 + 1
    if g.denominator != 1:
        raise AssertionError(f"non-integral genus for |G|={order}, t={t}")
    return int(g)


def compute_invariants(rec: SurfaceRecord) -> SurfaceRecord:
    """Fill K^2, e(S) and the genera, cross-checking the formulas."""
    B, e, k = basket_invariants(rec.basket)
    g1, g2 = _genus(rec.order, rec.t1), _genus(rec.order, rec.t2)
    if alpha(rec.t2, rec.basket) != g1 - 1 or alpha(rec.t1, rec.basket) != g2 - 1:
        raise AssertionError(f"genera {g1}, {g2} inconsistent with the basket")
    k2 = Fraction(8 * (g1 - 1) * (g2 - 1), rec.order) - k
    if k2 != 8 - B / 3 or k2.denominator != 1:
        raise AssertionError(f"K^2 = {k2} inconsistent with B = {B}")
    euler = Fraction(4 * (g1 - 1) * (g2 - 1), rec.order) + e
    if k2 + euler != 12:
        raise AssertionError("Noether's formula fails")
    return replace(rec, k2=int(k2), euler=euler, g1=g1, g2=g2,
                   minimality=rec.minimality or classify_minimality(rec.basket))


# ---------------------------------------------------------------------------
# minimality


def _small(q: QuotSing) -> bool:
    return q.n <= 4 or (q.n <= 7 and q.a != 1)


def _pair_shape(b: Basket) -> bool:
    # {1/n(1,a), 1/n(1,n-a)} with n <= 4, or n <= 7 and 1 != a < n/2
    if len(b) != 2:
        return False
    n = b.sings[0].n
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        if not (n <= 4 or (n <= 7 and a != 1 and 2 * a < n)):
            continue
        if Basket.of(Fraction(a, n), Fraction(n - a, n)) == b:
            return True
    return False


def classify_minimality(b: Basket) -> Minimality:
    """GUARANTEED when the basket matches one of the shapes forcing minimality."""
    if _pair_shape(b):
        return Minimality.GUARANTEED
    others = [q for q in b if not is_rdp(q)]
    if len(others) <= 1 and all(_small(q) for q in others):
        return Minimality.GUARANTEED
    if others == [QuotSing(1, 3), QuotSing(1, 3)]:
        return Minimality.GUARANTEED
    if b == Basket.of("1/5", "4/5"):
        return Minimality.GUARANTEED
    return Minimality.UNKNOWN
