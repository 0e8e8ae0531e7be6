"""First homology of a product-quotient surface.

The fundamental group is a quotient of H = f^-1(Diag) inside T1 x T2, where Ti
is the polygonal group of the i-th signature and f the product of the two
monodromy maps to G.  H has index |G|; its right cosets are identified with G
via ``z = phi2(w2)^-1 phi1(w1)``, which gives the coset table directly.  H is
presented by Reidemeister-Schreier rewriting and the elements of finite order
with fixed points are killed; H1 is read off a Smith normal form.

Words are tuples of signed 1-based generator indices.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .groups import FiniteGroup
from .signatures import Signature

__all__ = [
    "FinitePresentation",
    "CosetTable",
    "AbelianInvariants",
    "free_reduce",
    "polygonal_presentation",
    "product_presentation",
    "diagonal_preimage_table",
    "rewrite_subgroup",
    "torsion_relators",
    "smith_diagonal",
    "abelianization",
    "relation_matrix",
    "h1",
    "parse_abelian",
]

Word = tuple[int, ...]


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FinitePresentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for r in self.relators:
            if any(x == 0 or abs(x) > self.generator_count for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")

    def dump(self) -> str:
        """Plain-text form: generator count, then one relator per line."""
        lines = [f"generators {self.generator_count}"]
        lines += [" ".join(str(x) for x in r) for r in self.relators]
        return "\n".join(lines) + "\n"


def _power(x: int, m: int) -> Word:
    return (x,) * m if m >= 0 else (-x,) * (-m)


def polygonal_presentation(t: Signature) -> tuple[FinitePresentation, Callable]:
    """<c_1..c_r | c_i^{m_i}, c_1...c_r>, with the evaluation of a vector on it.

    The evaluation returns the image of each generator, checking the orders.
    """
    t = tuple(t)
    r = len(t)
    rels = tuple(_power(i + 1, m) for i, m in enumerate(t)) + (tuple(range(1, r + 1)),)
    pres = FinitePresentation(r, rels)

    def evaluate(G: FiniteGroup, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != r or any(int(G.orders[x]) != m for x, m in zip(v, t)):
            raise ValueError(f"vector does not have signature {t}")
        return tuple(int(x) for x in v)

    return pres, evaluate


def product_presentation(p1: FinitePresentation, p2: FinitePresentation) -> FinitePresentation:
    """Direct product: both relator sets plus all cross commutators."""
    n1 = p1.generator_count

    def shift(w):
        return tuple(x + n1 if x > 0 else x - n1 for x in w)

    comms = tuple((i, j + n1, -i, -(j + n1)) for i in range(1, n1 + 1)
                  for j in range(1, p2.generator_count + 1))
    return FinitePresentation(n1 + p2.generator_count,
                              p1.relators + tuple(shift(w) for w in p2.relators) + comms)


@dataclass(frozen=True)
class CosetTable:
    """``action[x][z]`` is the coset reached from z by generator x+1; coset 0 is the subgroup."""

    action: np.ndarray  # shape (generators, cosets)

    @property
    def index(self) -> int:
        return self.action.shape[1]

    @property
    def inverse(self) -> np.ndarray:
        inv = np.empty_like(self.action)
        for x, row in enumerate(self.action):
            inv[x, row] = np.arange(self.index)
        return inv

    def check(self):
        for row in self.action:
            if sorted(row.tolist()) != list(range(self.index)):
                raise ValueError("coset action is not a permutation")


def diagonal_preimage_table(v1: Sequence[int], v2: Sequence[int], G: FiniteGroup) -> CosetTable:
    """Right cosets of H = f^-1(Diag) in T1 x T2, indexed by group elements.

    The coset of (w1, w2) is z = phi2(w2)^-1 phi1(w1); a generator of T1 acts
    by z -> z phi1(c), one of T2 by z -> phi2(c)^-1 z.  Element index 0 (the
    identity) is the coset of H itself.
    """
    mul, inv = G.mul, G.inv
    rows = [mul[:, c] for c in v1] + [mul[inv[c], :] for c in v2]
    return CosetTable(np.array(rows, dtype=np.int64))


def _spanning_tree(ct: CosetTable, strategy: str) -> dict[int, tuple[int, int]]:
    """parent[z] = (coset, signed generator) with z = coset . generator."""
    act, inv = ct.action, ct.inverse
    gens = [x for x in range(1, act.shape[0] + 1)] + [-x for x in range(1, act.shape[0] + 1)]
    parent: dict[int, tuple[int, int]] = {0: (-1, 0)}
    todo = deque([0])
    while todo:
        z = todo.popleft() if strategy == "bfs" else todo.pop()
        for x in gens:
            y = int(act[x - 1, z] if x > 0 else inv[-x - 1, z])
            if y not in parent:
                parent[y] = (z, x)
                todo.append(y)
    if len(parent) != ct.index:
        raise ValueError("coset table is not transitive")
    return parent


class _Schreier:
    """Numbering of the Schreier generators (non-tree edges (z, x), x > 0)."""

    def __init__(self, ct: CosetTable, strategy: str = "bfs"):
        if strategy not in ("bfs", "dfs"):
            raise ValueError(f"unknown tree strategy {strategy!r}")
        self.ct = ct
        self.act = ct.action.tolist()
        self.inv = ct.inverse.tolist()
        tree = set()
        for y, (z, x) in _spanning_tree(ct, strategy).items():
            if x > 0:
                tree.add((z, x))
            elif x < 0:
                tree.add((y, -x))  # edge y --x--> z
        self.ids: dict[tuple[int, int], int] = {}
        ng = len(self.act)
        for z in range(ct.index):
            for x in range(1, ng + 1):
                if (z, x) not in tree:
                    self.ids[(z, x)] = len(self.ids) + 1

    @property
    def count(self) -> int:
        return len(self.ids)

    def trace(self, w: Sequence[int], z: int = 0) -> tuple[Word, int]:
        out = []
        ids, act, inv = self.ids, self.act, self.inv
        for x in w:
            if x > 0:
                s = ids.get((z, x))
                if s:
                    out.append(s)
                z = act[x - 1][z]
            else:
                z = inv[-x - 1][z]
                s = ids.get((z, -x))
                if s:
                    out.append(-s)
        return free_reduce(out), z


def rewrite_subgroup(p: FinitePresentation, ct: CosetTable, strategy: str = "bfs") -> FinitePresentation:
    """Reidemeister-Schreier presentation of the subgroup of index ``ct.index``.

    One relator per (coset, relator) pair; relators that rewrite to the empty
    word are kept, so the relator count is exactly index * len(p.relators).
    """
    sch = _Schreier(ct, strategy)
    rels = []
    for z in range(ct.index):
        for r in p.relators:
            w, end = sch.trace(r, z)
            if end != z:
                raise ValueError("relator does not close up: table inconsistent with presentation")
            rels.append(w)
    return FinitePresentation(sch.count, tuple(rels))


def _word_table(G: FiniteGroup, images: Sequence[int], offset: int) -> list[Word]:
    """A word in the given generators for every element, by breadth-first search."""
    words: list[Word | None] = [None] * G.order
    words[0] = ()
    todo = deque([0])
    mul = G.mul_list
    while todo:
        g = todo.popleft()
        for i, c in enumerate(images):
            h = mul[g][c]
            if words[h] is None:
                words[h] = words[g] + (i + 1 + offset,)
                todo.append(h)
    if any(w is None for w in words):
        raise ValueError("vector does not generate the group")
    return words  # type: ignore[return-value]


def torsion_relators(v1: Sequence[int], v2: Sequence[int], G: FiniteGroup) -> list[Word]:
    """Elements c_i^{d1} (c'_j^{d2})^w of H for every power coincidence.

    For entries g1 = v1[i], g2 = v2[j] and exponents d1, d2 with g1^d1 conjugate
    to g2^d2, take h with (g1^d1)^h = g2^d2 and, for each c centralizing g1^d1,
    a T2-word w mapping to h^-1 c.  Words use T1 generators 1..r and T2
    generators r+1..r+s.
    """
    r = len(v1)
    words2 = _word_table(G, v2, r)
    out = []
    for i, g1 in enumerate(v1):
        for j, g2 in enumerate(v2):
            for d1 in range(1, int(G.orders[g1])):
                x = G.power(g1, d1)
                cx = G.conjugates(x)
                cent = None
                for d2 in range(1, int(G.orders[g2])):
                    y = G.power(g2, d2)
                    hits = np.flatnonzero(cx == y)
                    if not hits.size:
                        continue
                    h = int(hits[0])
                    if cent is None:
                        cent = G.centralizer(x)
                    hi = int(G.inv[h])
                    for c in cent:
                        w = words2[G.multiply(hi, int(c))]
                        inv_w = tuple(-a for a in reversed(w))
                        out.append(free_reduce(_power(i + 1, d1) + inv_w + _power(r + j + 1, d2) + w))
    return out


# ---------------------------------------------------------------------------
# integer linear algebra


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion factors {self.torsion} break divisibility")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    def as_list(self) -> list[int]:
        """Torsion factors followed by a 0 for each free summand."""
        return list(self.torsion) + [0] * self.rank

    @classmethod
    def from_list(cls, xs: Sequence[int]) -> "AbelianInvariants":
        return cls(sum(1 for x in xs if x == 0), tuple(sorted(x for x in xs if x > 1)))

    def __str__(self):
        parts = [] if not self.rank else ["Z" if self.rank == 1 else f"Z^{self.rank}"]
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def table_str(self) -> str:
        """Compact form such as ``Z2^2xZ4`` (``0`` for the trivial group)."""
        parts = [] if not self.rank else ["Z" if self.rank == 1 else f"Z^{self.rank}"]
        i = 0
        ts = self.torsion
        while i < len(ts):
            j = i
            while j < len(ts) and ts[j] == ts[i]:
                j += 1
            parts.append(f"Z{ts[i]}" if j - i == 1 else f"Z{ts[i]}^{j - i}")
            i = j
        return "x".join(parts) if parts else "0"


def _prime_powers(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


def _invariant_factors(cyclic_orders: Sequence[int]) -> tuple[int, ...]:
    by_prime: dict[int, list[int]] = {}
    for n in cyclic_orders:
        for q in _prime_powers(n):
            p = next(d for d in range(2, q + 1) if q % d == 0)
            by_prime.setdefault(p, []).append(q)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    facs = [1] * length
    for qs in by_prime.values():
        qs = sorted(qs, reverse=True)
        for k, q in enumerate(qs):
            facs[length - 1 - k] *= q
    return tuple(f for f in facs if f > 1)


def parse_abelian(text: str) -> AbelianInvariants:
    """Parse ``Z2^2 x Z4``, ``Z_5^2``, ``Z/6``, ``Z^2 x Z3`` or ``0``."""
    body = text.replace(" ", "").replace("_", "").replace("/", "").replace("×", "x")
    if body in ("0", "1", "{1}"):
        return AbelianInvariants(0, ())
    rank, orders = 0, []
    for tok in body.split("x"):
        m = re.fullmatch(r"Z(\d*)(?:\^(\d+))?", tok)
        if not m:
            raise ValueError(f"cannot parse {text!r}")
        n = int(m.group(1)) if m.group(1) else 0
        e = int(m.group(2)) if m.group(2) else 1
        if n == 0:
            rank += e
        else:
            orders += [n] * e
    return AbelianInvariants(rank, _invariant_factors(orders))


def smith_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Dense elimination over Python integers; the pivot is the entry of least
    absolute value in the remaining block.
    """
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, cols):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for i in range(t, rows):
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        done = False
            if done:
                # the pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                i, _ = bad
                for j in range(t, cols):
                    A[t][j] += A[i][j]
                continue
            # move the smallest nonzero entry of row t / column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, i, j = min(cand)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return sorted(diag)


def relation_matrix(p: FinitePresentation) -> list[dict[int, int]]:
    """Abelianized relators as sparse rows (generator -> exponent sum), deduplicated."""
    seen = set()
    out = []
    for r in p.relators:
        row: dict[int, int] = {}
        for x in r:
            k = abs(x)
            row[k] = row.get(k, 0) + (1 if x > 0 else -1)
        row = {k: v for k, v in row.items() if v}
        key = tuple(sorted(row.items()))
        if row and key not in seen:
            seen.add(key)
            out.append(row)
    return out


def _eliminate_units(rows: list[dict[int, int]], ncols: int) -> tuple[list[dict[int, int]], int]:
    """Use +-1 entries to eliminate generators; returns the remaining rows and generators."""
    rows = [dict(r) for r in rows]
    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for k in r:
            col_rows.setdefault(k, set()).add(i)
    alive = set(range(len(rows)))
    gens = ncols
    while True:
        best = None
        for i in alive:
            r = rows[i]
            for k, v in r.items():
                if v in (1, -1):
                    cost = (len(r) - 1) * (len(col_rows[k]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, k)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, k = best
        piv = rows[i]
        s = piv[k]
        alive.discard(i)
        for kk in piv:
            col_rows[kk].discard(i)
        gens -= 1
        for j in list(col_rows.get(k, ())):
            r = rows[j]
            f = r[k] * s  # r - f * piv kills column k
            for kk, v in piv.items():
                nv = r.get(kk, 0) - f * v
                if nv:
                    if kk not in r:
                        col_rows.setdefault(kk, set()).add(j)
                    r[kk] = nv
                elif kk in r:
                    del r[kk]
                    col_rows[kk].discard(j)
            if not r:
                alive.discard(j)
        del col_rows[k]
    return [rows[i] for i in sorted(alive)], gens


def abelianization(p: FinitePresentation) -> AbelianInvariants:
    """Invariant factors of the abelianized presentation."""
    rows = relation_matrix(p)
    rest, gens = _eliminate_units(rows, p.generator_count)
    cols = sorted({k for r in rest for k in r})
    index = {k: n for n, k in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for i, r in enumerate(rest):
        for k, v in r.items():
            dense[i][index[k]] = v
    diag = smith_diagonal(dense) if dense else []
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(gens - len(diag), torsion)


def h1(v1: Sequence[int], v2: Sequence[int], G: FiniteGroup, strategy: str = "bfs") -> AbelianInvariants:
    """H1(S, Z) of the product-quotient surface given by a pair of vectors."""
    t1 = tuple(int(G.orders[x]) for x in v1)
    t2 = tuple(int(G.orders[x]) for x in v2)
    p1, _ = polygonal_presentation(t1)
    p2, _ = polygonal_presentation(t2)
    T = product_presentation(p1, p2)
    ct = diagonal_preimage_table(v1, v2, G)
    sub = rewrite_subgroup(T, ct, strategy)
    sch = _Schreier(ct, strategy)
    extra = []
    for w in torsion_relators(v1, v2, G):
        rw, end = sch.trace(w, 0)
        if end != 0:
            raise AssertionError("torsion relator is not in the subgroup")
        extra.append(rw)
    return abelianization(FinitePresentation(sub.generator_count, sub.relators + tuple(extra)))
