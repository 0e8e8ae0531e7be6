"""A small finite-group engine on permutation groups, plus the group catalogue.

Elements of a materialized group are addressed by integer indices into the
list of its elements sorted by image sequence (index 0 is the identity).
Products follow the left-to-right convention: ``x*y`` applies ``x`` first, and
``x^h`` means ``h^-1 x h``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import product
from math import gcd, prod
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "FiniteGroup",
    "GroupError",
    "RefusalError",
    "from_generators",
    "stabilizer_chain",
    "semidirect_product",
    "parse_group_file",
    "catalogue",
    "catalogue_lookup",
    "catalogue_names",
    "MATERIALIZE_CAP",
    "AUT_CAP",
]

MATERIALIZE_CAP = 2520
AUT_CAP = 512


class GroupError(ValueError):
    pass


class RefusalError(RuntimeError):
    """Raised when a request exceeds a configured size cap."""


# ---------------------------------------------------------------------------
# permutations


def _compose(p: tuple, q: tuple) -> tuple:
    # p first, then q
    return tuple(q[x] for x in p)


def _inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..d}; ``images`` is stored 0-based."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse ``(1 2 3)(4 5)``, ``(123)(45)`` or ``(1, 8, 2)``; points are 1-based.

        Without separators every digit is its own point, as in the tables.
        """
        cycles = []
        for body in _CYCLE.findall(text):
            body = body.strip()
            if not body:
                continue
            if "," in body or " " in body:
                pts = [int(x) for x in re.split(r"[,\s]+", body) if x]
            else:
                pts = [int(c) for c in body]
            cycles.append(pts)
        if _CYCLE.sub("", text).strip():
            raise GroupError(f"cannot parse cycles from {text!r}")
        top = max((max(c) for c in cycles), default=0)
        d = degree if degree is not None else top
        if top > d:
            raise GroupError(f"point {top} exceeds degree {d}")
        img = list(range(d))
        for c in cycles:
            if len(set(c)) != len(c):
                raise GroupError(f"repeated point in cycle {c}")
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            c, j = [i], self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                c.append(j)
                j = self.images[j]
            out.append(tuple(x + 1 for x in c))
        return out

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        sep = "" if len(self.images) <= 9 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cyc)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse(self.images))

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def extended(self, degree: int) -> "Permutation":
        if degree < self.degree:
            raise GroupError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree, degree)))


# ---------------------------------------------------------------------------
# Schreier-Sims


@dataclass
class _Level:
    point: int
    gens: list
    trans: dict = field(default_factory=dict)  # orbit point -> coset rep u with u[point] = orbit point

    def rebuild(self, ident):
        self.trans = {self.point: ident}
        todo = [self.point]
        while todo:
            b = todo.pop()
            u = self.trans[b]
            for s in self.gens:
                c = s[b]
                if c not in self.trans:
                    self.trans[c] = _compose(u, s)
                    todo.append(c)


def _sift(levels, g, start):
    for i in range(start, len(levels)):
        lv = levels[i]
        b = g[lv.point]
        if b not in lv.trans:
            return g, i
        g = _compose(g, _inverse(lv.trans[b]))
    return g, len(levels)


def stabilizer_chain(gens: Sequence[tuple], degree: int) -> list[_Level]:
    """Deterministic Schreier-Sims; returns the levels of a base and strong generating set."""
    ident = tuple(range(degree))
    gens = [g for g in gens if g != ident]
    levels: list[_Level] = []
    for g in gens:
        if all(g[lv.point] == lv.point for lv in levels):
            levels.append(_Level(next(i for i in range(degree) if g[i] != i), []))
    for i, lv in enumerate(levels):
        lv.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
        lv.rebuild(ident)
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        for b, u in list(lv.trans.items()):
            for s in lv.gens:
                schreier = _compose(_compose(u, s), _inverse(lv.trans[s[b]]))
                if schreier == ident:
                    continue
                h, j = _sift(levels, schreier, i + 1)
                if h == ident:
                    continue
                if j == len(levels):
                    levels.append(_Level(next(x for x in range(degree) if h[x] != x), []))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(h)
                    levels[l].rebuild(ident)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return levels


# ---------------------------------------------------------------------------
# groups


class FiniteGroup:
    """A permutation group; element tables are built on first use."""

    def __init__(self, gens: Sequence[Permutation], name: str | None = None, degree: int | None = None,
                 cap: int = MATERIALIZE_CAP):
        gens = list(gens)
        d = degree if degree is not None else max((g.degree for g in gens), default=1)
        if any(g.degree != d for g in gens):
            if degree is None:
                raise GroupError("generators have different degrees")
            gens = [g.extended(d) for g in gens]
        self.degree = d
        self.generators = gens
        self.name = name or "<group>"
        self.cap = cap
        self.word_gens: dict[str, int] = {}
        self._chain = stabilizer_chain([g.images for g in gens], d)
        self.order = prod(len(lv.trans) for lv in self._chain)
        self._subgroups = None

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._chain]

    def contains_perm(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        h, _ = _sift(self._chain, p.images, 0)
        return h == tuple(range(self.degree))

    # -- materialization -----------------------------------------------------

    def _check_cap(self):
        if self.order > self.cap:
            raise RefusalError(f"{self.name}: order {self.order} exceeds materialization cap {self.cap}")

    @cached_property
    def _tables(self):
        self._check_cap()
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        gens = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = _compose(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) != self.order:
            raise GroupError(f"{self.name}: closure has {len(seen)} elements, chain says {self.order}")
        elems = sorted(seen)
        E = np.array(elems, dtype=np.int64).reshape(len(elems), self.degree)
        base = np.array(self.base or [0], dtype=np.int64)
        if self.degree ** len(base) >= 2**62:
            raise GroupError("base too long for integer keys")
        radix = self.degree ** np.arange(len(base), dtype=np.int64)
        keys = E[:, base] @ radix
        order = np.argsort(keys)
        skeys = keys[order]
        N = len(elems)

        def lookup(k):
            return order[np.searchsorted(skeys, k)]

        mul = np.empty((N, N), dtype=np.int32)
        step = max(1, 4_000_000 // (N * len(base)))
        for lo in range(0, N, step):
            hi = min(N, lo + step)
            # (e_i * e_j)[b] = e_j[e_i[b]]
            img = E[:, E[lo:hi][:, base]]            # shape (N, hi-lo, len(base)), indexed [j, i, k]
            mul[lo:hi] = lookup(img @ radix).T
        inv = np.argmin(mul, axis=1).astype(np.int32)  # the identity is index 0
        orders = np.zeros(N, dtype=np.int32)
        cur = np.arange(N, dtype=np.int32)
        ar = np.arange(N)
        k = 1
        while (orders == 0).any():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = mul[cur, ar]
            k += 1
        return elems, E, base, radix, skeys, order, mul, inv, orders

    @property
    def elements(self) -> list[tuple]:
        return self._tables[0]

    @property
    def mul(self) -> np.ndarray:
        return self._tables[6]

    @property
    def inv(self) -> np.ndarray:
        return self._tables[7]

    @property
    def orders(self) -> np.ndarray:
        return self._tables[8]

    @cached_property
    def mul_list(self) -> list[list[int]]:
        """Python-list copy of the table for scalar-heavy loops (small groups only)."""
        return self.mul.tolist()

    @cached_property
    def inv_list(self) -> list[int]:
        return self.inv.tolist()

    def index(self, p: Permutation | str) -> int:
        if isinstance(p, str):
            p = Permutation.from_cycles(p, self.degree)
        if p.degree < self.degree:
            p = p.extended(self.degree)
        elems, E, base, radix, skeys, order, *_ = self._tables
        key = int(np.array([p.images[b] for b in base], dtype=np.int64) @ radix)
        pos = int(np.searchsorted(skeys, key))
        if pos >= len(skeys) or skeys[pos] != key:
            raise GroupError(f"{p} is not in {self.name}")
        i = int(order[pos])
        if elems[i] != p.images:
            raise GroupError(f"{p} is not in {self.name}")
        return i

    def perm(self, i: int) -> Permutation:
        return Permutation(self.elements[int(i)])

    def fmt(self, i: int) -> str:
        return str(self.perm(i))

    def generator_indices(self) -> list[int]:
        return [self.index(g) for g in self.generators]

    # -- basic element operations ------------------------------------------

    def multiply(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = int(self.mul[r, x])
        return r

    def power(self, x: int, k: int) -> int:
        k %= int(self.orders[x])
        r = 0
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    def conj(self, x: int, h: int) -> int:
        """x^h = h^-1 x h."""
        return int(self.mul[self.mul[self.inv[h], x], h])

    def elements_of_order(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.orders == k).astype(np.int32)

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    # -- subgroups ----------------------------------------------------------

    def closure_mask(self, xs: Iterable[int]) -> np.ndarray:
        """Boolean mask of the subgroup generated by ``xs``."""
        gens = np.unique(np.asarray(list(xs), dtype=np.int32))
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        frontier = np.zeros(1, dtype=np.int32)
        mul = self.mul
        while frontier.size and gens.size:
            nxt = np.unique(mul[frontier][:, gens].ravel())
            nxt = nxt[~mask[nxt]]
            mask[nxt] = True
            frontier = nxt
        return mask

    def subgroup_order(self, xs: Iterable[int]) -> int:
        return int(self.closure_mask(xs).sum())

    def generates(self, xs: Iterable[int]) -> bool:
        return self.subgroup_order(xs) == self.order

    @property
    def subgroups(self) -> "_SubgroupJoin":
        if self._subgroups is None:
            self._subgroups = _SubgroupJoin(self)
        return self._subgroups

    def generates_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorized ``generates`` over the rows of an integer array."""
        return self.subgroups.generated_ids(rows) == self.subgroups.full_id

    def right_transversal(self, H_gens: Iterable[int]) -> tuple[list[int], np.ndarray]:
        """Representatives of the right cosets Hg and the map g -> index of Hg."""
        H = np.flatnonzero(self.closure_mask(H_gens))
        coset = np.full(self.order, -1, dtype=np.int64)
        reps = []
        for g in range(self.order):
            if coset[g] >= 0:
                continue
            coset[self.mul[H, g]] = len(reps)
            reps.append(g)
        return reps, coset

    # -- conjugation --------------------------------------------------------

    def conjugates(self, x: int) -> np.ndarray:
        """Array c with c[h] = x^h."""
        ar = np.arange(self.order)
        return self.mul[self.mul[self.inv, x], ar]

    def conjugacy_witness(self, x: int, y: int) -> int | None:
        hits = np.flatnonzero(self.conjugates(x) == y)
        return int(hits[0]) if hits.size else None

    def centralizer(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.mul[x] == self.mul[:, x]).astype(np.int32)

    @cached_property
    def class_ids(self) -> np.ndarray:
        """class_ids[g] = index of the conjugacy class of g, classes numbered by least element."""
        ids = np.full(self.order, -1, dtype=np.int32)
        n = 0
        for g in range(self.order):
            if ids[g] < 0:
                ids[self.conjugates(g)] = n
                n += 1
        return ids

    @cached_property
    def class_reps(self) -> list[int]:
        ids = self.class_ids
        return [int(np.flatnonzero(ids == c)[0]) for c in range(int(ids.max()) + 1)]

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return np.bincount(self.class_ids)[self.class_ids]

    @cached_property
    def center(self) -> np.ndarray:
        return np.flatnonzero(self.class_sizes == 1).astype(np.int32)

    # -- automorphisms ------------------------------------------------------

    def _aut_profile(self, g: int) -> tuple[int, int]:
        return int(self.orders[g]), int(self.class_sizes[g])

    def _aut_candidates(self, g: int) -> np.ndarray:
        o, c = self._aut_profile(g)
        return np.flatnonzero((self.orders == o) & (self.class_sizes == c)).astype(np.int32)

    @cached_property
    def small_generating_set(self) -> list[int]:
        """A generating sequence chosen to keep the automorphism search small."""
        if self.order == 1:
            return []
        cost = {}
        for g in range(1, self.order):
            cost[g] = len(self._aut_candidates(g))
        reps = sorted(self.class_reps[1:], key=lambda g: (cost[g], g))
        pairs = sorted(((cost[a] * cost[b], a, b) for a in reps for b in range(1, self.order) if b != a),
                       key=lambda t: t[0])
        limit = 4000
        for _, a, b in pairs[:limit]:
            if self.generates([a, b]):
                return [a, b]
        chosen: list[int] = []
        mask = self.closure_mask([])
        while not mask.all():
            g = min((x for x in range(1, self.order) if not mask[x]), key=lambda x: (cost[x], x))
            chosen.append(g)
            mask = self.closure_mask(chosen)
        return chosen

    def automorphisms(self, cap: int = AUT_CAP) -> list[np.ndarray]:
        """All automorphisms as index maps ``phi[g]``, identity first."""
        return self._automorphisms(cap)[0]

    def automorphism_generators(self, cap: int = AUT_CAP) -> list[np.ndarray]:
        return self._automorphisms(cap)[1]

    def _automorphisms(self, cap):
        if self.order > cap:
            raise RefusalError(f"{self.name}: order {self.order} exceeds automorphism cap {cap}")
        key = ("aut", cap)
        cache = self.__dict__.setdefault("_aut_cache", {})
        if key in cache:
            return cache[key]
        gens = self.small_generating_set
        # BFS words for every element in the generators
        N = self.order
        parent = [-1] * N
        via = [-1] * N
        seen = [False] * N
        seen[0] = True
        queue = [0]
        mul = self.mul_list
        for x in queue:
            for k, s in enumerate(gens):
                y = mul[x][s]
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    via[y] = k
                    queue.append(y)
        cands = [self._aut_candidates(g).tolist() for g in gens]
        # pairwise products constrain the images cheaply
        checks = [(i, j, int(self.orders[mul[gens[i]][gens[j]]])) for i in range(len(gens)) for j in range(len(gens)) if i < j]
        orders = self.orders.tolist()
        found = []
        for imgs in product(*cands):
            if any(orders[mul[imgs[i]][imgs[j]]] != o for i, j, o in checks):
                continue
            phi = [0] * N
            ok = True
            for y in queue[1:]:
                phi[y] = mul[phi[parent[y]]][imgs[via[y]]]
            # homomorphism check on all edges of the Cayley graph
            for x in range(N):
                px = phi[x]
                for k, s in enumerate(gens):
                    if phi[mul[x][s]] != mul[px][imgs[k]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok and len(set(phi)) == N:
                found.append(np.array(phi, dtype=np.int32))
        found.sort(key=lambda a: tuple(a[gens]))
        ident = np.arange(N, dtype=np.int32)
        found = [ident] + [a for a in found if not np.array_equal(a, ident)]
        aut_gens = _small_generating_subset(found, N)
        cache[key] = (found, aut_gens)
        return cache[key]

    def inner_automorphism_generators(self) -> list[np.ndarray]:
        return [self.conjugates_all(h) for h in self.generator_indices()]

    def conjugates_all(self, h: int) -> np.ndarray:
        """Index map g -> g^h."""
        return self.mul[self.mul[self.inv[h]], h].astype(np.int32)

    def derived_subgroup(self) -> np.ndarray:
        """Mask of [G,G]; commutators [a, s] over all a and generators s span it."""
        gi = self.generator_indices()
        A = np.arange(self.order)
        comms = set()
        for s in gi:
            comms.update(self.mul[self.mul[self.inv[A], self.inv[s]], self.mul[A, s]].tolist())
        return self.closure_mask(comms)

    def is_perfect(self) -> bool:
        return bool(self.derived_subgroup().all())

    def abelian_invariants(self) -> list[int]:
        """Invariant factors of G/[G,G], read off from the orders of cosets."""
        D = self.derived_subgroup()
        coset = np.full(self.order, -1, dtype=np.int64)
        Dn = np.flatnonzero(D)
        reps = []
        for g in range(self.order):
            if coset[g] < 0:
                coset[self.mul[Dn, g]] = len(reps)
                reps.append(g)
        n = len(reps)
        # order of each coset in the quotient
        qord = []
        for g in reps:
            k, x = 1, g
            while not D[x]:
                x = int(self.mul[x, g])
                k += 1
            qord.append(k)
        return _invariants_from_orders(qord, n)


def _factor(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariants_from_orders(qord: list[int], n: int) -> list[int]:
    """Invariant factors of an abelian group of order n from its element orders."""
    factors: list[int] = []
    per_prime = {}
    for p, e in _factor(n).items():
        ranks = []
        prev = 1
        for j in range(1, e + 1):
            cnt = sum(1 for o in qord if (p**j) % o == 0)
            r = round(np.log(cnt / prev) / np.log(p))
            ranks.append(r)
            prev = cnt
        # ranks[j-1] = number of cyclic p-factors of order >= p^j
        parts = []
        for j in range(e, 0, -1):
            more = ranks[j - 1] - (ranks[j] if j < e else 0)
            parts.extend([p**j] * more)
        per_prime[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    for i in range(width):
        f = 1
        for v in per_prime.values():
            if i < len(v):
                f *= v[i]
        factors.append(f)
    return sorted(factors)


def _small_generating_subset(perms: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Greedy generating subset of a permutation group given as a full list."""
    chosen: list[np.ndarray] = []
    levels: list[_Level] = []
    ident = tuple(range(n))
    for p in perms:
        t = tuple(p.tolist())
        if t == ident:
            continue
        h, _ = _sift(levels, t, 0) if levels else (t, 0)
        if h == ident:
            continue
        chosen.append(p)
        levels = stabilizer_chain([tuple(c.tolist()) for c in chosen], n)
        if prod(len(lv.trans) for lv in levels) == len(perms):
            break
    return chosen


class _SubgroupJoin:
    """Memoized join of a subgroup with one element, for vectorized generation tests."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.gens: list[list[int]] = []
        self.ids: dict[bytes, int] = {}
        self.rows: list[np.ndarray] = []
        self.trivial = self._intern(G.closure_mask([]), [])
        self.full_id = self._intern(np.ones(G.order, dtype=bool), G.generator_indices())

    def _intern(self, mask: np.ndarray, gens: list[int]) -> int:
        key = np.packbits(mask).tobytes()
        i = self.ids.get(key)
        if i is None:
            i = len(self.gens)
            self.ids[key] = i
            self.gens.append(gens)
            row = np.full(self.G.order, -1, dtype=np.int32)
            row[mask] = i
            self.rows.append(row)
        return i

    def join(self, hid: int, xs: np.ndarray) -> np.ndarray:
        row = self.rows[hid]
        out = row[xs]
        missing = np.unique(xs[out < 0])
        for x in missing.tolist():
            gens = self.gens[hid] + [x]
            row[x] = self._intern(self.G.closure_mask(gens), gens)
        if missing.size:
            out = row[xs]
        return out

    def generated_ids(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows)
        cur = np.full(rows.shape[0], self.trivial, dtype=np.int32)
        for col in range(rows.shape[1]):
            x = rows[:, col]
            nxt = np.empty_like(cur)
            for hid in np.unique(cur).tolist():
                sel = cur == hid
                nxt[sel] = self.join(hid, x[sel])
            cur = nxt
        return cur


def from_generators(perms: Sequence[Permutation | str], name: str | None = None,
                    degree: int | None = None) -> FiniteGroup:
    ps = [Permutation.from_cycles(p, degree) if isinstance(p, str) else p for p in perms]
    if degree is None and ps:
        degree = max(p.degree for p in ps)
    return FiniteGroup(ps, name=name, degree=degree)


# ---------------------------------------------------------------------------
# semidirect products (Z_p)^n : H


_WORD = re.compile(r"([A-Za-z])_?(\d*)(?:\^(-?\d+))?")


def _parse_word(text: str) -> list[tuple[str, int]]:
    text = text.replace(" ", "").replace("*", "")
    out, pos = [], 0
    while pos < len(text):
        m = _WORD.match(text, pos)
        if not m or m.end() == pos:
            raise GroupError(f"cannot parse word {text!r} at {pos}")
        out.append((m.group(1) + m.group(2), int(m.group(3) or 1)))
        pos = m.end()
    return out


def _mat_inv_mod(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    A = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r, c] % p), None)
        if piv is None:
            raise GroupError("matrix is not invertible modulo p")
        A[[c, piv]] = A[[piv, c]]
        A[c] = A[c] * pow(int(A[c, c]), -1, p) % p
        for r in range(n):
            if r != c and A[r, c]:
                A[r] = (A[r] - A[r, c] * A[c]) % p
    return A[:, n:]


def semidirect_product(dim: int, modulus: int, actors: dict[str, Sequence[Sequence[int]]],
                       relations: Sequence[str] = (), name: str | None = None,
                       max_order: int = MATERIALIZE_CAP) -> FiniteGroup:
    """(Z_modulus)^dim extended by matrices, as a permutation group.

    ``actors[y]`` is the matrix M with ``y^-1 x_j y = sum_i M[i][j] x_i``.
    Elements are pairs (v, A) with (v1,A1)(v2,A2) = (v1 + A1 v2, A1 A2); the
    actor y is (0, M^-1).  The group acts on itself by right multiplication.
    """
    p = modulus
    ident = np.eye(dim, dtype=np.int64)
    mats = {}
    for y, M in actors.items():
        M = np.array(M, dtype=np.int64).reshape(dim, dim) % p
        mats[y] = _mat_inv_mod(M, p)

    def enc(v, A):
        return (tuple(int(x) for x in v % p), tuple(int(x) for x in (A % p).ravel()))

    def dec(e):
        return np.array(e[0], dtype=np.int64), np.array(e[1], dtype=np.int64).reshape(dim, dim)

    def mult(e1, e2):
        v1, A1 = dec(e1)
        v2, A2 = dec(e2)
        return enc(v1 + A1 @ v2, A1 @ A2)

    zero = np.zeros(dim, dtype=np.int64)
    named = {}
    for i in range(dim):
        v = zero.copy()
        v[i] = 1
        named[f"x{i + 1}"] = enc(v, ident)
    for y, A in mats.items():
        named[y] = enc(zero, A)
    one = enc(zero, ident)
    elems = {one: 0}
    order = [one]
    for e in order:
        for g in named.values():
            f = mult(e, g)
            if f not in elems:
                elems[f] = len(order)
                order.append(f)
                if len(order) > max_order:
                    raise GroupError("actor closure exceeds the size cap")
    N = len(order)
    perms = {k: Permutation(tuple(elems[mult(e, g)] for e in order)) for k, g in named.items()}
    G = FiniteGroup(list(perms.values()), name=name, degree=N)

    def word_perm(word: str) -> Permutation:
        e = one
        for sym, k in _parse_word(word):
            if sym not in named:
                raise GroupError(f"unknown generator {sym!r}")
            g = named[sym]
            if k < 0:
                inv = next(f for f in order if mult(g, f) == one)
                g, k = inv, -k
            for _ in range(k):
                e = mult(e, g)
        return Permutation(tuple(elems[mult(x, e)] for x in order))

    G.word_perm = word_perm
    for rel in relations:
        if word_perm(rel) != Permutation.identity(N):
            raise GroupError(f"actor relation {rel!r} does not hold")
    return G


# ---------------------------------------------------------------------------
# group files and the catalogue


@dataclass
class CatalogueEntry:
    name: str
    order: int | None
    sweep: bool
    build: object  # zero-argument callable
    aliases: tuple[str, ...] = ()


def _parse_stanza(lines: list[str]) -> CatalogueEntry:
    fields: dict[str, list[str]] = {}
    for ln in lines:
        key, _, rest = ln.partition(" ")
        fields.setdefault(key, []).append(rest.strip())
    if "name" not in fields:
        raise GroupError(f"stanza without a name: {lines[:2]}")
    name = fields["name"][0]
    order = int(fields["order"][0]) if "order" in fields else None
    sweep = fields.get("sweep", ["yes"])[0] != "no"
    aliases = tuple(a.strip() for a in fields.get("alias", []))
    if "semidirect" in fields:
        dim = int(fields["dimension"][0])
        modulus = int(fields["modulus"][0])
        actors = {}
        for a in fields.get("actor", []):
            sym, _, rows = a.partition(" ")
            actors[sym] = [[int(x) for x in r.split()] for r in rows.split("/")]
        rels = fields.get("relation", [])

        def build():
            return semidirect_product(dim, modulus, actors, rels, name=name)
    else:
        degree = int(fields["degree"][0]) if "degree" in fields else None
        gens = fields.get("gen", [])

        def build():
            return from_generators(gens, name=name, degree=degree)

    def checked():
        G = build()
        if order is not None and G.order != order:
            raise GroupError(f"{name}: expected order {order}, got {G.order}")
        return G

    return CatalogueEntry(name, order, sweep, checked, aliases)


def parse_group_file(text: str) -> list[CatalogueEntry]:
    """Parse stanzas separated by blank lines; ``#`` starts a comment."""
    entries, cur = [], []
    for raw in text.splitlines() + [""]:
        ln = raw.split("#", 1)[0].strip()
        if not ln:
            if cur:
                entries.append(_parse_stanza(cur))
                cur = []
            continue
        cur.append(ln)
    return entries


class Catalogue:
    def __init__(self, entries: Iterable[CatalogueEntry]):
        self.entries = {}
        self.alias = {}
        for e in entries:
            self.entries[e.name] = e
            for a in e.aliases:
                self.alias[a] = e.name
        self._built: dict[str, FiniteGroup] = {}

    @classmethod
    def from_path(cls, path: str | os.PathLike) -> "Catalogue":
        p = Path(path)
        files = sorted(p.glob("*.txt")) if p.is_dir() else [p]
        entries = []
        for f in files:
            entries.extend(parse_group_file(f.read_text()))
        return cls(entries)

    def resolve(self, name: str) -> str:
        name = self.alias.get(name, name)
        if name not in self.entries:
            raise KeyError(f"unknown group {name!r}")
        return name

    def get(self, name: str) -> FiniteGroup:
        name = self.resolve(name)
        if name not in self._built:
            self._built[name] = self.entries[name].build()
        return self._built[name]

    def names(self, sweep_only: bool = False) -> list[str]:
        return [n for n, e in self.entries.items() if e.sweep or not sweep_only]

    def of_order(self, n: int) -> list[str]:
        out = []
        for name in self.names(sweep_only=True):
            e = self.entries[name]
            o = e.order if e.order is not None else self.get(name).order
            if o == n:
                out.append(name)
        return out

    def orders(self) -> set[int]:
        return {e.order if e.order is not None else self.get(n).order
                for n, e in self.entries.items() if e.sweep}


_DEFAULT: Catalogue | None = None


def catalogue(path: str | os.PathLike | None = None) -> Catalogue:
    """The shipped catalogue, or the one at ``path`` / ``$PRODQUOT_CATALOGUE``."""
    global _DEFAULT
    path = path or os.environ.get("PRODQUOT_CATALOGUE")
    if path:
        return Catalogue.from_path(path)
    if _DEFAULT is None:
        text = resources.files("prodquot").joinpath("data/catalogue.txt").read_text()
        _DEFAULT = Catalogue(parse_group_file(text))
    return _DEFAULT


def catalogue_lookup(name: str) -> FiniteGroup:
    return catalogue().get(name)


def catalogue_names() -> list[str]:
    return catalogue().names()
