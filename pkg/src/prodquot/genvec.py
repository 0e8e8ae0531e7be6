"""Spherical systems of generators, Hurwitz moves and the equivalence classes of
pairs of them.

A generating vector of signature ``t`` (sorted descending) is a tuple of element
indices ``(g_1, ..., g_r)`` with ``ord(g_i) = t[i]``, ``g_1 ... g_r = 1`` and
``<g_1, ..., g_r> = G``.  Batches of vectors are numpy arrays with one vector
per row, kept in lexicographic order of element indices.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .groups import FiniteGroup
from .signatures import Signature, make_signature

__all__ = [
    "arrangements",
    "gen_vectors",
    "exists_gen_vector",
    "gen_vectors_up_to_conj",
    "is_gen_vector",
    "hurwitz_move",
    "hurwitz_orbit",
    "braid_classes",
    "find_curves",
    "find_surfaces",
    "format_vector",
    "parse_vector",
]


def arrangements(t: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct orderings of a signature, the descending one first."""
    t = make_signature(t)
    return sorted(set(permutations(t)), reverse=True)


def _prefix_products(G: FiniteGroup, slots: list[np.ndarray], first: np.ndarray):
    """Rows over ``first`` x slots[0] x ... with their running products."""
    mul = G.mul
    rows = first.reshape(-1, 1).astype(np.int32)
    prods = first.astype(np.int32)
    for E in slots:
        if rows.shape[0] == 0:
            break
        p = mul[prods[:, None], E[None, :]]       # (rows, |E|)
        rows = np.concatenate([np.repeat(rows, len(E), axis=0),
                               np.tile(E, rows.shape[0]).reshape(-1, 1)], axis=1)
        prods = p.ravel()
    return rows, prods


def _vectors(G: FiniteGroup, seq: Sequence[int], first: np.ndarray | None = None,
             stop_at_first: bool = False) -> np.ndarray:
    """All generating vectors with entry orders exactly ``seq`` (in that order)."""
    r = len(seq)
    if r < 2:
        raise ValueError("signatures have at least two entries here")
    sets = [G.elements_of_order(m) for m in seq[:-1]]
    if any(len(E) == 0 for E in sets) or not (G.orders == seq[-1]).any():
        return np.zeros((0, r), dtype=np.int32)
    heads = sets[0] if first is None else first
    out = []
    for x in heads:
        rows, prods = _prefix_products(G, sets[1:], np.array([x], dtype=np.int32))
        last = G.inv[prods]
        keep = G.orders[last] == seq[-1]
        if not keep.any():
            continue
        cand = np.concatenate([rows[keep], last[keep].reshape(-1, 1)], axis=1).astype(np.int32)
        ok = G.generates_rows(cand[:, :-1])
        if ok.any():
            cand = cand[ok]
            if stop_at_first:
                return cand[:1]
            out.append(cand)
    if not out:
        return np.zeros((0, r), dtype=np.int32)
    V = np.concatenate(out)
    return V[np.lexsort(V.T[::-1])]


def gen_vectors(G: FiniteGroup, t: Sequence[int], ordered: bool = False) -> np.ndarray:
    """All generating vectors of signature ``t``.

    With ``ordered=False`` the signature is sorted descending first; otherwise
    entry ``i`` has order exactly ``t[i]``.
    """
    seq = tuple(t) if ordered else make_signature(t)
    return _vectors(G, seq)


def exists_gen_vector(G: FiniteGroup, t: Sequence[int]) -> bool:
    """Whether ``G`` has a generating vector of signature ``t``.

    The first entry is restricted to conjugacy-class representatives: a
    generating vector conjugated by any element is again one.
    """
    seq = make_signature(t)
    if len(seq) < 2 or any(not (G.orders == m).any() for m in seq):
        return False
    reps = np.array([g for g in G.class_reps if G.orders[g] == seq[0]], dtype=np.int32)
    return _vectors(G, seq, first=reps, stop_at_first=True).shape[0] > 0


def is_gen_vector(G: FiniteGroup, v: Sequence[int], t: Sequence[int] | None = None) -> bool:
    if t is not None and [int(G.orders[g]) for g in v] != list(t):
        return False
    return G.multiply(*v) == 0 and G.generates(v)


# ---------------------------------------------------------------------------
# orbit machinery


def _keys(V: np.ndarray, N: int) -> np.ndarray:
    # the last entry is determined by the others, so it does not enter the key
    cols = V.shape[1] - 1
    if float(N) ** cols >= 2**62:
        raise OverflowError("vectors too long for integer keys")
    w = N ** np.arange(cols - 1, -1, -1, dtype=np.int64)
    return V[:, :cols].astype(np.int64) @ w


def _lookup(skeys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(skeys, keys)
    pos = np.minimum(pos, len(skeys) - 1)
    if not (skeys[pos] == keys).all():
        raise RuntimeError("image vector missing from the enumerated set")
    return pos


def _components(n: int, edges: list[tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
    """Component labels, numbered by the smallest member index."""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    src = np.concatenate([e[0] for e in edges]) if edges else np.zeros(0, dtype=np.int64)
    dst = np.concatenate([e[1] for e in edges]) if edges else np.zeros(0, dtype=np.int64)
    A = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, lab = connected_components(A, directed=True, connection="weak")
    first = np.full(lab.max() + 1, n, dtype=np.int64)
    np.minimum.at(first, lab, np.arange(n))
    rank = np.argsort(np.argsort(first))
    return rank[lab]


def _moved(G: FiniteGroup, V: np.ndarray, k: int) -> np.ndarray:
    W = V.copy()
    a, b = V[:, k], V[:, k + 1]
    W[:, k] = b
    W[:, k + 1] = G.mul[G.mul[G.inv[b], a], b]
    return W


class BraidClasses:
    """Hurwitz-move orbits of the generating vectors of one signature.

    ``vectors`` holds the vectors whose entry orders follow the descending
    signature (the ones the orbit filter keeps); ``labels[i]`` is the orbit of
    ``vectors[i]``, orbits numbered by their smallest member.
    """

    def __init__(self, G: FiniteGroup, t: Signature):
        self.G = G
        self.t = make_signature(t)
        parts = [_vectors(G, a) for a in arrangements(self.t)]
        n_desc = parts[0].shape[0]
        U = np.concatenate(parts) if parts else np.zeros((0, len(self.t)), dtype=np.int32)
        keys = _keys(U, G.order)
        order = np.argsort(keys, kind="stable")
        skeys = keys[order]
        inv_order = np.empty_like(order)
        inv_order[order] = np.arange(len(order))
        edges = []
        for k in range(len(self.t) - 1):
            W = _moved(G, U, k)
            j = order[_lookup(skeys, _keys(W, G.order))]
            edges.append((np.arange(len(U)), j))
        lab_all = _components(len(U), edges)
        D = U[:n_desc]
        self.vectors = D
        lab = lab_all[:n_desc]
        # renumber by smallest descending member
        if n_desc:
            uniq, first_idx = np.unique(lab, return_index=True)
            rank = np.empty(lab_all.max() + 1, dtype=np.int64)
            rank[uniq[np.argsort(first_idx)]] = np.arange(len(uniq))
            self.labels = rank[lab]
            self.rep_index = np.sort(first_idx)
        else:
            self.labels = np.zeros(0, dtype=np.int64)
            self.rep_index = np.zeros(0, dtype=np.int64)
        self._dkeys = _keys(D, G.order)  # D is sorted, so are its keys
        self.total_orbit_size = len(U)

    @property
    def count(self) -> int:
        return len(self.rep_index)

    def reps(self) -> np.ndarray:
        return self.vectors[self.rep_index]

    def label_map(self, phi: np.ndarray) -> np.ndarray:
        """Induced permutation of the orbit labels by an automorphism ``phi``."""
        if not self.count:
            return np.zeros(0, dtype=np.int64)
        img = phi[self.reps()]
        return self.labels[_lookup(self._dkeys, _keys(img, self.G.order))]


def braid_classes(G: FiniteGroup, t: Sequence[int]) -> BraidClasses:
    return BraidClasses(G, make_signature(t))


def _label_classes(n: int, maps: list[np.ndarray]) -> np.ndarray:
    edges = [(np.arange(n), m) for m in maps]
    return _components(n, edges)


# ---------------------------------------------------------------------------
# public operations


def hurwitz_move(G: FiniteGroup, v: Sequence[int], i: int) -> tuple[int, ...]:
    """(..., v_i, v_{i+1}, ...) -> (..., v_{i+1}, v_i^{v_{i+1}}, ...), with 1-based ``i``."""
    if not 1 <= i < len(v):
        raise IndexError(f"move index {i} out of range for length {len(v)}")
    w = list(v)
    a, b = w[i - 1], w[i]
    w[i - 1], w[i] = b, G.conj(a, b)
    return tuple(w)


def hurwitz_orbit(G: FiniteGroup, v: Sequence[int], filtered: bool = True) -> set[tuple[int, ...]]:
    """Closure of ``v`` under Hurwitz moves.

    With ``filtered`` only the members whose entry orders never increase are
    returned, which is what the orbit computations downstream consume.
    """
    mul, inv = G.mul_list, G.inv_list
    start = tuple(int(x) for x in v)
    orb = {start}
    todo = [start]
    r = len(start)
    while todo:
        w = todo.pop()
        for k in range(r - 1):
            a, b = w[k], w[k + 1]
            u = w[:k] + (b, mul[mul[inv[b]][a]][b]) + w[k + 2:]
            if u not in orb:
                orb.add(u)
                todo.append(u)
    if not filtered:
        return orb
    o = G.orders
    return {w for w in orb if all(o[w[k]] >= o[w[k + 1]] for k in range(r - 1))}


def gen_vectors_up_to_conj(G: FiniteGroup, t: Sequence[int]) -> np.ndarray:
    """One vector (the smallest) per simultaneous-conjugation class."""
    V = gen_vectors(G, t)
    if not len(V):
        return V
    keys = _keys(V, G.order)
    maps = []
    for h in G.generator_indices():
        W = G.conjugates_all(h)[V]
        maps.append(_lookup(keys, _keys(W, G.order)))
    lab = _label_classes(len(V), maps)
    _, first = np.unique(lab, return_index=True)
    return V[np.sort(first)]


def find_curves(G: FiniteGroup, t: Sequence[int]) -> list[tuple[int, ...]]:
    """One vector per class under Hurwitz moves and inner automorphisms."""
    bc = braid_classes(G, t)
    if not bc.count:
        return []
    maps = [bc.label_map(G.conjugates_all(h)) for h in G.generator_indices()]
    cls = _label_classes(bc.count, maps)
    reps = bc.reps()
    out = {}
    for lbl in range(bc.count):
        c = int(cls[lbl])
        if c not in out:
            out[c] = tuple(int(x) for x in reps[lbl])
    return [out[c] for c in sorted(out)]


def surface_classes(G: FiniteGroup, t1: Sequence[int], t2: Sequence[int],
                    auts: list[np.ndarray] | None = None) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """One pair per class under Hurwitz moves on each side and simultaneous Aut(G)."""
    b1 = braid_classes(G, t1)
    b2 = braid_classes(G, t2)
    if not (b1.count and b2.count):
        return []
    if auts is None:
        auts = G.automorphism_generators()
    n1, n2 = b1.count, b2.count
    maps = []
    for phi in auts:
        m1, m2 = b1.label_map(phi), b2.label_map(phi)
        a = np.repeat(np.arange(n1), n2)
        b = np.tile(np.arange(n2), n1)
        maps.append(m1[a] * n2 + m2[b])
    cls = _label_classes(n1 * n2, maps)
    r1, r2 = b1.reps(), b2.reps()
    out = {}
    # pair ids increase lexicographically with (rep1, rep2), so the first hit is the smallest
    for pid in range(n1 * n2):
        c = int(cls[pid])
        if c not in out:
            a, b = divmod(pid, n2)
            out[c] = (tuple(int(x) for x in r1[a]), tuple(int(x) for x in r2[b]))
    return [out[c] for c in sorted(out)]


def find_surfaces(basket, t1: Sequence[int], t2: Sequence[int], G: FiniteGroup,
                  auts: list[np.ndarray] | None = None):
    """Class representatives whose induced singularities match ``basket``."""
    from .surface import check_sings

    return [(v1, v2) for v1, v2 in surface_classes(G, t1, t2, auts)
            if check_sings(basket, v1, v2, G)]


def format_vector(G: FiniteGroup, v: Sequence[int]) -> list[str]:
    return [G.fmt(g) for g in v]


def parse_vector(G: FiniteGroup, items: Sequence[str]) -> tuple[int, ...]:
    """Element indices for permutations in cycle notation or words in named generators."""
    out = []
    for s in items:
        s = s.strip()
        if s.startswith("(") or s == "":
            out.append(G.index(s or "()"))
        else:
            out.append(G.index(G.word_perm(s)))
    return tuple(out)
