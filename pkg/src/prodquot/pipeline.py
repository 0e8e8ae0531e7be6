"""The classification sweep: baskets -> signatures -> groups -> surfaces -> H1.

:func:`list_admissible_triples` pairs every basket of the requested K^2 with
unordered pairs of compatible signatures and the catalogue groups of the
forced order that carry generating vectors of both signatures.
:func:`classify` then finds the surfaces themselves, one record per
equivalence class, and fills in their invariants.
"""

from __future__ import annotations

import json
import logging
import resource
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable

from .baskets import Basket, enumerate_baskets
from .genvec import find_surfaces
from .groups import Catalogue, RefusalError, catalogue
from .homology import AbelianInvariants, h1
from .signatures import Signature, format_signature, group_order, parse_signature, signatures_for_basket
from .surface import SurfaceRecord, classify_minimality, make_record

__all__ = [
    "DEFAULT_SKIP_ORDERS",
    "MAX_ORDER",
    "RunConfig",
    "Triple",
    "Skipped",
    "ClassificationReport",
    "list_admissible_triples",
    "classify",
    "emit_report",
    "parse_report",
    "timing_stats",
]

log = logging.getLogger(__name__)

DEFAULT_SKIP_ORDERS = frozenset({256, 512, 768, 1024, 1152, 1280, 1536, 1728, 1792, 1920})
MAX_ORDER = 2000
STAGES = ("baskets", "signatures", "group-search", "find-surfaces", "h1")


@dataclass
class RunConfig:
    k2: int
    max_order: int = MAX_ORDER
    groups: tuple[str, ...] | None = None  # allowlist of catalogue names
    skip_orders: frozenset[int] = DEFAULT_SKIP_ORDERS
    compute_h1: bool = True
    compute_minimality: bool = True
    catalogue_path: str | None = None
    basket_strategy: str = "indexed"
    jobs: int = 1

    def __post_init__(self):
        if not 1 <= self.k2 <= 8:
            raise ValueError("k2 must lie in 1..8")
        if self.max_order > MAX_ORDER:
            raise ValueError(f"max order is capped at {MAX_ORDER}")
        self.skip_orders = frozenset(self.skip_orders)

    def catalogue(self) -> Catalogue:
        return catalogue(self.catalogue_path)


@dataclass(frozen=True)
class Triple:
    basket: Basket
    t1: Signature
    t2: Signature
    group: str


@dataclass(frozen=True)
class Skipped:
    basket: Basket
    t1: Signature
    t2: Signature
    order: int
    reason: str

    def to_json(self) -> dict:
        return {"basket": self.basket.to_json(), "t1": format_signature(self.t1),
                "t2": format_signature(self.t2), "order": self.order, "reason": self.reason}

    @classmethod
    def from_json(cls, d: dict) -> "Skipped":
        return cls(Basket.of(*d["basket"]), parse_signature(d["t1"]), parse_signature(d["t2"]),
                   d["order"], d["reason"])


@dataclass
class ClassificationReport:
    accepted: list[SurfaceRecord] = field(default_factory=list)
    skipped: list[Skipped] = field(default_factory=list)
    refusals: list[dict] = field(default_factory=list)
    timings: dict[str, dict[str, float]] = field(default_factory=dict)


class _Stopwatch:
    def __init__(self):
        self.timings = {s: {"seconds": 0.0, "peak_mb": 0.0} for s in STAGES}

    def add(self, stage: str, seconds: float):
        t = self.timings[stage]
        t["seconds"] += seconds
        # ru_maxrss is in kilobytes on Linux; the process peak is all we can see
        t["peak_mb"] = max(t["peak_mb"], resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024)


def _sig_key(t: Signature):
    return (len(t), t)


def _pair(t1: Signature, t2: Signature) -> tuple[Signature, Signature]:
    return (t1, t2) if _sig_key(t1) <= _sig_key(t2) else (t2, t1)


def _perfect_only(t1: Signature, t2: Signature) -> bool:
    # a quotient of the (2,3,7) triangle group is perfect
    return (7, 3, 2) in (t1, t2)


def _check_candidate(args) -> tuple[str, bool]:
    name, t1, t2, path = args
    from .genvec import exists_gen_vector

    G = catalogue(path).get(name)
    if _perfect_only(t1, t2) and not G.is_perfect():
        return name, False
    return name, exists_gen_vector(G, t1) and exists_gen_vector(G, t2)


def _basket_signatures(cfg: RunConfig, sw: _Stopwatch | None = None):
    t0 = time.perf_counter()
    baskets = sorted(enumerate_baskets(3 * (8 - cfg.k2), cfg.basket_strategy))
    t1 = time.perf_counter()
    out = []
    for b in baskets:
        sigs = sorted(signatures_for_basket(b), key=_sig_key)
        if sigs:
            out.append((b, sigs))
    if sw:
        sw.add("baskets", t1 - t0)
        sw.add("signatures", time.perf_counter() - t1)
    return out


def list_admissible_triples(cfg: RunConfig, _sw: _Stopwatch | None = None,
                            pool: ProcessPoolExecutor | None = None) -> tuple[list[Triple], list[Skipped]]:
    """Triples (basket, signature pair, group) surviving the existence test, and skipped cases."""
    cat = cfg.catalogue()
    allowed = set(cfg.groups) if cfg.groups is not None else None
    checked: list[Triple] = []
    skipped: list[Skipped] = []
    jobs = []
    for b, sigs in _basket_signatures(cfg, _sw):
        for t1, t2 in combinations_with_replacement(sigs, 2):
            order = group_order(t1, t2, b)
            if order.denominator != 1:
                continue
            n = int(order)
            if n > cfg.max_order:
                skipped.append(Skipped(b, t1, t2, n, "order above the cap"))
                continue
            if n in cfg.skip_orders:
                skipped.append(Skipped(b, t1, t2, n, "order in the skip list"))
                continue
            names = [x for x in cat.of_order(n) if allowed is None or x in allowed]
            if not names:
                skipped.append(Skipped(b, t1, t2, n, "no catalogue group of this order"))
                continue
            jobs.extend((b, t1, t2, name) for name in names)
    t0 = time.perf_counter()
    args = [(name, t1, t2, cfg.catalogue_path) for _, t1, t2, name in jobs]
    results = pool.map(_check_candidate, args) if pool else map(_check_candidate, args)
    for (b, t1, t2, _), (name, ok) in zip(jobs, results):
        if ok:
            checked.append(Triple(b, t1, t2, name))
    if _sw:
        _sw.add("group-search", time.perf_counter() - t0)
    return checked, skipped


def _surfaces_for(args):
    tr, path, do_h1, do_min = args
    G = catalogue(path).get(tr.group)
    t0 = time.perf_counter()
    try:
        pairs = find_surfaces(tr.basket, tr.t1, tr.t2, G)
    except RefusalError as exc:
        return [], {"triple": _triple_json(tr), "reason": str(exc)}, time.perf_counter() - t0, 0.0
    t1 = time.perf_counter()
    recs = []
    for v1, v2 in pairs:
        rec = make_record(G, tr.basket, v1, v2)
        if do_h1:
            rec.h1 = h1(v1, v2, G).as_list()
        if not do_min:
            rec.minimality = None
        recs.append(rec)
    return recs, None, t1 - t0, time.perf_counter() - t1


def _triple_json(tr: Triple) -> dict:
    return {"basket": tr.basket.to_json(), "t1": format_signature(tr.t1),
            "t2": format_signature(tr.t2), "group": tr.group}


def _record_key(r: SurfaceRecord):
    return (r.k2, r.basket.sort_key(), _sig_key(r.t1), _sig_key(r.t2), r.group, r.vectors)


def classify(cfg: RunConfig) -> ClassificationReport:
    """Run the whole sweep for one K^2."""
    sw = _Stopwatch()
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        checked, skipped = list_admissible_triples(cfg, sw, pool)
        args = [(tr, cfg.catalogue_path, cfg.compute_h1, cfg.compute_minimality) for tr in checked]
        results = list(pool.map(_surfaces_for, args) if pool else map(_surfaces_for, args))
    finally:
        if pool:
            pool.shutdown()
    report = ClassificationReport(skipped=skipped)
    for recs, refusal, t_find, t_h1 in results:
        sw.add("find-surfaces", t_find)
        sw.add("h1", t_h1)
        report.accepted.extend(recs)
        if refusal:
            report.refusals.append(refusal)
    report.accepted.sort(key=_record_key)
    report.timings = sw.timings
    return report


# ---------------------------------------------------------------------------
# output


def _h1_str(h: list[int] | None) -> str:
    return "" if h is None else AbelianInvariants.from_list(h).table_str()


def _table_rows(r: ClassificationReport) -> list[list[str]]:
    groups: dict[tuple, int] = {}
    for rec in r.accepted:
        key = (str(rec.k2), " ".join(rec.basket.table_str().split(", ")),
               format_signature(rec.t1, " "), format_signature(rec.t2, " "), rec.group, _h1_str(rec.h1))
        groups[key] = groups.get(key, 0) + 1
    return [[k2, b, t1, t2, g, str(n), h] for (k2, b, t1, t2, g, h), n in groups.items()]


def emit_report(r: ClassificationReport, fmt: str = "json", timings: bool = True) -> bytes:
    """Serialize a report as JSON or as a CSV table with one line per (basket, t1, t2, G, H1)."""
    if fmt == "json":
        doc = {"accepted": [x.to_json() for x in r.accepted],
               "skipped": [x.to_json() for x in r.skipped]}
        if r.refusals:
            doc["refusals"] = r.refusals
        if timings:
            doc["timings"] = r.timings
        return (json.dumps(doc, indent=1, ensure_ascii=False) + "\n").encode()
    if fmt == "csv":
        lines = ["K2, Sing X, t1, t2, G, N, H1"]
        lines += [", ".join(row) for row in _table_rows(r)]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(data: bytes | str) -> ClassificationReport:
    doc = json.loads(data)
    return ClassificationReport(
        accepted=[SurfaceRecord.from_json(x) for x in doc.get("accepted", [])],
        skipped=[Skipped.from_json(x) for x in doc.get("skipped", [])],
        refusals=doc.get("refusals", []),
        timings=doc.get("timings", {}),
    )


def timing_stats(cfg: RunConfig) -> list[tuple[str, float, float]]:
    """(stage, seconds, peak resident MB) for a full run of ``cfg``."""
    t = classify(cfg).timings
    return [(s, t[s]["seconds"], t[s]["peak_mb"]) for s in STAGES]


# ---------------------------------------------------------------------------
# fixture verification


def verify_fixtures(entries: Iterable[dict], cat: Catalogue, compute_h1: bool = True) -> ClassificationReport:
    """Records for explicit vector pairs; entries need k2, basket, group, S1, S2."""
    from .genvec import parse_vector
    from .surface import check_sings

    report = ClassificationReport()
    for e in entries:
        G = cat.get(e["group"])
        v1, v2 = parse_vector(G, e["S1"]), parse_vector(G, e["S2"])
        b = Basket.parse(e["basket"])
        if not check_sings(b, v1, v2, G):
            report.refusals.append({"fixture": e, "reason": "singularities do not match the basket"})
            continue
        rec = make_record(G, b, v1, v2)
        rec.minimality = classify_minimality(b)
        if compute_h1:
            rec.h1 = h1(v1, v2, G).as_list()
        report.accepted.append(rec)
    return report
