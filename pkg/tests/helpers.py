"""Shared test data: published table rows and the explicit vector fixtures."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from prodquot.baskets import Basket
from prodquot.signatures import Signature, parse_signature

DATA = Path(__file__).parent / "data"


@dataclass(frozen=True)
class Row:
    k2: int
    basket: Basket
    t1: Signature
    t2: Signature
    group: str
    order: int
    n: int
    h1: str


def table_rows() -> list[Row]:
    rows = []
    for line in (DATA / "table_rows.psv").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        k2, b, t1, t2, g, order, n, h = (x.strip() for x in line.split("|"))
        rows.append(Row(int(k2), Basket.parse(b), parse_signature(t1), parse_signature(t2), g, int(order), int(n), h))
    return rows


def minimal_rows() -> list[Row]:
    """Rows of the minimal surfaces (everything except the 1/7, 2/7^2 surface)."""
    return [r for r in table_rows() if r.basket != Basket.parse("1/7, 2/7^2")]


def fixture_entries() -> list[dict]:
    text = resources.files("prodquot").joinpath("data/fixtures.json").read_text()
    return json.loads(text)


def fixture_id(e: dict) -> str:
    return f"K2={e['k2']}-{e['group']}-{e['basket'].replace(' ', '')}"


FAKE_GODEAUX = Basket.parse("1/7, 2/7^2")

# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE: dict[int, str] = {}


def skipped_rows() -> list[tuple[int, Basket, Signature, Signature, int]]:
    """Published cases left open because the group order is out of reach."""
    out = []
    for line in (DATA / "skipped_rows.psv").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        k2, b, t1, t2, order = (x.strip() for x in line.split("|"))
        out.append((int(k2), Basket.parse(b), parse_signature(t1), parse_signature(t2), int(order)))
    return out


_RUNS: dict[int, tuple] = {}


def full_run(k2: int):
    """(report, seconds) of a default classify run, shared across test modules."""
    import time

    from prodquot.pipeline import RunConfig, classify

    if k2 not in _RUNS:
        t0 = time.perf_counter()
        report = classify(RunConfig(k2=k2))
        _RUNS[k2] = (report, time.perf_counter() - t0)
    return _RUNS[k2]
