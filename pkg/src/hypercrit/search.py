"""Isomorph-free enumeration of small intersecting hypergraphs, extremal
orders of the criticality classes, and a catalog of named examples."""

from __future__ import annotations

import itertools
import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterator

from .criticality import ClassMembership, PreconditionError, classify, nesting_holds
from .hypergraph import CANONICAL_MAX_N, Hypergraph, HypergraphError, canonical_form, mask_of, members_of
from .transforms import minimalize, rank_lift

MAX_SEARCH_N = CANONICAL_MAX_N


# --------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    hypergraph: Hypergraph
    provenance: str


FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]

CATALOG_NAMES = ("fano", "complete_uniform(r)", "triangle", "paper_example_4v", "star(k)")


def fano() -> Hypergraph:
    return Hypergraph(7, FANO_LINES)


def complete_uniform(r: int) -> Hypergraph:
    """All r-subsets of a (2r - 1)-set."""
    if r < 1:
        raise HypergraphError("r must be positive")
    return Hypergraph(2 * r - 1, itertools.combinations(range(2 * r - 1), r))


def triangle() -> Hypergraph:
    return Hypergraph(3, [(0, 1), (1, 2), (0, 2)])


def paper_example_4v() -> Hypergraph:
    # v1..v4 -> 0..3: {v1 v2 v3}, {v1 v4}, {v2 v4}, {v3 v4}
    return Hypergraph(4, [(0, 1, 2), (0, 3), (1, 3), (2, 3)])


def star(k: int) -> Hypergraph:
    """Centre 0 joined to leaves 1..k by 2-edges."""
    if k < 1:
        raise HypergraphError("star needs at least one leaf")
    return Hypergraph(k + 1, [(0, i) for i in range(1, k + 1)])


def catalog(name: str) -> CatalogEntry:
    key = name.strip().lower()
    if key == "fano":
        return CatalogEntry("fano", fano(), "Fano plane: 7 points, 7 lines of the projective plane of order 2")
    if key == "triangle":
        return CatalogEntry("triangle", triangle(), "complete graph K3")
    if key == "paper_example_4v":
        return CatalogEntry("paper_example_4v", paper_example_4v(),
                            "4-vertex 1-edge-critical example with one 3-edge and three 2-edges")
    m = re.fullmatch(r"complete_uniform\((\d+)\)", key)
    if m:
        r = int(m.group(1))
        return CatalogEntry(key, complete_uniform(r), f"all {r}-subsets of {2 * r - 1} points")
    m = re.fullmatch(r"star\((\d+)\)", key)
    if m:
        k = int(m.group(1))
        return CatalogEntry(key, star(k), f"star with {k} 2-edges")
    raise KeyError(f"unknown catalog entry {name!r}; available: {', '.join(CATALOG_NAMES)}")


# --------------------------------------------------------------------------
# enumeration


def _qd_two_possible(n: int, masks: list[int]) -> bool:
    """Every vertex has two edges among ``masks`` meeting exactly in it."""
    for v in range(n):
        bit = 1 << v
        inc = [m for m in masks if m & bit]
        if not any(a & b == bit for a, b in itertools.combinations(inc, 2)):
            return False
    return True


def enumerate_H_r(
    r: int,
    n: int,
    uniform: bool = False,
    vertex_critical_prefilter: bool = False,
    max_edges: int | None = None,
) -> Iterator[Hypergraph]:
    """All intersecting hypergraphs of rank exactly ``r`` on ``n`` non-isolated
    vertices with edge sizes in ``[2, r]``, one per isomorphism class.

    Families are grown one edge at a time, only ever adding an edge that
    meets all chosen ones, and deduplicated by canonical form at each size.
    The prefilter drops a partial family when some vertex cannot reach
    quasidegree two even after adding every still-compatible edge; since
    adding edges never lowers quasidegree this loses no 1-vertex-critical
    family. Output is in a deterministic order.
    """
    if r < 2:
        raise HypergraphError("rank must be at least 2")
    if n > MAX_SEARCH_N:
        raise HypergraphError(f"enumeration supports n <= {MAX_SEARCH_N}, got {n}")
    if n < r:
        return
    sizes = [r] if uniform else list(range(2, r + 1))
    candidates = sorted(
        (mask_of(c) for k in sizes for c in itertools.combinations(range(n), k)),
        key=lambda m: members_of(m),
    )
    full = (1 << n) - 1
    rank_bits = {m for m in candidates if bin(m).count("1") == r}

    def viable(fam: tuple[int, ...]) -> bool:
        if not vertex_critical_prefilter:
            return True
        pool = [c for c in candidates if all(c & m for m in fam)]
        return _qd_two_possible(n, pool)

    level: dict[bytes, tuple[int, ...]] = {}
    for c in candidates:
        fam = (c,)
        if not viable(fam):
            continue
        key = canonical_form(Hypergraph(n, [members_of(c)]))
        level.setdefault(key, fam)

    size = 1
    while level:
        for key in sorted(level):
            fam = level[key]
            union = 0
            for m in fam:
                union |= m
            if union == full and any(m in rank_bits for m in fam):
                yield Hypergraph(n, [members_of(m) for m in fam])
        if max_edges is not None and size >= max_edges:
            return
        nxt: dict[bytes, tuple[int, ...]] = {}
        for key in sorted(level):
            fam = level[key]
            present = set(fam)
            for c in candidates:
                if c in present or not all(c & m for m in fam):
                    continue
                child = tuple(sorted(fam + (c,)))
                ck = canonical_form(Hypergraph(n, [members_of(m) for m in child]))
                if ck in nxt or not viable(child):
                    continue
                nxt[ck] = child
        level = nxt
        size += 1


def corpus(n_max: int = 5, max_edges: int = 6, max_rank: int = 4) -> list[Hypergraph]:
    """Isomorph-free members of H_r for ``2 <= r <= max_rank`` and ``n <= n_max``."""
    out = []
    for r in range(2, max_rank + 1):
        for n in range(2, n_max + 1):
            out.extend(enumerate_H_r(r, n, max_edges=max_edges))
    return out


# --------------------------------------------------------------------------
# extremal orders


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("HYPERCRIT_THREADS", "1")))
    except ValueError:
        return 1


def classify_all(hs: list[Hypergraph]) -> list[ClassMembership]:
    workers = _workers()
    if workers == 1 or len(hs) < 64:
        return [classify(h) for h in hs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(classify, hs, chunksize=32))


@dataclass(frozen=True)
class ExtremalRecord:
    class_index: int
    rank: int
    n_max_searched: int
    best_order: int
    witness: Hypergraph | None
    exhaustive: bool
    mode: str = "exhaustive"

    def to_json(self) -> dict:
        return {
            "best_order": self.best_order,
            "class_index": self.class_index,
            "exhaustive": self.exhaustive,
            "mode": self.mode,
            "n_max_searched": self.n_max_searched,
            "rank": self.rank,
            "witness": None if self.witness is None else {"n": self.witness.n, "edges": self.witness.to_lists()},
        }


def _witness_pool(r: int) -> list[Hypergraph]:
    """Known members of the classes at rank ``r``: catalog entries plus
    rank lifts and minimalisations of the pool one rank down."""
    pool = [complete_uniform(r)]
    if r == 2:
        pool.append(triangle())
    if r == 3:
        pool += [fano(), paper_example_4v()]
    if r > 2:
        for h in _witness_pool(r - 1):
            try:
                lifted, _ = rank_lift(h)
            except PreconditionError:
                continue
            pool.append(lifted)
    extra = []
    for h in pool:
        try:
            extra.append(minimalize(h)[0])
        except PreconditionError:
            pass
    seen = set()
    out = []
    for h in pool + extra:
        key = canonical_form(h) if h.n <= CANONICAL_MAX_N else (h.n, h.edge_set)
        if key not in seen:
            seen.add(key)
            out.append(h)
    return out


def extremal_order(
    i: int,
    r: int,
    n_max: int,
    witness_only: bool = False,
    uniform: bool = False,
    time_budget: float | None = None,
) -> ExtremalRecord:
    """Largest order of a class-``i`` hypergraph of rank ``r`` with at most ``n_max`` vertices.

    Exhaustive mode scans ``n = n_max`` down to ``r`` and stops at the first
    order with a member. Classes 1 to 3 only contain uniform hypergraphs and
    every class lies inside the 1-vertex-critical one, so the enumeration
    uses the uniform restriction for ``i <= 3`` and the quasidegree prefilter
    throughout; neither loses a member. If ``time_budget`` (seconds) runs
    out the record is returned with ``exhaustive=False``. ``uniform`` restricts
    to r-uniform members (the uniform variants of the extremal orders).
    """
    if i not in range(1, 6):
        raise HypergraphError("class index must be in 1..5")
    if r < 2:
        raise HypergraphError("rank must be at least 2")
    if witness_only:
        best = None
        for h in _witness_pool(r):
            if h.n > n_max or (uniform and len({len(e) for e in h.edges}) > 1):
                continue
            m = classify(h)
            if m[i] and m.rank == r and (best is None or h.n > best.n):
                best = h
        return ExtremalRecord(i, r, n_max, best.n if best else 0, best, False, "witness-only")
    if r > 3:
        raise HypergraphError("exhaustive mode supports r in {2, 3}; use witness_only for larger ranks")
    if n_max > MAX_SEARCH_N:
        raise HypergraphError(f"n_max must be <= {MAX_SEARCH_N}")
    start = time.monotonic()
    for n in range(n_max, r - 1, -1):
        found = None
        for h in enumerate_H_r(r, n, uniform=uniform or i <= 3, vertex_critical_prefilter=True):
            if time_budget is not None and time.monotonic() - start > time_budget:
                return ExtremalRecord(i, r, n_max, 0, None, False)
            if classify(h)[i]:
                found = h
                break
        if found is not None:
            return ExtremalRecord(i, r, n_max, n, found, True)
    return ExtremalRecord(i, r, n_max, 0, None, True)


# --------------------------------------------------------------------------
# nesting


@dataclass
class NestingReport:
    rank: int
    n_max: int
    checked: int = 0
    violations: list[Hypergraph] = field(default_factory=list)
    separators: dict[int, Hypergraph] = field(default_factory=dict)
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "n_max": self.n_max,
            "rank": self.rank,
            "separators": {f"H{i + 1}-H{i}": s.to_lists() for i, s in sorted(self.separators.items())},
            "violations": [v.to_lists() for v in self.violations],
        }


def verify_nesting(r: int, n_max: int, max_edges: int | None = None) -> NestingReport:
    """Check ``H1 <= H2 <= H3 <= H4 <= H5`` on every enumerated hypergraph.

    ``separators[i]`` holds a member of class ``i + 1`` outside class ``i``
    when one turns up.
    """
    report = NestingReport(r, n_max)
    hs = [h for n in range(2, n_max + 1) for h in enumerate_H_r(r, n, max_edges=max_edges)]
    for h, m in zip(hs, classify_all(hs)):
        report.checked += 1
        if not nesting_holds(m):
            report.violations.append(h)
        for i in range(1, 5):
            if m[i + 1] and not m[i] and i not in report.separators:
                report.separators[i] = h
    return report


def write_search_stream(fp: IO[str], r: int, n_max: int, uniform: bool = False,
                        vertex_critical_prefilter: bool = False) -> dict:
    """Write one JSON line per enumerated hypergraph (with its class flags)
    for ``n = r..n_max``, then a summary line. Returns the summary."""
    counts = [0] * 5
    total = 0
    for n in range(r, n_max + 1):
        for h in enumerate_H_r(r, n, uniform=uniform, vertex_critical_prefilter=vertex_critical_prefilter):
            m = classify(h)
            total += 1
            for i in range(5):
                counts[i] += m.flags[i]
            fp.write(json.dumps({"hypergraph": {"n": h.n, "edges": h.to_lists()}, "membership": m.to_json()},
                                sort_keys=True) + "\n")
    summary = {
        "summary": {
            "class_counts": {f"H{i + 1}": c for i, c in enumerate(counts)},
            "exhaustive": True,
            "n_max": n_max,
            "rank": r,
            "total": total,
            "uniform": uniform,
            "vertex_critical_prefilter": vertex_critical_prefilter,
        }
    }
    fp.write(json.dumps(summary, sort_keys=True) + "\n")
    return summary["summary"]
