"""Constructive rewrites between the criticality classes.

Every transform is deterministic: where a choice is open the
lexicographically least qualifying edge (then vertex) is taken. Each one
checks its claimed postconditions and raises ``AssertionError`` if a
postcondition fails, since that would signal a bug rather than bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .criticality import (
    PreconditionError,
    edge_critical_failure,
    is_1_special,
    is_edge_critical,
    is_minimal_vertex_critical,
    is_vertex_critical,
    removable_edges,
    require_H_r,
    vertex_critical_failure,
)
from .hypergraph import (
    Editor,
    Hypergraph,
    HypergraphError,
    TransformTrace,
    degree_profile,
    edge_key,
    is_intersecting,
    mask_of,
    rank_profile,
)
from .solvers import (
    ConstructionInapplicable,
    enumerate_min_transversals,
    quasidegree,
    qd_below_two_without,
    transversal_number,
)


class DegenerateShrink(HypergraphError):
    """A shrink would create a 1-edge; the partial trace is attached."""

    def __init__(self, message: str, trace: TransformTrace):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class RankLiftReport:
    case_used: int
    pivot: tuple[int, ...]
    new_vertices: tuple[int, ...]
    step1_shrinks: tuple[tuple[int, ...], ...]
    step2_shrinks: tuple[tuple[int, ...], ...]
    survivors_of_xy: tuple[str, ...]
    output_rank: int
    trace: TransformTrace

    def to_json(self) -> dict:
        return {
            "case_used": self.case_used,
            "new_vertices": list(self.new_vertices),
            "output_rank": self.output_rank,
            "pivot": list(self.pivot),
            "step1_shrinks": [list(e) for e in self.step1_shrinks],
            "step2_shrinks": [list(e) for e in self.step2_shrinks],
            "survivors_of_xy": list(self.survivors_of_xy),
        }


def saturate(h: Hypergraph) -> tuple[Hypergraph, TransformTrace]:
    """Add non-edge minimum transversals until all of them are edges."""
    ok, w = is_1_special(h)
    if not ok:
        raise PreconditionError("saturate needs a 1-special hypergraph", w)
    r = rank_profile(h).rank
    ed = Editor(h)
    while True:
        current = ed.snapshot()
        missing = [t for t in enumerate_min_transversals(current) if frozenset(t) not in current.edge_set]
        if not missing:
            break
        ed.add_edge(missing[0])
        if transversal_number(ed.snapshot()).tau != r:
            raise AssertionError("saturation changed the transversal number")
    out, trace = ed.result()
    assert out.n == h.n
    return out, trace


def _shrinkable(edges: list[frozenset[int]]) -> tuple[frozenset[int], int] | None:
    """First (edge, vertex) such that every edge through the vertex overlaps
    the edge in two or more vertices."""
    masks = [mask_of(e) for e in edges]
    for e in sorted(edges, key=edge_key):
        em = mask_of(e)
        for u in sorted(e):
            bit = 1 << u
            if not any(em & fm == bit for fm in masks):
                return e, u
    return None


def shrink_to_edge_critical(h: Hypergraph) -> tuple[Hypergraph, TransformTrace]:
    ok, v = is_vertex_critical(h)
    if not ok:
        raise PreconditionError("shrink_to_edge_critical needs a 1-vertex-critical hypergraph", v)
    ed = Editor(h)
    while (target := _shrinkable(ed.edges)) is not None:
        e, u = target
        if len(e) <= 2:
            raise DegenerateShrink(
                f"degenerate shrink: {edge_key(e)} at {u} would leave a 1-edge",
                TransformTrace(tuple(ed.steps)),
            )
        ed.shrink(e, u)
        bad = vertex_critical_failure(ed.snapshot())
        if bad is not None:
            raise AssertionError(f"quasidegree of vertex {bad} dropped below 2 while shrinking")
    out, trace = ed.result()
    assert out.n == h.n and is_edge_critical(out)[0]
    assert rank_profile(out).rank <= rank_profile(h).rank
    return out, trace


def rank_lift(h: Hypergraph, pivot=None) -> tuple[Hypergraph, RankLiftReport]:
    """Build a 1-edge-critical hypergraph of rank at most ``r + 1`` with more vertices.

    ``pivot`` must be an edge of maximum size; by default the
    lexicographically least one is used.
    """
    ok, w = is_edge_critical(h)
    if not ok:
        raise PreconditionError("rank_lift needs a 1-edge-critical hypergraph", w)
    r = rank_profile(h).rank
    if pivot is None:
        pivot = next(e for e in h.sorted_edges if len(e) == r)
    else:
        pivot = frozenset(pivot)
        if pivot not in h.edge_set or len(pivot) != r:
            raise PreconditionError("pivot must be an edge of maximum size", edge_key(pivot))
    deg = degree_profile(h).degrees
    if all(deg[u] == 2 for u in pivot):
        out, report = _lift_case1(h, pivot, r)
    else:
        out, report = _lift_case2(h, pivot, r, deg)

    assert is_intersecting(out), "lifted hypergraph is not intersecting"
    assert edge_critical_failure(out) is None, "lifted hypergraph is not 1-edge-critical"
    assert out.n > h.n
    assert report.output_rank <= r + 1
    if report.case_used == 1:
        assert report.output_rank == r + 1 and out.n == h.n + r + 1 and len(out) == len(h) + 1
    return out, report


def _lift_case1(h: Hypergraph, pivot: frozenset[int], r: int):
    if len(h) != r + 1:
        raise PreconditionError(f"case 1 expects exactly r + 1 = {r + 1} edges, found {len(h)}")
    others = [e for e in h.sorted_edges if e != pivot]
    ed = Editor(h)
    xs = [ed.add_vertex() for _ in range(r + 1)]
    for x, e in zip(xs, [pivot] + others):
        ed.delete_edge(e)
        ed.add_edge(e | {x})
    ed.add_edge(xs)
    out, trace = ed.result()
    report = RankLiftReport(1, edge_key(pivot), tuple(xs), (), (), (), rank_profile(out).rank, trace)
    return out, report


def _lift_case2(h: Hypergraph, pivot: frozenset[int], r: int, deg):
    u = min(v for v in pivot if deg[v] >= 3)
    through_u = [e for e in h.sorted_edges if u in e]
    f = next((g for g in through_u if g & pivot == {u}), None)
    if f is None:
        raise PreconditionError("no edge meets the pivot exactly at the chosen vertex", (edge_key(pivot), u))
    middle = [e for e in through_u if e not in (pivot, f)]

    ed = Editor(h)
    x = ed.add_vertex()
    y = ed.add_vertex()
    new_pivot = pivot | {x}
    new_f = f | {y}
    new_middle = [(e - {u}) | {x, y} for e in middle]
    for old in through_u:
        ed.delete_edge(old)
    # S keeps the order e'_0, e'_1, ..., e'_{d(u)-1}
    S = [new_pivot] + new_middle + [new_f]
    for e in S:
        ed.add_edge(e)

    def shrink_pass(vertex: int, members: list[frozenset[int]]) -> tuple[list[frozenset[int]], list]:
        shrunk = []
        kept = []
        bit = 1 << vertex
        for e in members:
            if vertex in e:
                em = mask_of(e)
                if not any(em & mask_of(g) == bit for g in ed.edges):
                    ed.shrink(e, vertex)
                    shrunk.append(edge_key(e))
                    continue
            kept.append(e)
        return kept, shrunk

    # shrunk edges leave S; S' is what survives step 1 (and always e'_{d-1})
    S_prime, step1 = shrink_pass(x, S)
    _, step2 = shrink_pass(y, S_prime)

    survivors = tuple(name for name, v in (("x", x), ("y", y)) if any(v in e for e in ed.edges))
    assert survivors, "both new vertices vanished"
    for v in sorted((x, y), reverse=True):
        if not any(v in e for e in ed.edges):
            ed.delete_vertex(v)
    out, trace = ed.result()
    new_vertices = tuple(range(h.n, out.n))
    for v in new_vertices:
        assert quasidegree(out, v).qd >= 2
    report = RankLiftReport(2, edge_key(pivot), new_vertices, tuple(step1), tuple(step2),
                            survivors, rank_profile(out).rank, trace)
    return out, report


def minimalize(h: Hypergraph) -> tuple[Hypergraph, TransformTrace]:
    """Delete removable edges (least first) until the hypergraph is minimal
    1-vertex-critical."""
    ok, v = is_vertex_critical(h)
    if not ok:
        raise PreconditionError("minimalize needs a 1-vertex-critical hypergraph", v)
    ed = Editor(h)
    while True:
        removable = removable_edges(ed.snapshot())
        if not removable:
            break
        ed.delete_edge(removable[0])
    out, trace = ed.result()
    assert out.n == h.n and is_minimal_vertex_critical(out)[0]
    return out, trace


def uniformize_extend(h: Hypergraph, r: int | None = None) -> tuple[Hypergraph, TransformTrace]:
    """Grow a minimal 1-vertex-critical hypergraph by one vertex, lengthening a
    short edge.

    Picks the least short edge ``e``, vertex ``u`` in it whose quasidegree
    falls below two without ``e``, and an ``r``-edge ``f`` with
    ``e & f == {u}``; then adds a vertex ``v``, the edge ``(f - {u}) | {v}``
    and replaces ``e`` by ``e | {v}``.
    """
    require_H_r(h)
    rank = rank_profile(h).rank
    if r is None:
        r = rank
    if r != rank:
        raise PreconditionError(f"hypergraph has rank {rank}, not {r}")
    minimal, w = is_minimal_vertex_critical(h)
    if not minimal:
        raise PreconditionError("uniformize_extend needs a minimal 1-vertex-critical hypergraph", w)

    triple = None
    for e in (e for e in h.sorted_edges if len(e) < r):
        for u in sorted(e):
            if not qd_below_two_without(h, e, u):
                continue
            f = next((g for g in h.sorted_edges if len(g) == r and g & e == {u}), None)
            if f is not None:
                triple = (e, u, f)
                break
        if triple:
            break
    if triple is None:
        raise ConstructionInapplicable("construction inapplicable: no short edge with a qualifying r-edge")
    e, u, f = triple

    ed = Editor(h)
    v = ed.add_vertex()
    ed.add_edge((f - {u}) | {v})
    ed.delete_edge(e)
    ed.add_edge(e | {v})
    out, trace = ed.result()

    assert is_intersecting(out)
    assert rank_profile(out).rank == r
    assert vertex_critical_failure(out) is None
    assert degree_profile(out).degrees[v] == 2 and quasidegree(out, v).qd == 2
    return out, trace
