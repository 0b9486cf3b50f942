"""Immutable hypergraph values and elementary rewrites.

Vertices are the integers ``0..n-1``. Edges are ``frozenset`` values and a
hypergraph never holds two equal edges. Every rewrite returns a new
``Hypergraph`` together with a :class:`TransformTrace` that can be replayed
on the input to reproduce the output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

Edge = frozenset

CANONICAL_MAX_N = 12


class HypergraphError(ValueError):
    """Raised on malformed hypergraphs or invalid rewrite arguments."""


def edge_key(e: Iterable[int]) -> tuple[int, ...]:
    """Sort key giving the lexicographic order on edges used everywhere."""
    return tuple(sorted(e))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class Hypergraph:
    """A finite simple hypergraph on vertices ``0..n-1``.

    Edges keep their construction order; equality and hashing ignore it.
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {n}")
        normalized: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()
        for raw in edges:
            e = frozenset(raw)
            if not e:
                raise HypergraphError("edges must be nonempty")
            bad = [v for v in e if not (isinstance(v, int) and 0 <= v < n)]
            if bad:
                raise HypergraphError(f"edge {edge_key(e)} has vertices outside 0..{n - 1}: {bad}")
            if e in seen:
                raise HypergraphError(f"duplicate edge {edge_key(e)}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __reduce__(self):
        return (Hypergraph, (self.n, [tuple(sorted(e)) for e in self.edges]))

    @cached_property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Bitmask of each edge, aligned with ``edges``."""
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[frozenset[int], ...]:
        return tuple(sorted(self.edges, key=edge_key))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        try:
            return frozenset(e) in self.edge_set  # type: ignore[arg-type]
        except TypeError:
            return False

    def __repr__(self) -> str:
        body = ", ".join("".join(str(v) if v < 10 else f"({v})" for v in edge_key(e)) for e in self.sorted_edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"

    def to_lists(self) -> list[list[int]]:
        """Edges as sorted vertex lists in lexicographic order."""
        return [list(edge_key(e)) for e in self.sorted_edges]

    def incident(self, v: int) -> list[frozenset[int]]:
        return [e for e in self.edges if v in e]


# --------------------------------------------------------------------------
# profiles and structural queries


@dataclass(frozen=True)
class RankProfile:
    rank: int
    min_edge_size: int
    is_uniform: bool


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    isolated: tuple[int, ...]


@dataclass(frozen=True)
class MembershipReport:
    in_H_r: bool
    violations: tuple[tuple, ...] = ()


def rank_profile(h: Hypergraph) -> RankProfile:
    if not h.edges:
        raise HypergraphError("rank undefined: hypergraph has no edges")
    sizes = [len(e) for e in h.edges]
    return RankProfile(rank=max(sizes), min_edge_size=min(sizes), is_uniform=min(sizes) == max(sizes))


def rank(h: Hypergraph) -> int:
    return rank_profile(h).rank


def degree_profile(h: Hypergraph) -> DegreeProfile:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return DegreeProfile(
        degrees=tuple(deg),
        min_degree=min(deg) if deg else 0,
        isolated=tuple(v for v, d in enumerate(deg) if d == 0),
    )


def overlapping(e: Iterable[int], f: Iterable[int]) -> bool:
    """True when the two edges share at least two vertices."""
    return len(frozenset(e) & frozenset(f)) >= 2


def disjoint_pair(h: Hypergraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The lexicographically first pair of disjoint edges, if any."""
    edges = h.sorted_edges
    masks = [mask_of(e) for e in edges]
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if not masks[i] & masks[j]:
                return edges[i], edges[j]
    return None


def is_intersecting(h: Hypergraph) -> bool:
    return disjoint_pair(h) is None


def validate_membership(h: Hypergraph) -> MembershipReport:
    """Report whether ``h`` lies in the class of intersecting hypergraphs
    with all edges of size at least two and no isolated vertex."""
    violations: list[tuple] = []
    if not h.edges:
        violations.append(("no_edges",))
    for e in h.sorted_edges:
        if len(e) < 2:
            violations.append(("small_edge", edge_key(e)))
    for v in degree_profile(h).isolated:
        violations.append(("isolated_vertex", v))
    edges = h.sorted_edges
    masks = [mask_of(e) for e in edges]
    for i, j in itertools.combinations(range(len(edges)), 2):
        if not masks[i] & masks[j]:
            violations.append(("disjoint_pair", edge_key(edges[i]), edge_key(edges[j])))
    return MembershipReport(in_H_r=not violations, violations=tuple(violations))


def connected_components(h: Hypergraph) -> list[list[int]]:
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        first, *rest = sorted(e)
        for v in rest:
            a, b = find(first), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


# --------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class AddEdge:
    edge: tuple[int, ...]
    kind: str = field(default="add_edge", init=False)


@dataclass(frozen=True)
class DeleteEdge:
    edge: tuple[int, ...]
    kind: str = field(default="delete_edge", init=False)


@dataclass(frozen=True)
class ShrinkEdge:
    """``edge`` becomes ``edge - {vertex}``; ``merged`` marks that the
    result already existed, so only one copy survives."""

    edge: tuple[int, ...]
    vertex: int
    result: tuple[int, ...]
    merged: bool = False
    kind: str = field(default="shrink_edge", init=False)


@dataclass(frozen=True)
class AddVertex:
    index: int
    kind: str = field(default="add_vertex", init=False)


@dataclass(frozen=True)
class DeleteVertex:
    """Removes an isolated vertex; every larger index shifts down by one."""

    index: int
    kind: str = field(default="delete_vertex", init=False)


Step = Union[AddEdge, DeleteEdge, ShrinkEdge, AddVertex, DeleteVertex]


@dataclass(frozen=True)
class TransformTrace:
    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "TransformTrace") -> "TransformTrace":
        return TransformTrace(self.steps + other.steps)

    def vertex_map(self, n: int) -> dict[int, int | None]:
        """Old index -> new index (``None`` if deleted) for vertices ``0..n-1``
        of the input, following every vertex deletion in the trace."""
        current = list(range(n))
        for s in self.steps:
            if isinstance(s, AddVertex):
                current.append(-1)
            elif isinstance(s, DeleteVertex):
                del current[s.index]
        out: dict[int, int | None] = dict.fromkeys(range(n))
        for new, old in enumerate(current):
            if old >= 0:
                out[old] = new
        return out

    def to_records(self) -> list[dict]:
        records = []
        for s in self.steps:
            rec = {"op": s.kind}
            for name in ("edge", "vertex", "result", "merged", "index"):
                if hasattr(s, name):
                    val = getattr(s, name)
                    rec[name] = list(val) if isinstance(val, tuple) else val
            records.append(rec)
        return records

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "TransformTrace":
        steps: list[Step] = []
        for rec in records:
            op = rec["op"]
            if op == "add_edge":
                steps.append(AddEdge(tuple(rec["edge"])))
            elif op == "delete_edge":
                steps.append(DeleteEdge(tuple(rec["edge"])))
            elif op == "shrink_edge":
                steps.append(ShrinkEdge(tuple(rec["edge"]), rec["vertex"], tuple(rec["result"]), rec["merged"]))
            elif op == "add_vertex":
                steps.append(AddVertex(rec["index"]))
            elif op == "delete_vertex":
                steps.append(DeleteVertex(rec["index"]))
            else:
                raise HypergraphError(f"unknown trace op {op!r}")
        return cls(tuple(steps))


class Editor:
    """Mutable working copy that records every rewrite it performs.

    Transforms drive an editor and freeze it with :meth:`result`; replay
    feeds recorded steps back through :meth:`apply`.
    """

    def __init__(self, h: Hypergraph) -> None:
        self.n = h.n
        self.edges: list[frozenset[int]] = list(h.edges)
        self.steps: list[Step] = []

    def snapshot(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)

    def result(self) -> tuple[Hypergraph, TransformTrace]:
        return self.snapshot(), TransformTrace(tuple(self.steps))

    def _index(self, e: frozenset[int]) -> int:
        try:
            return self.edges.index(e)
        except ValueError:
            raise HypergraphError(f"edge {edge_key(e)} not present") from None

    def add_edge(self, e: Iterable[int]) -> None:
        e = frozenset(e)
        if e in self.edges:
            raise HypergraphError(f"edge {edge_key(e)} already present")
        if not e or any(not 0 <= v < self.n for v in e):
            raise HypergraphError(f"invalid edge {edge_key(e)}")
        self.edges.append(e)
        self.steps.append(AddEdge(edge_key(e)))

    def delete_edge(self, e: Iterable[int]) -> None:
        e = frozenset(e)
        del self.edges[self._index(e)]
        self.steps.append(DeleteEdge(edge_key(e)))

    def shrink(self, e: Iterable[int], v: int) -> frozenset[int]:
        e = frozenset(e)
        i = self._index(e)
        if v not in e:
            raise HypergraphError(f"vertex {v} not in edge {edge_key(e)}")
        new = e - {v}
        if not new:
            raise HypergraphError(f"shrinking {edge_key(e)} at {v} leaves an empty edge")
        merged = new in self.edges
        if merged:
            del self.edges[i]
        else:
            self.edges[i] = new
        self.steps.append(ShrinkEdge(edge_key(e), v, edge_key(new), merged))
        return new

    def add_vertex(self) -> int:
        self.n += 1
        self.steps.append(AddVertex(self.n - 1))
        return self.n - 1

    def delete_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} out of range")
        if any(v in e for e in self.edges):
            raise HypergraphError(f"vertex {v} is not isolated")
        self.edges = [frozenset(u - 1 if u > v else u for u in e) for e in self.edges]
        self.n -= 1
        self.steps.append(DeleteVertex(v))

    def apply(self, step: Step) -> None:
        if isinstance(step, AddEdge):
            self.add_edge(step.edge)
        elif isinstance(step, DeleteEdge):
            self.delete_edge(step.edge)
        elif isinstance(step, ShrinkEdge):
            self.shrink(step.edge, step.vertex)
        elif isinstance(step, AddVertex):
            if self.add_vertex() != step.index:
                raise HypergraphError("trace out of sync: vertex index mismatch")
        elif isinstance(step, DeleteVertex):
            self.delete_vertex(step.index)
        else:
            raise HypergraphError(f"unknown step {step!r}")


def replay(h: Hypergraph, trace: TransformTrace) -> Hypergraph:
    ed = Editor(h)
    for s in trace.steps:
        ed.apply(s)
    return ed.snapshot()


# --------------------------------------------------------------------------
# rewrites


def _require_edge(h: Hypergraph, e: Iterable[int]) -> frozenset[int]:
    e = frozenset(e)
    if e not in h.edge_set:
        raise HypergraphError(f"edge {edge_key(e)} is not an edge of the hypergraph")
    return e


def shrink_edge(h: Hypergraph, e: Iterable[int], v: int) -> tuple[Hypergraph, TransformTrace]:
    """Replace ``e`` by ``e - {v}``. Vertices are never removed."""
    e = _require_edge(h, e)
    if v not in e:
        raise HypergraphError(f"vertex {v} not in edge {edge_key(e)}")
    ed = Editor(h)
    ed.shrink(e, v)
    return ed.result()


def add_edge(h: Hypergraph, e: Iterable[int]) -> tuple[Hypergraph, TransformTrace]:
    ed = Editor(h)
    ed.add_edge(e)
    return ed.result()


def delete_edges(h: Hypergraph, es: Iterable[Iterable[int]]) -> tuple[Hypergraph, TransformTrace]:
    """Delete edges and then every vertex left isolated, re-indexing densely.

    Only vertices that lose their last edge are removed; vertices that were
    isolated beforehand stay.
    """
    targets = [_require_edge(h, e) for e in es]
    ed = Editor(h)
    touched: set[int] = set()
    for e in sorted(set(targets), key=edge_key):
        ed.delete_edge(e)
        touched |= e
    used = set().union(*ed.edges) if ed.edges else set()
    for v in sorted(touched - used, reverse=True):
        ed.delete_vertex(v)
    return ed.result()


def vertex_delete_and_shrink(h: Hypergraph, v: int) -> tuple[Hypergraph, TransformTrace]:
    """Remove ``v`` from the universe, shrinking every edge through it.

    Edges reduced to nothing disappear and duplicates merge.
    """
    if not 0 <= v < h.n:
        raise HypergraphError(f"vertex {v} out of range 0..{h.n - 1}")
    ed = Editor(h)
    for e in sorted((e for e in h.edges if v in e), key=edge_key):
        if len(e) == 1:
            ed.delete_edge(e)
        else:
            ed.shrink(e, v)
    ed.delete_vertex(v)
    return ed.result()


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of ``h`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(h.n)):
        raise HypergraphError("perm must be a permutation of 0..n-1")
    return Hypergraph(h.n, [frozenset(perm[v] for v in e) for e in h.edges])


# --------------------------------------------------------------------------
# canonical form


def _refine(n: int, masks: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement on the vertex/edge incidence structure.

    Colours are renumbered from sorted signatures so the result depends only
    on the isomorphism type of (hypergraph, initial colouring).
    """
    while True:
        edge_sig = [(bin(m).count("1"), tuple(sorted(colors[v] for v in members_of(m)))) for m in masks]
        sig = [
            (colors[v], tuple(sorted(edge_sig[i] for i, m in enumerate(masks) if m >> v & 1)))
            for v in range(n)
        ]
        order = sorted(set(sig))
        rank_of = {s: i for i, s in enumerate(order)}
        new = [rank_of[s] for s in sig]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _encode(n: int, masks: Sequence[int], colors: Sequence[int]) -> tuple[int, ...]:
    # colors is a discrete colouring: vertex v is relabelled colors[v]
    out = []
    for m in masks:
        nm = 0
        for v in members_of(m):
            nm |= 1 << colors[v]
        out.append(nm)
    return tuple(sorted(out))


def canonical_form(h: Hypergraph) -> bytes:
    """Labeling-invariant byte string: equal iff the hypergraphs are isomorphic.

    Individualisation/refinement search; the minimum relabelled encoding over
    all leaves is taken. Capped at ``CANONICAL_MAX_N`` vertices.
    """
    if h.n > CANONICAL_MAX_N:
        raise HypergraphError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {h.n}")
    n, masks = h.n, h.masks
    best: tuple[int, ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, masks, colors)
        if len(set(colors)) == n:
            code = _encode(n, masks, colors)
            if best is None or code < best:
                best = code
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried: set[tuple[int, ...]] = set()
        for v in range(n):
            if colors[v] == target:
                # twins (same incident edges) are swapped by an automorphism
                inc = tuple(i for i, m in enumerate(masks) if m >> v & 1)
                if inc in tried:
                    continue
                tried.add(inc)
                # individualise v: it sorts before the rest of its cell
                split = [2 * c + (1 if c == target and u != v else 0) if c <= target else 2 * c + 1
                         for u, c in enumerate(colors)]
                search(split)

    search([0] * n)
    body = b"" if best is None else b",".join(b"%x" % m for m in best)
    return b"%d:%d:" % (n, len(masks)) + body


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    return a.n == b.n and len(a) == len(b) and canonical_form(a) == canonical_form(b)
