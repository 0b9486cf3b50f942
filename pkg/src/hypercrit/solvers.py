"""Exact solvers for transversals, matchings, quasidegree and colourings.

All searches work on integer bitmasks. Whenever several optimal witnesses
exist, the lexicographically least one is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hypergraph import Hypergraph, HypergraphError, edge_key, is_intersecting, mask_of, members_of


class ConstructionInapplicable(HypergraphError):
    """A constructive procedure's precondition does not hold."""


@dataclass(frozen=True)
class TransversalCertificate:
    tau: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"tau": self.tau, "witness": list(self.witness)}


@dataclass(frozen=True)
class MatchingCertificate:
    alpha_prime: int
    witness: tuple[tuple[int, ...], ...]

    @property
    def matched_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for e in self.witness for v in e))

    def to_json(self) -> dict:
        return {
            "alpha_prime": self.alpha_prime,
            "matched_vertices": list(self.matched_vertices),
            "witness": [list(e) for e in self.witness],
        }


@dataclass(frozen=True)
class QuasidegreeCertificate:
    vertex: int
    qd: int
    witness: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"qd": self.qd, "vertex": self.vertex, "witness": [list(e) for e in self.witness]}


@dataclass(frozen=True)
class ColoringCertificate:
    k: int
    assignment: tuple[int, ...]
    proper: bool

    def to_json(self) -> dict:
        return {"assignment": list(self.assignment), "k": self.k, "proper": self.proper}


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowest(x: int) -> int:
    return (x & -x).bit_length() - 1


# --------------------------------------------------------------------------
# transversals


def _disjoint_lower_bound(edges: list[int]) -> int:
    """Greedy count of pairwise-disjoint edges; each needs its own vertex."""
    used = 0
    count = 0
    for m in sorted(edges, key=_popcount):
        if not m & used:
            used |= m
            count += 1
    return count


def _can_cover(edges: list[int], allowed: int, budget: int) -> bool:
    """Is there a set of at most ``budget`` allowed vertices hitting every edge?"""
    restricted = []
    for m in edges:
        r = m & allowed
        if not r:
            return False
        restricted.append(r)
    return _cover_search(restricted, budget)


def _cover_search(edges: list[int], budget: int) -> bool:
    if not edges:
        return True
    if budget <= 0 or _disjoint_lower_bound(edges) > budget:
        return False
    pivot = min(edges, key=_popcount)
    excluded = 0
    rest = pivot
    while rest:
        v = rest & -rest
        rest ^= v
        remaining = []
        feasible = True
        for m in edges:
            if m & v:
                continue
            r = m & ~excluded
            if not r:
                feasible = False
                break
            remaining.append(r)
        if feasible and _cover_search(remaining, budget - 1):
            return True
        # later branches must avoid v
        excluded |= v
    return False


def _min_cover_size(edges: list[int], n: int) -> int:
    lo = _disjoint_lower_bound(edges) if edges else 0
    for k in range(lo, n + 1):
        if _cover_search(list(edges), k):
            return k
    raise HypergraphError("no transversal exists")  # unreachable for nonempty edges


def transversal_number(h: Hypergraph) -> TransversalCertificate:
    """Minimum transversal with the lexicographically least witness.

    A hypergraph without edges has ``tau = 0`` and an empty witness.
    """
    edges = list(h.masks)
    if not edges:
        return TransversalCertificate(0, ())
    tau = _min_cover_size(edges, h.n)
    chosen: list[int] = []
    uncovered = edges
    last = -1
    for slot in range(tau):
        for v in range(last + 1, h.n):
            bit = 1 << v
            rest = [m for m in uncovered if not m & bit]
            later = ((1 << h.n) - 1) & ~((bit << 1) - 1)
            if _can_cover(rest, later, tau - slot - 1):
                chosen.append(v)
                uncovered = rest
                last = v
                break
    return TransversalCertificate(tau, tuple(chosen))


def is_transversal(h: Hypergraph, vertices) -> bool:
    t = mask_of(vertices)
    return all(m & t for m in h.masks)


def enumerate_min_transversals(h: Hypergraph) -> list[tuple[int, ...]]:
    """Every transversal of size ``tau(h)``, in lexicographic order."""
    edges = list(h.masks)
    if not edges:
        return [()]
    tau = _min_cover_size(edges, h.n)
    found: list[int] = []

    def branch(chosen: int, remaining: list[int], excluded: int, budget: int) -> None:
        if not remaining:
            found.append(chosen)
            return
        if budget == 0 or _disjoint_lower_bound(remaining) > budget:
            return
        pivot = remaining[0]
        options = pivot & ~excluded
        ex = excluded
        while options:
            v = options & -options
            options ^= v
            branch(chosen | v, [m for m in remaining if not m & v], ex, budget - 1)
            ex |= v

    branch(0, edges, 0, tau)
    return sorted(members_of(t) for t in found)


# --------------------------------------------------------------------------
# cliques (used for matchings and quasidegree)


def _max_clique_size(adj: list[int], cand: int, bound_at_least: int = 0) -> int:
    """Size of a maximum clique inside ``cand`` (bitmask over nodes)."""
    best = 0

    def expand(size: int, p: int) -> None:
        nonlocal best
        if not p:
            if size > best:
                best = size
            return
        # greedy colouring bound
        colors = 0
        rest = p
        while rest:
            colors += 1
            q = rest
            while q:
                v = _lowest(q)
                rest &= ~(1 << v)
                q &= ~(1 << v) & ~adj[v]
        if size + colors <= best:
            return
        while p:
            if size + _popcount(p) <= best:
                return
            v = _lowest(p)
            expand(size + 1, p & adj[v])
            p &= ~(1 << v)

    expand(0, cand)
    return best


def _lex_least_clique(adj: list[int], cand: int) -> tuple[int, list[int]]:
    """Maximum clique with the lexicographically least sorted node list."""
    size = _max_clique_size(adj, cand)
    chosen: list[int] = []
    p = cand
    while len(chosen) < size:
        q = p
        while q:
            v = _lowest(q)
            later = p & adj[v] & ~((2 << v) - 1)
            if 1 + _max_clique_size(adj, later) >= size - len(chosen):
                chosen.append(v)
                p = later
                break
            q &= ~(1 << v)
    return size, chosen


def matching_number(h: Hypergraph) -> MatchingCertificate:
    edges = h.sorted_edges
    masks = [mask_of(e) for e in edges]
    k = len(edges)
    # compatibility = disjointness, so a matching is a clique here
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if not masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    size, chosen = _lex_least_clique(adj, (1 << k) - 1)
    return MatchingCertificate(size, tuple(edge_key(edges[i]) for i in chosen))


def is_matching(edges) -> bool:
    masks = [mask_of(e) for e in edges]
    return all(not a & b for a, b in itertools.combinations(masks, 2))


def quasidegree(h: Hypergraph, v: int) -> QuasidegreeCertificate:
    """Largest family of edges through ``v`` meeting pairwise exactly in ``{v}``.

    One incident edge gives ``qd = 1``; no incident edge gives ``qd = 0``.
    """
    if not 0 <= v < h.n:
        raise HypergraphError(f"vertex {v} out of range")
    inc = [e for e in h.sorted_edges if v in e]
    masks = [mask_of(e) for e in inc]
    bit = 1 << v
    k = len(inc)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if masks[i] & masks[j] == bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    size, chosen = _lex_least_clique(adj, (1 << k) - 1)
    return QuasidegreeCertificate(v, size, tuple(edge_key(inc[i]) for i in chosen))


def has_quasidegree_at_least_two(h: Hypergraph, v: int) -> bool:
    """Cheap test for ``qd(v) >= 2``: two edges meeting exactly at ``v``."""
    bit = 1 << v
    inc = [m for m in h.masks if m & bit]
    return any(a & b == bit for a, b in itertools.combinations(inc, 2))


def qd_vanishes_without(h: Hypergraph, e, v: int) -> bool:
    """Strict reading: ``qd(v) == 0`` once ``e`` is removed (no edge left at ``v``)."""
    e = frozenset(e)
    return not any(v in f for f in h.edges if f != e)


def qd_below_two_without(h: Hypergraph, e, v: int) -> bool:
    """Proof-level reading: ``qd(v) < 2`` once ``e`` is removed."""
    e = frozenset(e)
    bit = 1 << v
    inc = [mask_of(f) for f in h.edges if f != e and v in f]
    return not any(a & b == bit for a, b in itertools.combinations(inc, 2))


# --------------------------------------------------------------------------
# colourings


def is_proper_coloring(h: Hypergraph, assignment) -> bool:
    return all(len({assignment[v] for v in e}) > 1 for e in h.edges)


def is_k_colorable(h: Hypergraph, k: int) -> ColoringCertificate | None:
    """Backtracking search for a colouring with no monochromatic edge.

    Colours are ``1..k``. Vertex 0 takes colour 1 and colour ``c + 1`` is
    only opened after colour ``c`` has been used. Returns ``None`` when no
    proper ``k``-colouring exists.
    """
    if k < 1:
        raise HypergraphError("k must be positive")
    n = h.n
    # edges checked once their last vertex is coloured
    closing: list[list[int]] = [[] for _ in range(n)]
    for m in h.masks:
        closing[m.bit_length() - 1].append(m)
    color = [0] * n
    classes = [0] * (k + 1)

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(1, min(used + 1, k) + 1):
            cls = classes[c] | (1 << v)
            if any(m & cls == m for m in closing[v]):
                continue
            color[v] = c
            classes[c] = cls
            if place(v + 1, max(used, c)):
                return True
            classes[c] &= ~(1 << v)
        color[v] = 0
        return False

    if not place(0, 0):
        return None
    return ColoringCertificate(k, tuple(color), True)


def chromatic_number(h: Hypergraph) -> int:
    """Smallest ``k`` admitting a proper colouring (needs every edge of size >= 2)."""
    if any(len(e) < 2 for e in h.edges):
        raise HypergraphError("a 1-edge can never be properly coloured")
    k = 1
    while is_k_colorable(h, k) is None:
        k += 1
    return k


def three_coloring_construct(h: Hypergraph) -> ColoringCertificate:
    """Colour one edge with two colours and everything else with a third.

    The first edge in lexicographic order is used; its 2-colourings are
    tried in order until no edge inside it is monochromatic.
    """
    if any(len(e) < 2 for e in h.edges):
        raise ConstructionInapplicable("construction inapplicable: edge of size < 2")
    if not h.edges:
        raise ConstructionInapplicable("construction inapplicable: no edges")
    if not is_intersecting(h):
        raise ConstructionInapplicable("construction inapplicable: hypergraph is not intersecting")
    base = edge_key(h.sorted_edges[0])
    inside = [e for e in h.edges if e <= set(base)]
    for bits in itertools.product((1, 2), repeat=len(base) - 1):
        colors = dict(zip(base, (1,) + bits))
        if all(len({colors[v] for v in e}) > 1 for e in inside):
            assignment = tuple(colors.get(v, 3) for v in range(h.n))
            proper = is_proper_coloring(h, assignment)
            return ColoringCertificate(3, assignment, proper)
    raise ConstructionInapplicable("construction inapplicable: edges inside the base edge admit no 2-colouring")


def three_coloring(h: Hypergraph) -> ColoringCertificate | None:
    """Constructive 3-colouring, falling back to exact search."""
    try:
        return three_coloring_construct(h)
    except ConstructionInapplicable:
        return is_k_colorable(h, 3)
