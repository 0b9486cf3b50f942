"""Membership tests for the five nested classes of matching-critical
intersecting hypergraphs.

``H1``  3-chromatic and r-uniform
``H2``  maximal 1-special
``H3``  1-special (transversal number equals the rank)
``H4``  1-edge-critical
``H5``  1-vertex-critical

Each predicate comes in a fast characterisation form returning a
``(flag, witness)`` pair, and where useful a definitional form that
recomputes matching numbers after the relevant rewrite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    delete_edges,
    edge_key,
    mask_of,
    rank_profile,
    shrink_edge,
    validate_membership,
    vertex_delete_and_shrink,
)
from .solvers import (
    enumerate_min_transversals,
    has_quasidegree_at_least_two,
    is_k_colorable,
    matching_number,
    qd_below_two_without,
    transversal_number,
)


class PreconditionError(HypergraphError):
    """Input does not satisfy an operation's precondition.

    ``witness`` carries the counterexample found by the failing check.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def require_H_r(h: Hypergraph) -> None:
    report = validate_membership(h)
    if not report.in_H_r:
        raise PreconditionError("hypergraph is not an intersecting member of H_r", report.violations)


@dataclass(frozen=True)
class ClassMembership:
    rank: int
    flags: tuple[bool, bool, bool, bool, bool]
    witnesses: dict = field(default_factory=dict)

    def __getitem__(self, i: int) -> bool:
        """Flag of class ``i`` for ``i`` in 1..5."""
        return self.flags[i - 1]

    @property
    def in_H1(self) -> bool:
        return self.flags[0]

    @property
    def in_H2(self) -> bool:
        return self.flags[1]

    @property
    def in_H3(self) -> bool:
        return self.flags[2]

    @property
    def in_H4(self) -> bool:
        return self.flags[3]

    @property
    def in_H5(self) -> bool:
        return self.flags[4]

    def to_json(self) -> dict:
        out: dict = {"rank": self.rank, "witnesses": self.witnesses}
        for i, flag in enumerate(self.flags, start=1):
            out[f"H{i}"] = flag
        return out


# --------------------------------------------------------------------------
# H3 / H2


def is_1_special(h: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """``tau(h) == rank(h)``; the witness on failure is a smaller transversal."""
    require_H_r(h)
    r = rank_profile(h).rank
    cert = transversal_number(h)
    if cert.tau == r:
        if not rank_profile(h).is_uniform:
            raise AssertionError("a 1-special hypergraph must be uniform")
        return True, None
    return False, cert.witness


def is_maximal_1_special(h: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """1-special with every minimum transversal an edge.

    The witness on failure is a smaller transversal (not 1-special) or a
    minimum transversal that is not an edge.
    """
    special, witness = is_1_special(h)
    if not special:
        return False, witness
    for t in enumerate_min_transversals(h):
        if frozenset(t) not in h.edge_set:
            return False, t
    return True, None


def is_maximal_1_special_definitional(h: Hypergraph) -> bool:
    """Add each missing r-subset of V(h) in turn; the matching number must rise."""
    special, _ = is_1_special(h)
    if not special:
        return False
    r = rank_profile(h).rank
    for s in itertools.combinations(range(h.n), r):
        e = frozenset(s)
        if e in h.edge_set:
            continue
        if matching_number(Hypergraph(h.n, h.edges + (e,))).alpha_prime <= 1:
            return False
    return True


# --------------------------------------------------------------------------
# H4


def edge_critical_failure(h: Hypergraph) -> tuple[tuple[int, ...], int] | None:
    """First ``(e, v)`` with no edge meeting ``e`` exactly in ``{v}``."""
    masks = [(e, mask_of(e)) for e in h.sorted_edges]
    for e, em in masks:
        for v in sorted(e):
            bit = 1 << v
            if not any(em & fm == bit for _, fm in masks):
                return edge_key(e), v
    return None


def is_edge_critical(h: Hypergraph) -> tuple[bool, tuple[tuple[int, ...], int] | None]:
    require_H_r(h)
    failure = edge_critical_failure(h)
    return failure is None, failure


def is_edge_critical_definitional(h: Hypergraph) -> bool:
    """Shrink every edge at every vertex and recompute the matching number."""
    require_H_r(h)
    for e in h.sorted_edges:
        for v in sorted(e):
            shrunk, _ = shrink_edge(h, e, v)
            if matching_number(shrunk).alpha_prime <= 1:
                return False
    return True


# --------------------------------------------------------------------------
# H5


def vertex_critical_failure(h: Hypergraph) -> int | None:
    for v in range(h.n):
        if not has_quasidegree_at_least_two(h, v):
            return v
    return None


def is_vertex_critical(h: Hypergraph) -> tuple[bool, int | None]:
    """``qd(v) >= 2`` for every vertex; the witness is a vertex with ``qd <= 1``."""
    require_H_r(h)
    v = vertex_critical_failure(h)
    return v is None, v


def is_vertex_critical_definitional(h: Hypergraph) -> bool:
    require_H_r(h)
    for v in range(h.n):
        reduced, _ = vertex_delete_and_shrink(h, v)
        if matching_number(reduced).alpha_prime <= 1:
            return False
    return True


def removable_edges(h: Hypergraph) -> list[tuple[int, ...]]:
    """Edges whose deletion leaves a 1-vertex-critical hypergraph on the same vertices."""
    out = []
    for e in h.sorted_edges:
        rest = Hypergraph(h.n, [f for f in h.edges if f != e])
        if rest.edges and vertex_critical_failure(rest) is None:
            out.append(edge_key(e))
    return out


def is_minimal_vertex_critical(h: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """No edge can be deleted while keeping 1-vertex-criticality.

    On minimal inputs also checks that every edge holds a vertex whose
    quasidegree drops below two once that edge is gone.
    """
    ok, v = is_vertex_critical(h)
    if not ok:
        raise PreconditionError("hypergraph is not 1-vertex-critical", v)
    removable = removable_edges(h)
    if removable:
        return False, removable[0]
    for e in h.edges:
        if not any(qd_below_two_without(h, e, u) for u in e):
            raise AssertionError(f"minimal hypergraph with edge {edge_key(e)} lacking a critical vertex")
    return True, None


def minimal_edge_removal_check(h: Hypergraph) -> bool:
    """Definitional minimality: delete each edge (with isolated vertices) and
    test 1-vertex-criticality of what remains."""
    for e in h.sorted_edges:
        rest, trace = delete_edges(h, [e])
        if rest.n == h.n and rest.edges and is_vertex_critical_definitional(rest):
            return False
    return True


# --------------------------------------------------------------------------
# H1


def is_three_chromatic_uniform(h: Hypergraph) -> tuple[bool, object]:
    """Uniform and not 2-colourable; the witness is a 2-colouring or ``"not uniform"``."""
    require_H_r(h)
    if not rank_profile(h).is_uniform:
        return False, "not uniform"
    two = is_k_colorable(h, 2)
    if two is not None:
        return False, two.assignment
    if is_k_colorable(h, 3) is None:
        raise AssertionError("intersecting hypergraph without a 3-colouring")
    return True, None


# --------------------------------------------------------------------------


def classify(h: Hypergraph) -> ClassMembership:
    require_H_r(h)
    r = rank_profile(h).rank
    witnesses: dict = {}

    h1, w = is_three_chromatic_uniform(h)
    if not h1:
        witnesses["H1"] = {"two_coloring": list(w)} if isinstance(w, tuple) else {"reason": w}

    h3, w = is_1_special(h)
    if not h3:
        witnesses["H3"] = {"small_transversal": list(w)}
        h2 = False
        witnesses["H2"] = {"small_transversal": list(w)}
    else:
        h2, w = is_maximal_1_special(h)
        if not h2:
            witnesses["H2"] = {"non_edge_min_transversal": list(w)}

    h4, w = is_edge_critical(h)
    if not h4:
        witnesses["H4"] = {"edge": list(w[0]), "vertex": w[1]}

    h5, w = is_vertex_critical(h)
    if not h5:
        witnesses["H5"] = {"vertex": w}

    flags = (h1, h2, h3, h4, h5)
    return ClassMembership(r, flags, witnesses)


def nesting_holds(m: ClassMembership) -> bool:
    return all(not m.flags[i] or m.flags[i + 1] for i in range(4))
