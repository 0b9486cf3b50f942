"""Brute-force reference computations, independent of the package solvers."""

from itertools import combinations, product


def edges_of(h):
    return [set(e) for e in h.edges]


def tau_bf(h):
    edges = edges_of(h)
    for k in range(h.n + 1):
        for t in combinations(range(h.n), k):
            if all(e & set(t) for e in edges):
                return k
    raise AssertionError("no transversal")


def min_transversals_bf(h):
    k = tau_bf(h)
    edges = edges_of(h)
    return [t for t in combinations(range(h.n), k) if all(e & set(t) for e in edges)]


def alpha_bf(h):
    edges = edges_of(h)
    for k in range(len(edges), 0, -1):
        for sub in combinations(edges, k):
            if all(not (a & b) for a, b in combinations(sub, 2)):
                return k
    return 0


def qd_bf(h, v):
    inc = [e for e in edges_of(h) if v in e]
    for k in range(len(inc), 0, -1):
        for sub in combinations(inc, k):
            if all(a & b == {v} for a, b in combinations(sub, 2)):
                return k
    return 0


def colorable_bf(h, k):
    edges = edges_of(h)
    for colors in product(range(k), repeat=h.n):
        if all(len({colors[v] for v in e}) > 1 for e in edges):
            return True
    return False
