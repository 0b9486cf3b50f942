import io
import itertools
import json

import pytest

from conftest import hg
from hypercrit.criticality import classify
from hypercrit.hypergraph import (
    Hypergraph,
    HypergraphError,
    canonical_form,
    degree_profile,
    is_intersecting,
    is_isomorphic,
    rank_profile,
)
from hypercrit.search import (
    CATALOG_NAMES,
    catalog,
    classify_all,
    complete_uniform,
    corpus,
    enumerate_H_r,
    extremal_order,
    fano,
    star,
    triangle,
    verify_nesting,
    write_search_stream,
)


def orbit_key(h):
    # independent of canonical_form: least sorted edge list over all relabellings
    return min(
        tuple(sorted(tuple(sorted(p[v] for v in e)) for e in h.edges))
        for p in itertools.permutations(range(h.n))
    )


def brute_force_classes(r, n):
    subsets = [c for k in range(2, r + 1) for c in itertools.combinations(range(n), k)]
    keys = set()
    for m in range(1, len(subsets) + 1):
        for edges in itertools.combinations(subsets, m):
            h = Hypergraph(n, edges)
            if max(map(len, edges)) != r or not is_intersecting(h):
                continue
            if degree_profile(h).isolated:
                continue
            keys.add(orbit_key(h))
    return keys


class TestEnumerate:
    def test_r2_n3(self, tri):
        out = list(enumerate_H_r(2, 3))
        assert len(out) == 2
        assert any(is_isomorphic(h, tri) for h in out)
        assert any(is_isomorphic(h, star(2)) for h in out)

    def test_r2_n4_only_the_star(self):
        out = list(enumerate_H_r(2, 4))
        assert len(out) == 1 and is_isomorphic(out[0], star(3))

    def test_r3_n7_uniform_contains_fano(self):
        target = canonical_form(fano())
        assert any(canonical_form(h) == target for h in enumerate_H_r(3, 7, uniform=True))

    @pytest.mark.parametrize("r, n", [(2, 3), (2, 4), (3, 3), (3, 4)])
    def test_count_matches_brute_force(self, r, n):
        got = {orbit_key(h) for h in enumerate_H_r(r, n)}
        assert got == brute_force_classes(r, n)
        assert len(list(enumerate_H_r(r, n))) == len(got)

    @pytest.mark.parametrize("r, n", [(2, 5), (3, 5), (3, 6)])
    def test_no_duplicate_forms(self, r, n):
        forms = [canonical_form(h) for h in enumerate_H_r(r, n)]
        assert len(forms) == len(set(forms))

    @pytest.mark.parametrize("r, n", [(3, 4), (3, 5), (3, 6)])
    def test_members_are_well_formed(self, r, n):
        for h in enumerate_H_r(r, n):
            rp = rank_profile(h)
            assert rp.rank == r and rp.min_edge_size >= 2
            assert is_intersecting(h) and not degree_profile(h).isolated

    @pytest.mark.parametrize("r, n", [(3, 5), (3, 6)])
    def test_prefilter_keeps_every_vertex_critical_member(self, r, n):
        full = {canonical_form(h) for h in enumerate_H_r(r, n) if classify(h).in_H5}
        pruned = {canonical_form(h) for h in enumerate_H_r(r, n, vertex_critical_prefilter=True)
                  if classify(h).in_H5}
        assert full == pruned

    def test_deterministic_order(self):
        assert list(enumerate_H_r(3, 5)) == list(enumerate_H_r(3, 5))

    def test_errors(self):
        with pytest.raises(HypergraphError):
            list(enumerate_H_r(1, 3))
        with pytest.raises(HypergraphError):
            list(enumerate_H_r(3, 13))
        assert list(enumerate_H_r(3, 2)) == []

    def test_corpus(self, small_corpus):
        assert len(small_corpus) == 1086
        assert all(len(h) <= 6 and h.n <= 5 for h in small_corpus)
        assert len({canonical_form(h) for h in small_corpus}) == len(small_corpus)
        assert corpus(3, 3, 2) == [h for h in small_corpus if h.n <= 3 and len(h) <= 3 and rank_profile(h).rank == 2]


class TestExtremal:
    @pytest.mark.parametrize("i", range(1, 6))
    def test_rank2(self, i, tri):
        rec = extremal_order(i, 2, 5)
        assert rec.best_order == 3 and rec.exhaustive
        assert is_isomorphic(rec.witness, tri)

    def test_triangle_is_three_chromatic(self):
        rec = extremal_order(1, 2, 3)
        assert rec.best_order == 3

    def test_witness_only(self):
        rec = extremal_order(5, 3, 7, witness_only=True)
        assert rec.best_order == 7 and not rec.exhaustive
        assert classify(rec.witness).in_H5

    def test_witness_only_rank4(self):
        rec = extremal_order(4, 4, 12, witness_only=True)
        assert rec.best_order >= 7 and not rec.exhaustive
        assert classify(rec.witness).in_H4 and classify(rec.witness).rank == 4

    def test_fano_found_exhaustively(self):
        rec = extremal_order(1, 3, 7)
        assert rec.best_order == 7 and rec.exhaustive
        assert classify(rec.witness).in_H1

    def test_uniform_h4_matches_h5(self):
        # the uniform and general extremal orders agree on the searched range
        u4 = extremal_order(4, 3, 7, uniform=True)
        h5 = extremal_order(5, 3, 7)
        assert u4.exhaustive and h5.exhaustive
        assert u4.best_order == h5.best_order == 7

    def test_time_budget(self):
        rec = extremal_order(5, 3, 7, time_budget=0.0)
        assert not rec.exhaustive

    def test_errors(self):
        with pytest.raises(HypergraphError):
            extremal_order(0, 2, 5)
        with pytest.raises(HypergraphError):
            extremal_order(1, 1, 5)
        with pytest.raises(HypergraphError):
            extremal_order(1, 4, 8)

    def test_json(self):
        obj = extremal_order(2, 2, 4).to_json()
        assert obj["best_order"] == 3 and obj["exhaustive"] is True
        json.dumps(obj)


class TestNesting:
    def test_rank2(self):
        report = verify_nesting(2, 4)
        assert report.ok and report.checked > 0

    def test_rank3_separator(self, ex4):
        report = verify_nesting(3, 5)
        assert report.ok
        sep = report.separators[3]
        m = classify(sep)
        assert m.in_H4 and not m.in_H3
        assert sep.n == 4 and is_isomorphic(sep, ex4)

    def test_vacuous(self):
        report = verify_nesting(2, 2)
        assert report.ok and report.separators == {}

    def test_json(self):
        obj = verify_nesting(3, 4).to_json()
        assert obj["violations"] == [] and "H4-H3" in obj["separators"]


class TestCatalog:
    def test_fano(self):
        entry = catalog("fano")
        h = entry.hypergraph
        assert h.n == 7 and len(h) == 7
        assert degree_profile(h).degrees == (3,) * 7

    def test_complete_uniform(self):
        h = catalog("complete_uniform(3)").hypergraph
        assert h.n == 5 and len(h) == 10 and h == complete_uniform(3)

    def test_four_vertex_example(self, ex4):
        assert catalog("paper_example_4v").hypergraph == ex4

    def test_triangle_and_star(self, tri):
        assert catalog("triangle").hypergraph == tri == triangle()
        assert catalog("star(3)").hypergraph == star(3)

    def test_unknown(self):
        with pytest.raises(KeyError) as info:
            catalog("petersen")
        for name in CATALOG_NAMES:
            assert name in info.value.args[0]


def test_classify_all_matches_classify(small_corpus, monkeypatch):
    sample = small_corpus[::40]
    monkeypatch.setenv("HYPERCRIT_THREADS", "2")
    assert [m.flags for m in classify_all(sample)] == [classify(h).flags for h in sample]


def test_search_stream():
    buf = io.StringIO()
    summary = write_search_stream(buf, 2, 4)
    lines = buf.getvalue().splitlines()
    assert json.loads(lines[-1]) == {"summary": summary}
    assert summary["total"] == len(lines) - 1 == 4
    assert summary["exhaustive"] is True
    first = json.loads(lines[0])
    assert set(first) == {"hypergraph", "membership"}
    assert hg(2, (0, 1)) == Hypergraph(first["hypergraph"]["n"], first["hypergraph"]["edges"])
