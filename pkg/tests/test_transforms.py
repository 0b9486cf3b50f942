import pytest

from conftest import hg
from hypercrit import transforms
from hypercrit.criticality import (
    PreconditionError,
    classify,
    is_1_special,
    is_edge_critical,
    is_edge_critical_definitional,
    is_maximal_1_special_definitional,
    is_vertex_critical_definitional,
    minimal_edge_removal_check,
)
from hypercrit.hypergraph import Hypergraph, is_isomorphic, rank_profile, replay
from hypercrit.search import enumerate_H_r
from hypercrit.solvers import ConstructionInapplicable, quasidegree
from hypercrit.transforms import (
    DegenerateShrink,
    minimalize,
    rank_lift,
    saturate,
    shrink_to_edge_critical,
    uniformize_extend,
)


class TestSaturate:
    def test_unchanged(self, tri, fano_plane):
        for h in (tri, fano_plane):
            out, trace = saturate(h)
            assert out == h and len(trace) == 0

    def test_k35_minus_edge_is_not_special(self, k35):
        # the complement {3, 4} of the removed edge hits every other triple
        h = Hypergraph(5, k35.edges[1:])
        with pytest.raises(PreconditionError) as info:
            saturate(h)
        assert info.value.witness == (3, 4)

    def test_fano_minus_line(self, fano_plane):
        h = Hypergraph(7, fano_plane.edges[1:])
        out, trace = saturate(h)
        assert out == fano_plane
        assert [s.edge for s in trace.steps] == [(0, 1, 2)]
        assert is_maximal_1_special_definitional(out)
        assert replay(h, trace) == out

    def test_precondition(self, ex4):
        with pytest.raises(PreconditionError):
            saturate(ex4)

    @pytest.mark.parametrize("n, special, grown", [(5, 1, 0), (6, 18, 13)])
    def test_uniform_rank3(self, n, special, grown):
        # every 1-special 3-uniform family on n vertices
        counts = [0, 0]
        for h in enumerate_H_r(3, n, uniform=True):
            if not is_1_special(h)[0]:
                continue
            out, trace = saturate(h)
            assert is_maximal_1_special_definitional(out) and out.n == h.n
            assert replay(h, trace) == out
            counts[0] += 1
            counts[1] += len(trace) > 0
        assert counts == [special, grown]


class TestShrink:
    def test_unchanged(self, fano_plane, ex4):
        for h in (fano_plane, ex4):
            out, trace = shrink_to_edge_critical(h)
            assert out == h and len(trace) == 0

    def test_fano_with_overlapping_edge(self, fano_plane):
        h = Hypergraph(7, fano_plane.edges + ((0, 1, 2, 3),))
        assert classify(h).in_H5 and not classify(h).in_H4
        out, trace = shrink_to_edge_critical(h)
        # {0,1,2,3} loses 3 and merges into the line {0,1,2}
        assert out == fano_plane
        assert trace.steps[0].merged
        assert is_edge_critical_definitional(out)
        assert rank_profile(out).rank <= 4 and out.n == h.n

    def test_precondition(self, star2):
        with pytest.raises(PreconditionError):
            shrink_to_edge_critical(star2)

    def test_degenerate_shrink(self, star2, monkeypatch):
        # force the loop onto an input whose 2-edge would collapse
        monkeypatch.setattr(transforms, "is_vertex_critical", lambda h: (True, None))
        with pytest.raises(DegenerateShrink) as info:
            shrink_to_edge_critical(star2)
        assert len(info.value.trace) == 0


class TestRankLift:
    def test_triangle_case1(self, tri):
        out, report = rank_lift(tri)
        assert report.case_used == 1
        assert out == hg(6, (0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5))
        assert report.output_rank == 3 and rank_profile(out).is_uniform
        assert is_edge_critical_definitional(out)
        assert replay(tri, report.trace) == out

    def test_triangle_case1_matches_description(self, tri):
        expected = hg(6, (0, 1, 3), (1, 2, 4), (0, 2, 5), (3, 4, 5))
        assert is_isomorphic(rank_lift(tri)[0], expected)

    def test_fano_case2(self, fano_plane):
        out, report = rank_lift(fano_plane)
        assert report.case_used == 2
        assert out == hg(9, (0, 1, 2, 7), (0, 3, 4, 8), (5, 6, 7, 8), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))
        assert report.survivors_of_xy == ("x", "y")
        assert report.step1_shrinks == () and report.step2_shrinks == ()
        assert is_edge_critical_definitional(out)
        assert out.n >= 8

    def test_four_vertex_example_case1(self, ex4):
        out, report = rank_lift(ex4)
        assert report.case_used == 1
        assert out == hg(8, (0, 1, 2, 4), (0, 3, 5), (1, 3, 6), (2, 3, 7), (4, 5, 6, 7))
        assert report.output_rank == 4
        assert is_edge_critical_definitional(out)

    def test_case2_mixed_rank(self):
        # five edges with rank 3, so the pivot's vertex 0 has degree 3
        h = hg(5, (0, 1, 2), (0, 3, 4), (1, 3), (1, 4), (2, 3, 4))
        assert classify(h).in_H4
        out, report = rank_lift(h)
        assert report.case_used == 2 and report.new_vertices == (5, 6)
        assert out == hg(7, (0, 1, 2, 5), (0, 3, 4), (1, 3, 6), (2, 3, 4), (4, 5, 6))
        assert report.output_rank == 4
        assert is_edge_critical_definitional(out)
        assert replay(h, report.trace) == out

    def test_case2_k35_loses_x(self, k35):
        out, report = rank_lift(k35)
        assert report.case_used == 2
        assert len(report.step1_shrinks) == 5 and report.step2_shrinks == ((0, 3, 4, 6),)
        # x is shrunk out of every edge and deleted, so y takes index 5
        assert report.survivors_of_xy == ("y",) and report.new_vertices == (5,)
        assert out == hg(6, (0, 1, 2), (0, 3, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 3, 5),
                         (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5))
        assert report.output_rank == 3
        assert quasidegree(out, 5).qd >= 2
        assert is_edge_critical_definitional(out)
        assert replay(k35, report.trace) == out

    def test_case2_both_steps_keep_xy(self):
        h = hg(7, (0, 1, 2), (0, 1, 3), (0, 1, 6), (0, 3, 4), (0, 3, 6), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6))
        out, report = rank_lift(h)
        assert report.case_used == 2 and report.survivors_of_xy == ("x", "y")
        assert report.step1_shrinks == ((1, 3, 7, 8), (1, 6, 7, 8))
        assert report.step2_shrinks == ((3, 6, 7, 8),)
        assert out == hg(9, (0, 1, 2, 7), (0, 3, 4, 8), (1, 3, 5), (1, 3, 8), (1, 4, 6), (1, 6, 8),
                         (2, 3, 6), (3, 6, 7), (5, 6, 7, 8))
        assert is_edge_critical_definitional(out)
        assert replay(h, report.trace) == out

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_rank3_sweep(self, n):
        # every edge-critical rank-3 family on n vertices
        for h in enumerate_H_r(3, n, vertex_critical_prefilter=True):
            if not is_edge_critical(h)[0]:
                continue
            out, report = rank_lift(h)
            assert is_edge_critical_definitional(out), h
            assert out.n > h.n and report.output_rank <= 4
            new = report.new_vertices
            if len(new) == 1:
                assert quasidegree(out, new[0]).qd >= 2
            assert replay(h, report.trace) == out

    def test_double_lift(self, tri):
        # lifting the lifted triangle: four 3-edges, hence Case 1 again
        once, _ = rank_lift(tri)
        twice, report = rank_lift(once)
        assert report.case_used == 1 and report.output_rank == 4
        assert classify(twice).in_H4

    def test_precondition(self, star2):
        with pytest.raises(PreconditionError):
            rank_lift(star2)

    def test_pivot_must_be_max_edge(self, ex4):
        with pytest.raises(PreconditionError):
            rank_lift(ex4, pivot=(0, 3))

    def test_deterministic(self, fano_plane):
        a, ra = rank_lift(fano_plane)
        b, rb = rank_lift(fano_plane)
        assert a.edges == b.edges and ra == rb


class TestMinimalize:
    def test_fano(self, fano_plane):
        out, trace = minimalize(fano_plane)
        assert out == Hypergraph(7, fano_plane.edges[1:])
        assert [s.edge for s in trace.steps] == [(0, 1, 2)]
        assert is_vertex_critical_definitional(out) and minimal_edge_removal_check(out)

    def test_unchanged(self, tri, ex4):
        for h in (tri, ex4):
            out, trace = minimalize(h)
            assert out == h and len(trace) == 0

    def test_precondition(self, star2):
        with pytest.raises(PreconditionError):
            minimalize(star2)


class TestUniformizeExtend:
    def test_four_vertex_example(self, ex4):
        out, trace = uniformize_extend(ex4, 3)
        assert out == hg(5, (0, 1, 2), (0, 3, 4), (1, 2, 4), (1, 3), (2, 3))
        assert is_vertex_critical_definitional(out)
        assert quasidegree(out, 4).qd == 2
        assert replay(ex4, trace) == out

    def test_uniform_input(self, fano_plane):
        with pytest.raises(PreconditionError):
            # Fano is not minimal
            uniformize_extend(fano_plane, 3)
        with pytest.raises(ConstructionInapplicable):
            uniformize_extend(Hypergraph(7, fano_plane.edges[1:]), 3)

    def test_rank_mismatch(self, ex4):
        with pytest.raises(PreconditionError):
            uniformize_extend(ex4, 4)

    def test_synthetic_from_corpus(self, small_corpus):
        hits = 0
        for h in small_corpus:
            c = classify(h)
            if not c.in_H5 or rank_profile(h).is_uniform or rank_profile(h).rank != 3:
                continue
            try:
                out, _ = uniformize_extend(h)
            except (PreconditionError, ConstructionInapplicable):
                continue
            hits += 1
            assert out.n == h.n + 1 and classify(out).in_H5
        assert hits >= 2
