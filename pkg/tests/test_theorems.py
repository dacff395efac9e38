"""Statement checkers, constructive extractors, and the batch scanner."""

import pytest

from consec_cycles import (
    BadParams,
    Dichotomy,
    Graph,
    HypothesisFailed,
    TheoremId,
    WitnessNotFound,
    check,
    complete,
    complete_minus_matching,
    cycle,
    cycle_blowup,
    cycle_spectrum,
    degree_profile,
    encode_graph6,
    extract_three_connected,
    extract_two_cut,
    find_quasi_diagonal_index,
    induced_subgraph,
    is_2_connected,
    is_3_connected,
    petersen,
    run_stats,
    scan_catalog,
    shortest_nonsep_induced_odd_cycle,
    validate_cycle,
)
from consec_cycles.report import report_to_json

from conftest import (
    blowup_with_pendant_square,
    book_of_k4s,
    glued_k5s,
    pentagon_with_two_hubs,
)


class TestCheck:
    def test_complete_six_main(self):
        v = check(complete(6), TheoremId.MAIN_ODD_CONSEC, 4)
        assert v.hypotheses_met and v.conclusion_holds
        assert v.witness["max_odd_run"] == 2      # exactly ceil(4/2), tight
        assert v.verdict == "holds"

    def test_petersen_below_conjecture_range(self):
        v = check(petersen(), TheoremId.K_CONSECUTIVE, 3)
        assert not v.hypotheses_met
        assert v.witness["max_run"] == 2          # the known boundary case
        v2 = check(petersen(), TheoremId.CONJECTURE_K4, 3)
        assert not v2.hypotheses_met and v2.witness["max_run"] == 2

    def test_complete_exception_branch(self):
        v = check(complete(7), TheoremId.K_CONSECUTIVE, 6)
        assert v.verdict == "excepted" and v.excepted

    def test_min_degree_four_statement(self):
        v = check(complete(5), TheoremId.MIN_DEGREE_FOUR_ODD_PAIR, 1)
        assert v.hypotheses_met and v.conclusion_holds
        v2 = check(petersen(), TheoremId.MIN_DEGREE_FOUR_ODD_PAIR, 1)
        assert not v2.hypotheses_met              # min degree 3

    def test_triangle_statement(self):
        v = check(complete_minus_matching(8, 4), TheoremId.TRIANGLE_CONSEC, 6)
        assert v.hypotheses_met and v.conclusion_holds
        v2 = check(petersen(), TheoremId.TRIANGLE_CONSEC, 2)
        assert not v2.hypotheses_met              # triangle-free

    def test_admissible_statements(self):
        v = check(complete(5), TheoremId.ADMISSIBLE_GUARANTEE, 3)
        assert v.hypotheses_met and v.conclusion_holds
        v2 = check(complete(5), TheoremId.ADMISSIBLE_GUARANTEE, 4)
        assert not v2.hypotheses_met              # needs interior degree 5
        v3 = check(complete(5), TheoremId.ADMISSIBLE_ONE_EXEMPT, 3)
        assert v3.hypotheses_met and v3.conclusion_holds

    def test_odd_even_statement(self):
        v = check(petersen(), TheoremId.ODD_EVEN_PAIR, 1)
        assert v.hypotheses_met and v.conclusion_holds
        v2 = check(cycle(6), TheoremId.ODD_EVEN_PAIR, 1)
        assert not v2.hypotheses_met              # bipartite

    def test_dichotomy_statement(self):
        v = check(cycle_blowup(5, 2), TheoremId.DICHOTOMY, 1)
        assert v.hypotheses_met and v.conclusion_holds
        assert v.witness["kind"] == Dichotomy.TWO_APART.value

    def test_bad_k(self):
        with pytest.raises(BadParams):
            check(complete(4), TheoremId.MAIN_ODD_CONSEC, 0)

    def test_tightness_of_complete_graphs(self):
        for k in range(2, 7):
            v = check(complete(k + 2), TheoremId.MAIN_ODD_CONSEC, k)
            assert v.hypotheses_met and v.conclusion_holds
            assert v.witness["max_odd_run"] == (k + 1) // 2

    def test_matching_removal_shows_degree_tightness(self):
        # one notch below the degree floor, the k-consecutive conclusion fails
        for k in (6, 7):
            g = complete_minus_matching(k + 1, 1)
            assert degree_profile(g).min_degree == k - 1
            v = check(g, TheoremId.K_CONSECUTIVE, k)
            assert not v.hypotheses_met
            stats = run_stats(cycle_spectrum(g))
            assert stats.max_run < k


class TestExtractTwoCut:
    def test_glued_k5s(self):
        g = glued_k5s()
        cycles, trace = extract_two_cut(g, 3)
        lengths = sorted(len(c) for c in cycles)
        assert len(lengths) >= 2                      # ceil(3/2)
        assert all(l % 2 for l in lengths)
        assert all(lengths[i + 1] == lengths[i] + 2 for i in range(len(lengths) - 1))
        spec = set(cycle_spectrum(g).lengths)
        for c in cycles:
            assert validate_cycle(g, c) and len(c) in spec
        assert "separating-pair" in trace.proof_path

    def test_book_of_k4s(self):
        g = book_of_k4s()
        cycles, trace = extract_two_cut(g, 2)
        assert len(cycles) >= 1
        assert all(validate_cycle(g, c) for c in cycles)

    def test_triangle_degenerate(self):
        cycles, trace = extract_two_cut(complete(3), 1)
        assert cycles == ((0, 1, 2),)
        assert trace.proof_path == ("triangle-graph",)

    def test_hypothesis_gates(self):
        with pytest.raises(HypothesisFailed):
            extract_two_cut(complete(5), 2)           # 3-connected
        with pytest.raises(HypothesisFailed):
            extract_two_cut(cycle(6), 1)              # bipartite
        with pytest.raises(HypothesisFailed):
            extract_two_cut(glued_k5s(), 4)           # degree floor k+1 = 5
        with pytest.raises(HypothesisFailed):
            extract_two_cut(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1)

    def test_both_sides_bipartite_branch(self):
        # theta-style: arcs of lengths 2, 3, 3 between the cut pair {0, 1};
        # the split puts the even arc on one side, both odd arcs on the
        # other, so each side is bipartite while the whole graph is not
        g = Graph(7, [(0, 2), (2, 1),
                      (0, 3), (3, 4), (4, 1),
                      (0, 5), (5, 6), (6, 1)])
        assert is_2_connected(g) and not is_3_connected(g)
        cycles, trace = extract_two_cut(g, 1)
        assert "both-sides-bipartite" in trace.proof_path
        assert all(validate_cycle(g, c) for c in cycles)
        assert all(len(c) % 2 for c in cycles)


class TestExtractThreeConnected:
    def test_complete_eight_minus_matching(self):
        g = complete_minus_matching(8, 4)
        cycles, trace = extract_three_connected(g, 6)
        assert sorted(len(c) for c in cycles) == [3, 4, 5, 6, 7, 8]
        assert all(validate_cycle(g, c) for c in cycles)
        assert trace.proof_path == ("triangle-branch(statement-level)",)

    def test_complete_eight_k6(self):
        cycles, _ = extract_three_connected(complete(8), 6)
        assert sorted(len(c) for c in cycles) == [3, 4, 5, 6, 7, 8]

    def test_blowup_constructive_branch(self):
        g = cycle_blowup(5, 3)
        cycles, trace = extract_three_connected(g, 6)
        lengths = sorted(len(c) for c in cycles)
        assert len(lengths) >= 6
        assert all(lengths[i + 1] == lengths[i] + 1 for i in range(len(lengths) - 1))
        assert all(validate_cycle(g, c) for c in cycles)
        assert "contact-pair-branch" in trace.proof_path
        assert "merge" in trace.proof_path

    def test_blowup_lengths_confirmed_by_spectrum(self):
        g = cycle_blowup(5, 3)
        cycles, _ = extract_three_connected(g, 6)
        top = max(len(c) for c in cycles)
        spec = cycle_spectrum(g, cap=top, force=True, budget=50_000_000)
        for c in cycles:
            assert len(c) in spec.witnesses

    def test_hypothesis_gates(self):
        with pytest.raises(HypothesisFailed):
            extract_three_connected(complete(7), 6)   # the excepted graph
        with pytest.raises(HypothesisFailed):
            extract_three_connected(complete(8), 5)   # k floor is 6
        with pytest.raises(HypothesisFailed):
            extract_three_connected(glued_k5s(), 6)   # not 3-connected
        with pytest.raises(HypothesisFailed):
            extract_three_connected(cycle_blowup(6, 3), 6)  # bipartite
        with pytest.raises(HypothesisFailed):
            extract_three_connected(cycle_blowup(5, 2), 6)  # degree 4 < 6


class TestQuasiDiagonalIndex:
    def test_pendant_square_fixture(self):
        g = blowup_with_pendant_square()
        c = shortest_nonsep_induced_odd_cycle(g)
        assert c.cycle == (0, 2, 4, 6, 8)
        # remainder decomposes into the inner pentagon and the square,
        # glued at vertex 1: verify the claimed setting before using it
        from consec_cycles import block_cut_tree
        sub, idx = induced_subgraph(g, set(range(g.n)) - set(c.cycle))
        tree = block_cut_tree(sub)
        assert len(tree.end_blocks) == 2
        inv = {new: old for old, new in idx.items()}
        first = {inv[v] for v in tree.blocks[tree.end_blocks[0]]}
        assert first == {1, 3, 5, 7, 9}
        d1_minus_x = first - {1}
        g2 = set(range(g.n)) - set(c.cycle) - d1_minus_x
        i = find_quasi_diagonal_index(g, c, d1_minus_x, g2)
        assert i == 2
        # both conditions hold at the returned index
        assert set(g.neighbors(c.cycle[i])) & d1_minus_x
        assert set(g.neighbors(c.cycle[(i + c.s) % 5])) & g2

    def test_symmetric_fixture_returns_zero(self):
        g = pentagon_with_two_hubs()
        c_struct = shortest_nonsep_induced_odd_cycle(g)
        # the finder picks a triangle here; drive the index search with the
        # pentagon explicitly, which is a valid cycle of the graph
        from consec_cycles import OddCycleStructure
        pent = OddCycleStructure((0, 1, 2, 3, 4), 2, c_struct.dichotomy)
        assert find_quasi_diagonal_index(g, pent, {5}, {6}) == 0

    def test_empty_side_rejected(self):
        g = pentagon_with_two_hubs()
        from consec_cycles import OddCycleStructure
        pent = OddCycleStructure((0, 1, 2, 3, 4), 2, None)
        with pytest.raises(BadParams):
            find_quasi_diagonal_index(g, pent, set(), {5, 6})
        with pytest.raises(BadParams):
            find_quasi_diagonal_index(g, pent, {5, 6}, set())
        with pytest.raises(BadParams):
            find_quasi_diagonal_index(g, pent, {5}, {5, 6})

    def test_no_index_is_witness_not_found(self):
        # pentagon with one pendant blob reachable only from vertex 0's side:
        # vertex 5 hangs on 0, vertex 6 hangs on 5 - the "far" condition
        # never holds for B = {6} because 6 only neighbors 5
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                      (5, 0), (6, 5)])
        from consec_cycles import OddCycleStructure
        pent = OddCycleStructure((0, 1, 2, 3, 4), 2, None)
        with pytest.raises(WitnessNotFound):
            find_quasi_diagonal_index(g, pent, {5}, {6})


class TestScanCatalog:
    def test_mixed_stream(self):
        report = scan_catalog(
            [petersen(), complete(6), "Bw", "not graph6 at all"],
            TheoremId.MAIN_ODD_CONSEC, [2])
        assert report.summary["total"] == 4
        assert report.summary["errors"] == 1
        assert report.summary["violations"] == 0
        assert report.entries[3].verdict == "error"

    def test_empty_stream(self):
        report = scan_catalog([], TheoremId.MAIN_ODD_CONSEC, [2])
        assert report.summary == {"total": 0, "hypotheses_met": 0, "holds": 0,
                                  "excepted": 0, "violations": 0, "errors": 0}
        assert report.entries == []

    def test_entries_ordered_by_index_then_k(self):
        report = scan_catalog([complete(6), complete(7)],
                              TheoremId.MAIN_ODD_CONSEC, [3, 1, 2])
        seen = [(e.index, e.k) for e in report.entries]
        assert seen == [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)]

    def test_parallel_is_byte_identical(self):
        graphs = [encode_graph6(g) for g in
                  (petersen(), complete(6), complete(7), glued_k5s(),
                   book_of_k4s(), cycle(8), cycle_blowup(5, 2))] * 3
        seq = scan_catalog(list(graphs), TheoremId.MAIN_ODD_CONSEC, [1, 2, 3])
        par = scan_catalog(list(graphs), TheoremId.MAIN_ODD_CONSEC, [1, 2, 3],
                           jobs=2, chunk_size=2)
        assert report_to_json(seq) == report_to_json(par)

    def test_violations_only_mode(self):
        report = scan_catalog([complete(6), "junk###"],
                              TheoremId.MAIN_ODD_CONSEC, [2],
                              entries_mode="violations")
        assert report.summary["total"] == 2
        assert len(report.entries) == 1 and report.entries[0].verdict == "error"

    def test_k_range_validated(self):
        with pytest.raises(BadParams):
            scan_catalog([], TheoremId.MAIN_ODD_CONSEC, [])
        with pytest.raises(BadParams):
            scan_catalog([], TheoremId.MAIN_ODD_CONSEC, [0, 1])

    def test_verdict_consistency_property(self, rng):
        from conftest import random_graph
        graphs = [random_graph(6, rng.uniform(0.2, 0.8), rng) for _ in range(60)]
        for tid in TheoremId:
            report = scan_catalog(graphs, tid, [1, 2, 4])
            for e in report.entries:
                assert e.verdict in ("holds", "violation", "hypotheses_not_met",
                                     "excepted", "error")
                # guaranteed statements never produce violations here
                if tid is not TheoremId.CONJECTURE_K4:
                    assert e.verdict != "violation", (tid, e)


class TestMinDegreeFourStatement:
    def test_exhaustive_up_to_seven_and_sampled_at_eight(self, rng):
        # exhaustive at n <= 7: min degree >= 4 forces n >= 5
        from consec_cycles import all_labeled_min_degree
        checked = 0
        for n in range(5, 8):
            for g in all_labeled_min_degree(n, 4):
                v = check(g, TheoremId.MIN_DEGREE_FOUR_ODD_PAIR, 1)
                if v.hypotheses_met:
                    checked += 1
                    assert v.conclusion_holds, encode_graph6(g)
        assert checked > 0
        # seeded sample at n = 8 (the full population is acceptance-level)
        from conftest import random_graph
        sampled = 0
        while sampled < 300:
            g = random_graph(8, rng.uniform(0.55, 0.9), rng)
            if degree_profile(g).min_degree < 4:
                continue
            v = check(g, TheoremId.MIN_DEGREE_FOUR_ODD_PAIR, 1)
            if v.hypotheses_met:
                assert v.conclusion_holds, encode_graph6(g)
                sampled += 1

    def test_dichotomy_on_named_nine_vertex_graphs(self, rng):
        # the named zoo plus a seeded n=9 sample with min degree >= 4
        from conftest import named_fixture_zoo, random_graph
        from consec_cycles import shortest_nonsep_induced_odd_cycle, is_connected
        pool = [g for g in named_fixture_zoo() if g.n <= 9]
        sampled = 0
        while sampled < 200:
            g = random_graph(9, rng.uniform(0.5, 0.85), rng)
            if degree_profile(g).min_degree >= 4:
                pool.append(g)
                sampled += 1
        for g in pool:
            if not is_connected(g) or degree_profile(g).min_degree < 4:
                continue
            c = shortest_nonsep_induced_odd_cycle(g)
            if c is not None:
                assert c.dichotomy.kind is not Dichotomy.VIOLATION, encode_graph6(g)


class TestLargerBlowup:
    def test_heptagon_blowup_contact_pair(self):
        # n=21, 6-regular, triangle-free, odd girth 7: exercises the
        # contact-pair construction around a 7-cycle (s = 3)
        g = cycle_blowup(7, 3)
        cycles, trace = extract_three_connected(g, 6)
        lengths = sorted(len(c) for c in cycles)
        assert len(lengths) >= 6
        assert all(lengths[i + 1] == lengths[i] + 1
                   for i in range(len(lengths) - 1))
        assert all(validate_cycle(g, c) for c in cycles)
        assert "contact-pair-branch" in trace.proof_path
