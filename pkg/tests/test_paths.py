"""Path-length enumeration, admissible families, parity pairs, merging."""

import pytest

from consec_cycles import (
    BadParams,
    FamilyKind,
    Graph,
    HypothesisFailed,
    NotAdmissible,
    NotConsecutive,
    OverlapViolation,
    classify_lengths,
    complete,
    cycle,
    is_2_connected,
    make_family,
    max_admissible_family,
    merge_families,
    merged_length_run,
    odd_even_paths,
    validate_path,
    xy_path_lengths,
)

from conftest import random_graph
from oracles import (
    naive_is_bipartite,
    naive_max_admissible_size,
    naive_xy_path_lengths,
)


class TestPathLengths:
    def test_complete_four(self):
        lengths, witnesses = xy_path_lengths(complete(4), 0, 1)
        assert lengths == (1, 2, 3)
        for l, p in witnesses.items():
            assert len(p) - 1 == l and validate_path(complete(4), p, 0, 1)

    def test_cycle_arcs(self):
        lengths, _ = xy_path_lengths(cycle(5), 0, 2)
        assert lengths == (2, 3)

    def test_disconnected_pair(self):
        lengths, witnesses = xy_path_lengths(Graph(4, [(0, 1), (2, 3)]), 0, 2)
        assert lengths == () and witnesses == {}

    def test_forbid_edge(self):
        lengths, _ = xy_path_lengths(complete(4), 0, 1, forbid_edge_xy=True)
        assert lengths == (2, 3)

    def test_same_endpoint_rejected(self):
        with pytest.raises(BadParams):
            xy_path_lengths(complete(4), 1, 1)

    def test_matches_naive(self, rng):
        for _ in range(120):
            g = random_graph(6, rng.uniform(0.2, 0.8), rng)
            x, y = rng.sample(range(6), 2)
            forbid = rng.random() < 0.5
            lengths, _ = xy_path_lengths(g, x, y, forbid_edge_xy=forbid)
            assert set(lengths) == naive_xy_path_lengths(g, x, y, forbid)


class TestClassify:
    def test_kinds(self):
        assert classify_lengths((2, 3, 4)) is FamilyKind.ADMISSIBLE_STEP1
        assert classify_lengths((1, 2, 3)) is FamilyKind.CONSECUTIVE
        assert classify_lengths((2, 4, 6)) is FamilyKind.ADMISSIBLE_STEP2
        assert classify_lengths((3,)) is FamilyKind.ADMISSIBLE_STEP1
        assert classify_lengths((1, 3)) is FamilyKind.UNCLASSIFIED
        assert classify_lengths((2, 3, 5)) is FamilyKind.UNCLASSIFIED
        assert classify_lengths(()) is FamilyKind.UNCLASSIFIED


class TestMaxAdmissibleFamily:
    def test_complete_four(self):
        fam = max_admissible_family(complete(4), 0, 1, True)
        assert fam.distinct_lengths == (2, 3) and len(fam) == 2
        assert fam.kind is FamilyKind.ADMISSIBLE_STEP1

    def test_complete_five(self):
        fam = max_admissible_family(complete(5), 0, 1, True)
        assert fam.distinct_lengths == (2, 3, 4) and len(fam) == 3

    def test_cycle_single_path(self):
        fam = max_admissible_family(cycle(5), 0, 1, True)
        assert len(fam) == 1 and fam.distinct_lengths == (4,)

    def test_step2_subset_found(self):
        # path lengths {2,3,4} contain the step-2 chain {2,4}; step-1 wins
        # at equal size only; here {2,3,4} beats it
        g = complete(5)
        fam = max_admissible_family(g, 0, 1, True)
        assert len(fam) == 3

    def test_direct_edge_never_in_family(self, rng):
        for _ in range(40):
            g = random_graph(6, 0.6, rng)
            if not g.has_edge(0, 1):
                continue
            fam = max_admissible_family(g, 0, 1, False)
            assert all(len(p) - 1 >= 2 for p in fam.paths)

    def test_maximality_against_oracle(self, rng):
        for _ in range(300):
            n = rng.randint(4, 7)
            g = random_graph(n, rng.uniform(0.25, 0.85), rng)
            x, y = rng.sample(range(n), 2)
            fam = max_admissible_family(g, x, y, True)
            lengths = naive_xy_path_lengths(g, x, y, True)
            assert len(fam) == naive_max_admissible_size(lengths)

    def test_witnesses_are_lexicographically_smallest(self):
        fam = max_admissible_family(complete(4), 0, 1, True)
        by_len = {len(p) - 1: p for p in fam.paths}
        assert by_len[2] == (0, 2, 1)
        assert by_len[3] == (0, 2, 3, 1)


class TestOddEvenPaths:
    def test_complete_four(self):
        pair = odd_even_paths(complete(4), 0, 1)
        assert len(pair.odd_path) - 1 == 1
        assert len(pair.even_path) - 1 == 2

    def test_cycle_five(self):
        pair = odd_even_paths(cycle(5), 0, 2)
        assert len(pair.even_path) - 1 == 2
        assert len(pair.odd_path) - 1 == 3

    def test_bipartite_rejected(self):
        with pytest.raises(HypothesisFailed):
            odd_even_paths(cycle(6), 0, 2)

    def test_not_two_connected_rejected(self):
        # two triangles sharing vertex 2: adding the edge 01 inside one
        # triangle keeps 2 as a cut vertex
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        with pytest.raises(HypothesisFailed):
            odd_even_paths(g, 0, 1)

    def test_succeeds_on_all_qualifying_pairs(self, rng):
        checked = 0
        while checked < 150:
            n = rng.randint(4, 6)
            g = random_graph(n, rng.uniform(0.3, 0.8), rng)
            if naive_is_bipartite(g):
                continue
            for x in range(n):
                for y in range(x + 1, n):
                    if not is_2_connected(g.add_edge(x, y)):
                        continue
                    pair = odd_even_paths(g, x, y)
                    assert validate_path(g, pair.odd_path, x, y)
                    assert validate_path(g, pair.even_path, x, y)
                    assert (len(pair.odd_path) - 1) % 2 == 1
                    assert (len(pair.even_path) - 1) % 2 == 0
                    # cross-check: exhaustive search agrees both parities exist
                    lengths = naive_xy_path_lengths(g, x, y, False)
                    assert any(l % 2 for l in lengths)
                    assert any(l % 2 == 0 for l in lengths)
                    checked += 1


class TestMergeArithmetic:
    def test_step1_example(self):
        assert merged_length_run([3, 4], [5, 6]) == (8, 9, 10)

    def test_step2_example(self):
        assert merged_length_run([4, 5], [2, 4, 6]) == (6, 7, 8, 9, 10, 11)

    def test_singleton_consecutive_rejected(self):
        with pytest.raises(NotConsecutive):
            merged_length_run([3], [5, 6])

    def test_gapped_consecutive_rejected(self):
        with pytest.raises(NotConsecutive):
            merged_length_run([3, 5], [5, 6])

    def test_mixed_step_rejected(self):
        with pytest.raises(NotAdmissible):
            merged_length_run([3, 4], [2, 3, 5])

    def test_guarantees_on_random_instances(self, rng):
        for _ in range(1000):
            s = rng.randint(2, 6)
            a0 = rng.randint(1, 12)
            a = [a0 + i for i in range(s)]
            t = rng.randint(1, 6)
            step = rng.choice([1, 2])
            b0 = rng.randint(2, 12)
            b = [b0 + step * i for i in range(t)]
            run = merged_length_run(a, b)
            assert len(run) >= s + t - 1
            if step == 2:
                assert len(run) >= s + 2 * (t - 1)
            # independent recompute: the run is made of realizable sums
            sums = {x + y for x in a for y in b}
            assert all(v in sums for v in run)
            assert all(run[i + 1] == run[i] + 1 for i in range(len(run) - 1))


def _host_for_merge():
    # x=0, y=1, z=2; consecutive 0-1 paths through {3} and {4,5};
    # admissible 1-2 paths through {6} and {7,8}
    return Graph(9, [(0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                     (1, 6), (6, 2), (1, 7), (7, 8), (8, 2)])


class TestMergeFamilies:
    def test_open_merge(self):
        g = _host_for_merge()
        consec = make_family(g, 0, 1, [(0, 3, 1), (0, 4, 5, 1)])
        admis = make_family(g, 1, 2, [(1, 6, 2), (1, 7, 8, 2)])
        result = merge_families(consec, admis, host=g)
        assert not result.closes_cycles
        assert result.lengths == (4, 5, 6)
        assert result.run_length == 3
        for item, length in zip(result.items, result.lengths):
            assert validate_path(g, item, 0, 2)
            assert len(item) - 1 == length

    def test_cycle_closing_merge(self):
        # same shape but the admissible side returns to x
        g = Graph(7, [(0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                      (1, 6), (6, 0), (1, 2), (2, 0)])
        consec = make_family(g, 0, 1, [(0, 3, 1), (0, 4, 5, 1)])
        admis = make_family(g, 1, 0, [(1, 6, 0), (1, 2, 0)])
        result = merge_families(consec, admis, host=g)
        assert result.closes_cycles
        assert result.lengths == (4, 5)
        from consec_cycles import validate_cycle
        for item in result.items:
            assert validate_cycle(g, item)

    def test_joint_vertex_checked(self):
        g = _host_for_merge()
        consec = make_family(g, 0, 1, [(0, 3, 1), (0, 4, 5, 1)])
        admis_wrong = make_family(g, 0, 2, [])
        with pytest.raises((BadParams, NotAdmissible)):
            merge_families(consec, admis_wrong)

    def test_overlap_rejected(self):
        g = Graph(7, [(0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                      (1, 4), (1, 6), (6, 2), (4, 2)])
        consec = make_family(g, 0, 1, [(0, 3, 1), (0, 4, 5, 1)])
        # this admissible path walks through 4, which the consecutive
        # family already uses
        admis = make_family(g, 1, 2, [(1, 6, 2), (1, 4, 2)])
        with pytest.raises(OverlapViolation):
            merge_families(consec, admis)

    def test_nonconsecutive_side_rejected(self):
        g = _host_for_merge()
        consec = make_family(g, 0, 1, [(0, 3, 1)])
        admis = make_family(g, 1, 2, [(1, 6, 2)])
        with pytest.raises(NotConsecutive):
            merge_families(consec, admis)


class TestSearchControls:
    def test_budget_exhaustion(self):
        from consec_cycles import BudgetExceeded, complete_bipartite
        with pytest.raises(BudgetExceeded):
            xy_path_lengths(complete_bipartite(5, 5), 0, 9, budget=50)

    def test_cancellation(self):
        from consec_cycles import Cancelled, complete_bipartite
        with pytest.raises(Cancelled):
            xy_path_lengths(complete_bipartite(6, 6), 0, 11,
                            cancel=lambda: True)


class TestAdmissibleFloorsSampledAtSeven:
    def test_guarantee_holds_on_sampled_seven_vertex_graphs(self, rng):
        # the exhaustive floor check runs at n <= 6 in the acceptance suite;
        # this extends it to a seeded n = 7 sample across densities
        from consec_cycles import GraphFacts
        pairs_checked = 0
        for _ in range(1500):
            g = random_graph(7, rng.uniform(0.25, 0.9), rng)
            for x, y, k_plain, k_exempt, fam_size in GraphFacts(g).admissible_pairs():
                pairs_checked += 1
                assert fam_size >= k_plain
                assert fam_size >= k_exempt
        assert pairs_checked > 1000
