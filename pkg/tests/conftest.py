"""Shared fixtures: named graphs and the fixture zoo used across suites."""

import random

import pytest

from consec_cycles import (
    Graph,
    all_labeled,
    complete,
    complete_minus_matching,
    cycle,
    cycle_blowup,
    petersen,
)


def glued_k5s():
    """Two K_5s sharing the adjacent pair {0, 1}: 2-connected, not 3-connected."""
    edges = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    second = [0, 1, 5, 6, 7]
    edges += [(a, b) for i, a in enumerate(second) for b in second[i + 1:]
              if (a, b) != (0, 1)]
    return Graph(8, edges)


def book_of_k4s():
    """Two K_4s sharing the edge {0, 1}."""
    return Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                     (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)])


def pentagon_with_overloaded_apex():
    """C_5 plus an apex on {0, 1, 3} with a pendant hung on the apex.

    Every cycle through the apex would isolate the pendant, so the
    pentagon is the shortest non-separating induced odd cycle, and the
    apex touches it three times: a contact-pattern violation (possible
    because the guarantee needs min degree 4, which this graph lacks).
    """
    return Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                     (5, 0), (5, 1), (5, 3), (6, 5)])


def blowup_with_pendant_square():
    """The 2-blow-up of C_5 with a 4-cycle block hung on vertex 1.

    Its shortest non-separating induced odd cycle is the transversal
    pentagon (0, 2, 4, 6, 8); the remainder decomposes into two blocks
    joined at the cut vertex 1.
    """
    g = cycle_blowup(5, 2)
    edges = list(g.edges())
    edges += [(1, 10), (10, 11), (11, 12), (12, 1)]
    return Graph(13, edges)


def pentagon_with_two_hubs():
    """C_5 plus two adjacent hubs joined to every pentagon vertex."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5, i) for i in range(5)]
    edges += [(6, i) for i in range(5)]
    edges.append((5, 6))
    return Graph(7, edges)


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture(scope="session")
def small_catalog():
    """Every labeled graph on up to 5 vertices."""
    out = []
    for n in range(6):
        out.extend(all_labeled(n))
    return out


def named_fixture_zoo():
    """Deterministic list of named graphs used across validation tests."""
    zoo = [
        complete(3), complete(4), complete(5), complete(6), complete(7),
        complete_minus_matching(6, 1), complete_minus_matching(8, 4),
        cycle(3), cycle(5), cycle(6), cycle(8),
        petersen(), cycle_blowup(5, 2),
        glued_k5s(), book_of_k4s(),
    ]
    return zoo
