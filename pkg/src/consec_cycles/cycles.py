"""Exact cycle-length spectra and non-separating induced odd cycles.

The spectrum is the set of cycle lengths a graph realizes, with one
witness cycle per length; all consecutive-run statistics that the
theorem checkers quantify over derive from it.  Enumeration is exact:
when a budget or size bound trips, the caller gets an exception, never
a partial result dressed up as a spectrum.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Mapping, Optional

from .connectivity import block_cut_tree, is_connected, is_nonseparating
from .errors import BudgetExceeded, Cancelled, Disconnected, NotShortest, TooLarge
from .graph import Graph, bits

DEFAULT_MAX_N = 14
HARD_MAX_N = 20
DEFAULT_NODE_BUDGET = 10_000_000
BUDGET_ENV_VAR = "CONSEC_CYCLES_BUDGET"


def default_budget() -> int:
    """Node budget for one enumeration call; overridable via the environment."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class CycleSpectrum:
    """Sorted cycle lengths present, with one witness vertex sequence each."""

    lengths: tuple[int, ...]
    witnesses: Mapping[int, tuple[int, ...]]

    def __contains__(self, length: int) -> bool:
        return length in self.witnesses


def cycle_spectrum(
    g: Graph,
    cap: Optional[int] = None,
    *,
    budget: Optional[int] = None,
    cancel: Optional[Callable[[], bool]] = None,
    max_n: int = DEFAULT_MAX_N,
    force: bool = False,
) -> CycleSpectrum:
    """Exact set of cycle lengths of ``g`` up to ``cap`` (default: all).

    Backtracking over simple paths rooted at each cycle's minimum vertex,
    one orientation per cycle, with early exit once every candidate
    length is realized.  Graphs above ``max_n`` (or the hard bound of 20)
    are refused unless ``force`` is set; exceeding ``budget`` nodes or a
    firing ``cancel`` token aborts with an exception and no result.
    """
    n = g.n
    if not force:
        if n > HARD_MAX_N:
            raise TooLarge(f"n={n} exceeds hard bound {HARD_MAX_N}; pass force=True to override")
        if n > max_n:
            raise TooLarge(f"n={n} exceeds size bound {max_n}; raise max_n or pass force=True")
    top = min(n, cap) if cap is not None else n
    if top < 3:
        return CycleSpectrum((), {})

    adj = g.adj
    limit = budget if budget is not None else default_budget()
    want = top - 2  # candidate lengths 3..top
    found: dict[int, tuple[int, ...]] = {}
    path: list[int] = []
    nodes = 0

    def extend(root: int, last: int, visited: int, allowed: int) -> bool:
        nonlocal nodes
        m = adj[last] & allowed & ~visited
        depth = len(path)
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded(f"spectrum enumeration exceeded {limit} nodes")
            if cancel is not None and not nodes & 0xFFF and cancel():
                raise Cancelled("spectrum enumeration cancelled")
            if depth >= 2 and (adj[v] >> root) & 1 and path[1] < v:
                length = depth + 1
                if length >= 3 and length not in found:
                    found[length] = tuple(path) + (v,)
                    if len(found) == want:
                        return True
            if depth < top - 1:
                path.append(v)
                done = extend(root, v, visited | b, allowed)
                path.pop()
                if done:
                    return True
        return False

    full = g.vertex_mask
    for root in range(n):
        allowed = full & ~((1 << (root + 1)) - 1)
        path.append(root)
        done = extend(root, root, 1 << root, allowed)
        path.pop()
        if done:
            break
    lengths = tuple(sorted(found))
    return CycleSpectrum(lengths, found)


# --------------------------------------------------------------------------
# consecutive-run statistics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RunStats:
    """Longest consecutive and consecutive-odd runs in a spectrum."""

    max_run: int
    max_odd_run: int
    run: tuple[int, ...]
    odd_run: tuple[int, ...]
    run_witnesses: Mapping[int, tuple[int, ...]]
    odd_run_witnesses: Mapping[int, tuple[int, ...]]


def _longest_run(values: list[int], step: int) -> list[int]:
    best: list[int] = []
    cur: list[int] = []
    for v in values:
        if cur and v == cur[-1] + step:
            cur.append(v)
        else:
            cur = [v]
        if len(cur) > len(best):
            best = list(cur)
    return best


def run_stats(spectrum: CycleSpectrum) -> RunStats:
    """Longest run of consecutive lengths, and of consecutive odd lengths."""
    lengths = sorted(spectrum.lengths)
    run = _longest_run(lengths, 1)
    odd_run = _longest_run([l for l in lengths if l % 2], 2)
    return RunStats(
        max_run=len(run),
        max_odd_run=len(odd_run),
        run=tuple(run),
        odd_run=tuple(odd_run),
        run_witnesses={l: spectrum.witnesses[l] for l in run},
        odd_run_witnesses={l: spectrum.witnesses[l] for l in odd_run},
    )


def validate_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    """Is ``seq`` a simple cycle of g: distinct vertices, all edges present?"""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def contains_triangle(g: Graph) -> bool:
    """True when some edge has a common neighbor."""
    adj = g.adj
    for u in range(g.n):
        m = adj[u] >> (u + 1)
        for w in bits(m):
            if adj[u] & adj[u + 1 + w]:
                return True
    return False


# --------------------------------------------------------------------------
# shortest non-separating induced odd cycle and its dichotomy
# --------------------------------------------------------------------------

class Dichotomy(Enum):
    """Shape of a shortest non-separating induced odd cycle's surroundings."""

    TRIANGLE = "triangle"
    TWO_APART = "two-apart"   # outside non-cut vertices touch <= 2 cycle
    VIOLATION = "violation"   # vertices, pairs only at cyclic distance two


@dataclass(frozen=True)
class DichotomyVerdict:
    kind: Dichotomy
    hypothesis_met: bool                  # minimum degree >= 4
    violating_vertex: Optional[int] = None


@dataclass(frozen=True)
class OddCycleStructure:
    """An induced non-separating odd cycle v_0..v_{2s} with its classification."""

    cycle: tuple[int, ...]
    s: int
    dichotomy: DichotomyVerdict


def _induced_cycle_order(g: Graph, vertices: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Cyclic order if the set induces a cycle, canonically oriented.

    Starts at the smallest vertex and proceeds toward its smaller
    neighbor inside the set; returns None when the induced subgraph is
    not a cycle.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    for v in vertices:
        if (g.adj[v] & mask).bit_count() != 2:
            return None
    start = vertices[0]
    first = min(bits(g.adj[start] & mask))
    order = [start, first]
    prev, cur = start, first
    for _ in range(len(vertices) - 2):
        nxt_mask = g.adj[cur] & mask & ~(1 << prev)
        nxt = (nxt_mask & -nxt_mask).bit_length() - 1
        order.append(nxt)
        prev, cur = cur, nxt
    if len(set(order)) != len(vertices) or not g.has_edge(order[-1], start):
        return None
    return tuple(order)


def _classify(g: Graph, cyc: tuple[int, ...]) -> DichotomyVerdict:
    length = len(cyc)
    hyp = g.n > 0 and min(m.bit_count() for m in g.adj) >= 4
    if length == 3:
        return DichotomyVerdict(Dichotomy.TRIANGLE, hyp)
    cyc_mask = 0
    pos = {}
    for i, v in enumerate(cyc):
        cyc_mask |= 1 << v
        pos[v] = i
    outside = [v for v in range(g.n) if not (cyc_mask >> v) & 1]
    if not outside:
        return DichotomyVerdict(Dichotomy.TWO_APART, hyp)
    sub, _ = _induced_remainder(g, outside)
    noncut = set(outside)
    for comp_cut in _remainder_cut_vertices(sub):
        noncut.discard(outside[comp_cut])
    for v in outside:
        if v not in noncut:
            continue
        contact = g.adj[v] & cyc_mask
        deg = contact.bit_count()
        if deg > 2:
            return DichotomyVerdict(Dichotomy.VIOLATION, hyp, violating_vertex=v)
        if deg == 2:
            i, j = sorted(pos[w] for w in bits(contact))
            d = j - i
            if d != 2 and d != length - 2:
                return DichotomyVerdict(Dichotomy.VIOLATION, hyp, violating_vertex=v)
    return DichotomyVerdict(Dichotomy.TWO_APART, hyp)


def _induced_remainder(g: Graph, keep: list[int]):
    index = {old: new for new, old in enumerate(keep)}
    adj = [0] * len(keep)
    for new, old in enumerate(keep):
        for w in bits(g.adj[old]):
            j = index.get(w)
            if j is not None:
                adj[new] |= 1 << j
    return Graph.from_adj_masks(len(keep), tuple(adj)), index


def _remainder_cut_vertices(sub: Graph):
    """Cut vertices of a possibly disconnected graph, in its own labels."""
    from .connectivity import components

    out: set[int] = set()
    for comp in components(sub):
        comp_sorted = sorted(comp)
        piece, index = _induced_remainder(sub, comp_sorted)
        if piece.n < 3:
            continue
        tree = block_cut_tree(piece)
        rev = {new: old for old, new in index.items()}
        out.update(rev[c] for c in tree.cut_vertices)
    return out


def shortest_nonsep_induced_odd_cycle(g: Graph) -> Optional[OddCycleStructure]:
    """Shortest induced odd cycle whose removal leaves a connected remainder.

    Ties break to the lexicographically smallest sorted vertex set, then
    to the canonical orientation (smallest start, smaller second
    neighbor).  Returns None when no such cycle exists.
    """
    if not is_connected(g) or g.n == 0:
        raise Disconnected("non-separating cycles are defined in connected graphs")
    for length in range(3, g.n + 1, 2):
        for subset in combinations(range(g.n), length):
            order = _induced_cycle_order(g, subset)
            if order is None:
                continue
            if is_nonseparating(g, subset):
                return OddCycleStructure(order, (length - 1) // 2, _classify(g, order))
    return None


def classify_dichotomy(g: Graph, c: OddCycleStructure) -> DichotomyVerdict:
    """Re-verify ``c`` and classify its surroundings.

    The cycle must be an induced, non-separating odd cycle of minimum
    length among those (NotShortest otherwise).  The verdict records
    whether the minimum-degree-4 hypothesis held; the pattern is
    evaluated either way.
    """
    cyc = c.cycle
    if len(cyc) % 2 == 0 or len(cyc) != 2 * c.s + 1:
        raise NotShortest("stored cycle is not of odd length 2s+1")
    order = _induced_cycle_order(g, tuple(sorted(cyc)))
    if order is None or set(order) != set(cyc):
        raise NotShortest("stored vertex set does not induce a cycle")
    if not validate_cycle(g, cyc):
        raise NotShortest("stored vertex sequence is not a cycle of the graph")
    if not is_nonseparating(g, cyc):
        raise NotShortest("stored cycle separates the graph")
    best = shortest_nonsep_induced_odd_cycle(g)
    if best is None or len(best.cycle) != len(cyc):
        raise NotShortest("a shorter non-separating induced odd cycle exists")
    return _classify(g, cyc)
