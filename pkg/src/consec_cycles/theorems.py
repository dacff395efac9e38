"""Statement-level theorem checkers, constructive extractors, and the scanner.

Each checkable statement binds a hypothesis predicate to a conclusion
predicate over the cycle spectrum or path-family machinery.  A Verdict
with ``hypotheses_met`` and a failed conclusion is a violation: the
headline outcome every scan exists to hunt for (expected never for the
guaranteed statements, a discovery for the open conjecture).

The two extractors rebuild the guaranteed cycles constructively, case
by case, and record which branch they took; a ConstructionFailed from
either is likewise a headline finding, not a crash.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Iterable, Optional, Union

from . import connectivity as conn
from .cycles import (
    DEFAULT_MAX_N,
    CycleSpectrum,
    Dichotomy,
    OddCycleStructure,
    RunStats,
    contains_triangle,
    cycle_spectrum,
    run_stats,
    shortest_nonsep_induced_odd_cycle,
    validate_cycle,
)
from .errors import (
    BadParams,
    ConstructionFailed,
    GraphLibError,
    HypothesisFailed,
    WitnessNotFound,
)
from .graph import Graph, bits, decode_graph6, encode_graph6, induced_subgraph
from .paths import (
    FamilyKind,
    PathFamily,
    make_family,
    max_admissible_family,
    merge_families,
    odd_even_paths,
)


class TheoremId(Enum):
    """Checkable statements; values double as the CLI names."""

    MAIN_ODD_CONSEC = "main"                    # 2-conn non-bip, min deg k+1 ->
    #                                             ceil(k/2) consecutive odd cycles
    K_CONSECUTIVE = "k-consecutive"             # 3-conn non-bip, min deg k, k>=6 ->
    #                                             k consecutive cycles unless complete
    TWO_CUT_ODD_CONSEC = "two-cut"              # main, restricted to graphs with a 2-cut
    MIN_DEGREE_FOUR_ODD_PAIR = "min-degree-four"  # 3-conn non-bip, min deg 4 ->
    #                                               two consecutive odd cycles
    TRIANGLE_CONSEC = "triangle"                # 2-conn with triangle, min deg k ->
    #                                             k consecutive cycles unless complete
    ADMISSIBLE_GUARANTEE = "admissible"         # per pair: k admissible paths
    ADMISSIBLE_ONE_EXEMPT = "admissible-exempt"  # same, one low-degree vertex exempt
    ODD_EVEN_PAIR = "odd-even"                  # per pair: odd and even path exist
    DICHOTOMY = "dichotomy"                     # triangle / two-apart classification
    CONJECTURE_K4 = "conjecture"                # open: k-consecutive already at k>=4


SPECTRUM_THEOREMS = frozenset({
    TheoremId.MAIN_ODD_CONSEC,
    TheoremId.K_CONSECUTIVE,
    TheoremId.TWO_CUT_ODD_CONSEC,
    TheoremId.MIN_DEGREE_FOUR_ODD_PAIR,
    TheoremId.TRIANGLE_CONSEC,
    TheoremId.CONJECTURE_K4,
})


@dataclass
class Verdict:
    """Outcome of one theorem check on one graph for one parameter value."""

    graph_id: str
    theorem: TheoremId
    k: int
    hypotheses_met: bool
    conclusion_holds: Optional[bool]
    excepted: bool = False
    witness: Optional[dict] = None
    violation: Optional[dict] = None

    @property
    def verdict(self) -> str:
        if self.excepted:
            return "excepted"
        if not self.hypotheses_met:
            return "hypotheses_not_met"
        return "holds" if self.conclusion_holds else "violation"


class GraphFacts:
    """Per-graph cache shared by all k values of a scan.

    Structural facts are cheap and eager where needed; the spectrum and
    the per-pair path tables are computed at most once, and only when a
    theorem's structural hypotheses actually pass.
    """

    def __init__(self, g: Graph, *, budget: Optional[int] = None,
                 max_n: int = DEFAULT_MAX_N, force: bool = False):
        self.g = g
        self.budget = budget
        self.max_n = max_n
        self.force = force
        self._graph6: Optional[str] = None
        self._spectrum: Optional[CycleSpectrum] = None
        self._stats: Optional[RunStats] = None
        self._pairs: Optional[list] = None
        self._odd_even: Optional[list] = None
        self._dich: Union[OddCycleStructure, None, bool] = False  # False = unevaluated
        self._cache: dict[str, bool] = {}

    @property
    def graph6(self) -> str:
        if self._graph6 is None:
            self._graph6 = encode_graph6(self.g)
        return self._graph6

    @property
    def min_degree(self) -> int:
        g = self.g
        return min((m.bit_count() for m in g.adj), default=0)

    def _memo(self, key: str, fn: Callable[[], bool]) -> bool:
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def connected(self) -> bool:
        return self._memo("conn", lambda: self.g.n > 0 and conn.is_connected(self.g))

    @property
    def bipartite(self) -> bool:
        return self._memo("bip", lambda: conn.is_bipartite(self.g))

    @property
    def two_connected(self) -> bool:
        return self._memo("2c", lambda: conn.is_2_connected(self.g))

    @property
    def three_connected(self) -> bool:
        return self._memo("3c", lambda: conn.is_3_connected(self.g))

    @property
    def triangle(self) -> bool:
        return self._memo("tri", lambda: contains_triangle(self.g))

    def is_complete(self) -> bool:
        n = self.g.n
        return all(m.bit_count() == n - 1 for m in self.g.adj)

    def spectrum(self) -> CycleSpectrum:
        if self._spectrum is None:
            self._spectrum = cycle_spectrum(
                self.g, budget=self.budget, max_n=self.max_n, force=self.force)
        return self._spectrum

    def stats(self) -> RunStats:
        if self._stats is None:
            self._stats = run_stats(self.spectrum())
        return self._stats

    def admissible_pairs(self) -> list[tuple[int, int, int, int, int]]:
        """Per pair (x, y): the largest k the plain/exempt degree gates allow,
        and the realized maximum admissible family size."""
        if self._pairs is None:
            g = self.g
            out = []
            for x, y in combinations(range(g.n), 2):
                if not conn.is_2_connected(g.add_edge(x, y)):
                    continue
                others = sorted(g.degree(v) for v in range(g.n) if v not in (x, y))
                if not others:
                    continue
                k_plain = others[0] - 1
                k_exempt = (others[1] - 1) if len(others) >= 2 else k_plain
                fam = max_admissible_family(g, x, y, True, budget=self.budget)
                out.append((x, y, k_plain, k_exempt, len(fam)))
            self._pairs = out
        return self._pairs

    def odd_even_results(self) -> list[tuple[int, int, bool, str]]:
        if self._odd_even is None:
            g = self.g
            out = []
            for x, y in combinations(range(g.n), 2):
                if not conn.is_2_connected(g.add_edge(x, y)):
                    continue
                try:
                    odd_even_paths(g, x, y, budget=self.budget)
                    out.append((x, y, True, ""))
                except (WitnessNotFound, GraphLibError) as exc:
                    out.append((x, y, False, f"{type(exc).__name__}: {exc}"))
            self._odd_even = out
        return self._odd_even

    def dichotomy_structure(self) -> Optional[OddCycleStructure]:
        if self._dich is False:
            self._dich = shortest_nonsep_induced_odd_cycle(self.g)
        return self._dich


# --------------------------------------------------------------------------
# per-theorem hypothesis/conclusion bindings
# --------------------------------------------------------------------------

def _structural(facts: GraphFacts, tid: TheoremId) -> bool:
    if tid is TheoremId.MAIN_ODD_CONSEC:
        return facts.two_connected and not facts.bipartite
    if tid is TheoremId.K_CONSECUTIVE or tid is TheoremId.CONJECTURE_K4:
        return facts.three_connected and not facts.bipartite
    if tid is TheoremId.TWO_CUT_ODD_CONSEC:
        return facts.two_connected and not facts.three_connected and not facts.bipartite
    if tid is TheoremId.MIN_DEGREE_FOUR_ODD_PAIR:
        return facts.three_connected and not facts.bipartite and facts.min_degree >= 4
    if tid is TheoremId.TRIANGLE_CONSEC:
        return facts.two_connected and facts.triangle
    if tid is TheoremId.ADMISSIBLE_GUARANTEE or tid is TheoremId.ADMISSIBLE_ONE_EXEMPT:
        return facts.g.n >= 3 and bool(facts.admissible_pairs())
    if tid is TheoremId.ODD_EVEN_PAIR:
        return facts.connected and not facts.bipartite
    if tid is TheoremId.DICHOTOMY:
        return (facts.connected and facts.min_degree >= 4
                and facts.dichotomy_structure() is not None)
    raise BadParams(f"unknown theorem id {tid!r}")


def _parameter_gate(facts: GraphFacts, tid: TheoremId, k: int) -> bool:
    d = facts.min_degree
    if tid is TheoremId.MAIN_ODD_CONSEC or tid is TheoremId.TWO_CUT_ODD_CONSEC:
        return k >= 1 and d >= k + 1
    if tid is TheoremId.K_CONSECUTIVE:
        return k >= 6 and d >= k
    if tid is TheoremId.CONJECTURE_K4:
        return k >= 4 and d >= k
    if tid is TheoremId.TRIANGLE_CONSEC:
        return k >= 2 and d >= k
    if tid is TheoremId.MIN_DEGREE_FOUR_ODD_PAIR:
        return True
    if tid is TheoremId.ADMISSIBLE_GUARANTEE:
        return any(kp >= k for _, _, kp, _, _ in facts.admissible_pairs())
    if tid is TheoremId.ADMISSIBLE_ONE_EXEMPT:
        return any(ke >= k for _, _, _, ke, _ in facts.admissible_pairs())
    if tid is TheoremId.ODD_EVEN_PAIR or tid is TheoremId.DICHOTOMY:
        return True
    raise BadParams(f"unknown theorem id {tid!r}")


def _is_complete_exception(facts: GraphFacts, k: int) -> bool:
    return facts.g.n == k + 1 and facts.is_complete()


def _conclude(facts: GraphFacts, tid: TheoremId, k: int) -> Verdict:
    """Evaluate the conclusion; hypotheses are already known to hold."""
    g6 = facts.graph6
    witness: Optional[dict] = None
    violation: Optional[dict] = None

    if tid in SPECTRUM_THEOREMS:
        stats = facts.stats()
        if tid in (TheoremId.MAIN_ODD_CONSEC, TheoremId.TWO_CUT_ODD_CONSEC):
            need = (k + 1) // 2
            holds = stats.max_odd_run >= need
            witness = {"odd_run": list(stats.odd_run), "max_odd_run": stats.max_odd_run}
            if not holds:
                violation = {"required_odd_run": need, "achieved": stats.max_odd_run,
                             "lengths": list(facts.spectrum().lengths)}
        elif tid is TheoremId.MIN_DEGREE_FOUR_ODD_PAIR:
            holds = stats.max_odd_run >= 2
            witness = {"odd_run": list(stats.odd_run), "max_odd_run": stats.max_odd_run}
            if not holds:
                violation = {"required_odd_run": 2, "achieved": stats.max_odd_run,
                             "lengths": list(facts.spectrum().lengths)}
        else:
            if _is_complete_exception(facts, k):
                return Verdict(g6, tid, k, True, None, excepted=True,
                               witness={"excepted": f"complete graph on {k + 1} vertices"})
            holds = stats.max_run >= k
            witness = {"run": list(stats.run), "max_run": stats.max_run}
            if not holds:
                violation = {"required_run": k, "achieved": stats.max_run,
                             "lengths": list(facts.spectrum().lengths)}
        return Verdict(g6, tid, k, True, holds, witness=witness, violation=violation)

    if tid is TheoremId.ADMISSIBLE_GUARANTEE or tid is TheoremId.ADMISSIBLE_ONE_EXEMPT:
        col = 2 if tid is TheoremId.ADMISSIBLE_GUARANTEE else 3
        worst = None
        for row in facts.admissible_pairs():
            if row[col] >= k:
                if worst is None or row[4] < worst[4]:
                    worst = row
        assert worst is not None  # parameter gate guaranteed a qualifying pair
        holds = worst[4] >= k
        witness = {"tightest_pair": [worst[0], worst[1]], "family_size": worst[4]}
        if not holds:
            violation = {"pair": [worst[0], worst[1]], "required": k,
                         "family_size": worst[4]}
        return Verdict(g6, tid, k, True, holds, witness=witness, violation=violation)

    if tid is TheoremId.ODD_EVEN_PAIR:
        failures = [(x, y, msg) for x, y, ok, msg in facts.odd_even_results() if not ok]
        holds = not failures
        witness = {"pairs_checked": len(facts.odd_even_results())}
        if failures:
            violation = {"failures": [list(f[:2]) for f in failures],
                         "first_error": failures[0][2]}
        return Verdict(g6, tid, k, True, holds, witness=witness, violation=violation)

    if tid is TheoremId.DICHOTOMY:
        c = facts.dichotomy_structure()
        assert c is not None
        holds = c.dichotomy.kind is not Dichotomy.VIOLATION
        witness = {"cycle": list(c.cycle), "kind": c.dichotomy.kind.value}
        if not holds:
            violation = {"cycle": list(c.cycle),
                         "violating_vertex": c.dichotomy.violating_vertex}
        return Verdict(g6, tid, k, True, holds, witness=witness, violation=violation)

    raise BadParams(f"unknown theorem id {tid!r}")


def check(g_or_facts: Union[Graph, GraphFacts], theorem: TheoremId, k: int,
          *, budget: Optional[int] = None, max_n: int = DEFAULT_MAX_N,
          force: bool = False) -> Verdict:
    """Evaluate one theorem on one graph for one parameter value.

    Hypotheses split into structural gates (connectivity, parity,
    fixed-degree floors) and the k-dependent degree gate; conclusion
    machinery runs only when the structural gates pass, so a scan never
    pays for spectra of out-of-scope graphs.
    """
    if k < 1:
        raise BadParams("k must be >= 1")
    facts = (g_or_facts if isinstance(g_or_facts, GraphFacts)
             else GraphFacts(g_or_facts, budget=budget, max_n=max_n, force=force))
    if not _structural(facts, theorem):
        return Verdict(facts.graph6, theorem, k, False, None)
    if not _parameter_gate(facts, theorem, k):
        witness = None
        if theorem in SPECTRUM_THEOREMS:
            stats = facts.stats()
            if theorem in (TheoremId.MAIN_ODD_CONSEC, TheoremId.TWO_CUT_ODD_CONSEC,
                           TheoremId.MIN_DEGREE_FOUR_ODD_PAIR):
                witness = {"odd_run": list(stats.odd_run),
                           "max_odd_run": stats.max_odd_run}
            else:
                witness = {"run": list(stats.run), "max_run": stats.max_run}
        return Verdict(facts.graph6, theorem, k, False, None, witness=witness)
    return _conclude(facts, theorem, k)


# --------------------------------------------------------------------------
# constructive extractors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtractionTrace:
    """Ordered record of the proof branch taken and its intermediate objects."""

    proof_path: tuple[str, ...]
    steps: tuple[tuple[str, dict], ...]


class _Tracer:
    def __init__(self) -> None:
        self.steps: list[tuple[str, dict]] = []

    def add(self, label: str, **payload) -> None:
        self.steps.append((label, payload))

    def freeze(self) -> ExtractionTrace:
        return ExtractionTrace(tuple(l for l, _ in self.steps), tuple(self.steps))


def _bfs_path(g: Graph, start: int, goal: int, allowed: int) -> Optional[tuple[int, ...]]:
    """Shortest start-goal path staying inside the ``allowed`` vertex mask."""
    if not (allowed >> start) & 1 or not (allowed >> goal) & 1:
        return None
    if start == goal:
        return (start,)
    prev = {start: -1}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bits(g.adj[u] & allowed):
                if v not in prev:
                    prev[v] = u
                    if v == goal:
                        path = [v]
                        while path[-1] != start:
                            path.append(prev[path[-1]])
                        return tuple(reversed(path))
                    nxt.append(v)
        frontier = nxt
    return None


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _map_path(path, inv: dict[int, int]) -> tuple[int, ...]:
    return tuple(inv[v] for v in path)


def _family_to_global(fam: PathFamily, inv: dict[int, int], g: Graph,
                      reverse: bool = False) -> PathFamily:
    paths = [_map_path(p, inv) for p in fam.paths]
    if reverse:
        paths = [p[::-1] for p in paths]
    x, y = paths[0][0], paths[0][-1]
    return make_family(g, x, y, paths)


def _best_odd_run_cycles(pairs: list[tuple[int, tuple[int, ...]]]):
    """Longest step-2 run among odd lengths; returns (lengths, cycles)."""
    by_len = {}
    for length, cyc in pairs:
        if length % 2:
            by_len.setdefault(length, cyc)
    odd = sorted(by_len)
    best: list[int] = []
    cur: list[int] = []
    for l in odd:
        if cur and l == cur[-1] + 2:
            cur.append(l)
        else:
            cur = [l]
        if len(cur) > len(best):
            best = list(cur)
    return tuple(best), tuple(by_len[l] for l in best)


def _best_run_cycles(pairs: list[tuple[int, tuple[int, ...]]]):
    """Longest step-1 run among lengths; returns (lengths, cycles)."""
    by_len = {}
    for length, cyc in pairs:
        by_len.setdefault(length, cyc)
    lens = sorted(by_len)
    best: list[int] = []
    cur: list[int] = []
    for l in lens:
        if cur and l == cur[-1] + 1:
            cur.append(l)
        else:
            cur = [l]
        if len(cur) > len(best):
            best = list(cur)
    return tuple(best), tuple(by_len[l] for l in best)


def _join_cycle(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Close two x-y paths into a cycle (q traversed back from y to x)."""
    return p + q[::-1][1:-1]


def extract_two_cut(g: Graph, k: int, *, budget: Optional[int] = None
                    ) -> tuple[tuple[tuple[int, ...], ...], ExtractionTrace]:
    """Consecutive odd cycles from a 2-connected graph with a separating pair.

    Splits the graph at a 2-cut, takes an odd/even path pair on a
    non-bipartite side (or the forced parity in the all-bipartite
    configuration) and an admissible family on the other side, and
    closes them into at least ceil(k/2) cycles of consecutive odd
    lengths.  Returns the full achieved odd run with its trace.
    """
    if k < 1:
        raise BadParams("k must be >= 1")
    if not conn.is_2_connected(g):
        raise HypothesisFailed("graph is not 2-connected")
    if conn.is_3_connected(g):
        raise HypothesisFailed("graph is 3-connected; no separating pair exists")
    if conn.is_bipartite(g):
        raise HypothesisFailed("graph is bipartite")
    if min(m.bit_count() for m in g.adj) < k + 1:
        raise HypothesisFailed(f"minimum degree below {k + 1}")

    tr = _Tracer()
    promise = (k + 1) // 2

    if g.n == 3:
        # the only 2-connected graph on 3 vertices; too small for a 2-cut
        tr.add("triangle-graph", cycle=[0, 1, 2])
        return ((0, 1, 2),), tr.freeze()

    pair = conn.two_cut_witness(g)
    if pair is None:
        raise ConstructionFailed("no separating pair found in a non-3-connected graph")
    x, y = pair
    rest = [v for v in range(g.n) if v not in pair]
    sub_rest, idx_rest = induced_subgraph(g, rest)
    comp_local = conn.components(sub_rest)[0]
    comp = {rest[v] for v in comp_local}
    side_sets = [sorted(comp | {x, y}), sorted(set(range(g.n)) - comp)]
    tr.add("separating-pair", pair=[x, y], component=sorted(comp))

    sides = []
    for verts in side_sets:
        sub, idx = induced_subgraph(g, verts)
        inv = {new: old for old, new in idx.items()}
        lx, ly = idx[x], idx[y]
        if not conn.is_2_connected(sub.add_edge(lx, ly)):
            raise ConstructionFailed(
                "a side of the split is not 2-connected after adding the cut edge")
        sides.append((sub, idx, inv, lx, ly))

    bips = [conn.is_bipartite(sub) for sub, *_ in sides]
    cycles_and_lengths: list[tuple[int, tuple[int, ...]]] = []

    if not all(bips):
        parity_i = bips.index(False)
        other_i = 1 - parity_i
        psub, pidx, pinv, plx, ply = sides[parity_i]
        osub, oidx, oinv, olx, oly = sides[other_i]
        tr.add("one-side-non-bipartite", parity_side=side_sets[parity_i])
        pp = odd_even_paths(psub, plx, ply, budget=budget)
        odd_p = _map_path(pp.odd_path, pinv)
        even_p = _map_path(pp.even_path, pinv)
        tr.add("parity-paths", odd_length=len(odd_p) - 1, even_length=len(even_p) - 1)
        fam = max_admissible_family(osub, olx, oly, True, budget=budget)
        if len(fam) < k:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized: {len(fam)} < {k}")
        tr.add("admissible-family(statement-level)",
               side=side_sets[other_i], lengths=list(fam.lengths), kind=fam.kind.value)
        first_parity = (len(fam.paths[0]) - 1) % 2
        partner = even_p if first_parity == 1 else odd_p
        for p in fam.paths:
            gp = _map_path(p, oinv)
            cyc = _join_cycle(gp if gp[0] == x else gp[::-1],
                              partner if partner[0] == x else partner[::-1])
            if not validate_cycle(g, cyc):
                raise ConstructionFailed(f"assembled cycle is not simple: {cyc}")
            cycles_and_lengths.append((len(cyc), cyc))
    else:
        same = []
        for (sub, idx, inv, lx, ly), verts in zip(sides, side_sets):
            bp = conn.bipartition_or_odd_cycle(sub)
            assert bp.parts is not None
            same.append((lx in bp.parts[0]) == (ly in bp.parts[0]))
        if same[0] == same[1]:
            raise ConstructionFailed(
                "both-bipartite split has a parity configuration that would "
                "make the whole graph bipartite")
        even_i = same.index(True)
        odd_i = 1 - even_i
        tr.add("both-sides-bipartite", even_side=side_sets[even_i],
               odd_side=side_sets[odd_i])
        esub, eidx, einv, elx, ely = sides[even_i]
        osub2, oidx2, oinv2, olx2, oly2 = sides[odd_i]
        p_local = _bfs_path(esub, elx, ely, esub.vertex_mask)
        if p_local is None:
            raise ConstructionFailed("no connecting path on the even side")
        p_even = _map_path(p_local, einv)
        if (len(p_even) - 1) % 2:
            raise ConstructionFailed("even-side path came out odd")
        fam = max_admissible_family(osub2, olx2, oly2, True, budget=budget)
        if len(fam) < k:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized: {len(fam)} < {k}")
        if any((l % 2) == 0 for l in fam.distinct_lengths):
            raise ConstructionFailed("odd-side family contains an even path")
        tr.add("even-side-path", length=len(p_even) - 1)
        tr.add("admissible-family(statement-level)",
               side=side_sets[odd_i], lengths=list(fam.lengths), kind=fam.kind.value)
        for p in fam.paths:
            gp = _map_path(p, oinv2)
            cyc = _join_cycle(gp if gp[0] == x else gp[::-1],
                              p_even if p_even[0] == x else p_even[::-1])
            if not validate_cycle(g, cyc):
                raise ConstructionFailed(f"assembled cycle is not simple: {cyc}")
            cycles_and_lengths.append((len(cyc), cyc))

    lengths, cycles = _best_odd_run_cycles(cycles_and_lengths)
    if len(lengths) < promise:
        raise ConstructionFailed(
            f"achieved odd run {list(lengths)} shorter than promised {promise}")
    tr.add("result", odd_lengths=list(lengths))
    return cycles, tr.freeze()


def find_quasi_diagonal_index(g: Graph, c: OddCycleStructure,
                              d1_minus_x: Iterable[int], g2: Iterable[int]) -> int:
    """Smallest cycle index i whose vertex touches the end-block interior
    while the vertex s steps further touches the rest of the remainder.

    The two target sets must partition the graph's vertices outside the
    cycle.  WitnessNotFound here falsifies the guarantee that such an
    index exists; it is a headline finding, not bad input.
    """
    a_set = set(d1_minus_x)
    b_set = set(g2)
    cyc = c.cycle
    outside = set(range(g.n)) - set(cyc)
    if not a_set:
        raise BadParams("end-block interior is empty")
    if not b_set:
        raise BadParams("remainder-side set is empty")
    if a_set & b_set or (a_set | b_set) != outside:
        raise BadParams("the two sets must partition the vertices off the cycle")
    a_mask = _mask_of(a_set)
    b_mask = _mask_of(b_set)
    L = len(cyc)
    for i in range(L):
        if g.adj[cyc[i]] & a_mask and g.adj[cyc[(i + c.s) % L]] & b_mask:
            return i
    raise WitnessNotFound("no quasi-diagonal index; guaranteed by 3-connectivity")


def _contact_pair_cycles(g: Graph, c: OddCycleStructure, v: int,
                         b_verts: set[int], b_cut: Optional[int],
                         g1_verts: list[int], k: int, tr: _Tracer,
                         budget: Optional[int]):
    """Cycles via an interior vertex with two cycle contacts two apart."""
    cyc = c.cycle
    L = len(cyc)
    s = c.s
    cyc_mask = _mask_of(cyc)
    pos = {w: i for i, w in enumerate(cyc)}
    contacts = sorted(pos[w] for w in bits(g.adj[v] & cyc_mask))
    p1, p2 = contacts
    if (p2 - p1) % L == 2:
        j = p1
    elif (p1 - p2) % L == 2:
        j = p2
    else:
        raise ConstructionFailed(
            f"two cycle contacts of {v} are not two apart: positions {contacts}")
    w = [cyc[(j + 1 + t) % L] for t in range(L)]  # w[2s], w[1] are v's contacts

    g1_mask = _mask_of(g1_verts)
    u_candidates = g.adj[w[s]] & g1_mask & ~(1 << v)
    if not u_candidates:
        raise ConstructionFailed("no second anchor next to the cycle midpoint")
    u = (u_candidates & -u_candidates).bit_length() - 1

    four = [
        (v,) + tuple(w[1:s + 1]) + (u,),
        (v,) + tuple(w[2 * s:s - 1:-1]) + (u,),
        (v, w[2 * s], w[0]) + tuple(w[1:s + 1]) + (u,),
        (v, w[1], w[0]) + tuple(w[2 * s:s - 1:-1]) + (u,),
    ]
    consec = make_family(g, v, u, four)
    if consec.distinct_lengths != (s + 1, s + 2, s + 3, s + 4):
        raise ConstructionFailed(
            f"anchor paths have lengths {consec.distinct_lengths}, "
            f"expected {(s + 1, s + 2, s + 3, s + 4)}")
    tr.add("contact-pair-anchors", v=v, u=u,
           lengths=list(consec.distinct_lengths))

    sub_b, idx_b = induced_subgraph(g, sorted(b_verts))
    inv_b = {new: old for old, new in idx_b.items()}
    if u in b_verts:
        fam = max_admissible_family(sub_b, idx_b[v], idx_b[u], True, budget=budget)
        if len(fam) < k - 3:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized in block: {len(fam)} < {k - 3}")
        admis = _family_to_global(fam, inv_b, g, reverse=True)  # u -> v
        tr.add("block-family(statement-level)", lengths=list(fam.lengths),
               kind=fam.kind.value)
    else:
        assert b_cut is not None
        allowed = _mask_of(set(g1_verts) - (b_verts - {b_cut}))
        t_path = _bfs_path(g, u, b_cut, allowed)
        if t_path is None:
            raise ConstructionFailed("no path from the second anchor to the block door")
        fam = max_admissible_family(sub_b, idx_b[b_cut], idx_b[v], True, budget=budget)
        if len(fam) < k - 3:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized in block: {len(fam)} < {k - 3}")
        paths = [t_path + _map_path(p, inv_b)[1:] for p in fam.paths]
        admis = make_family(g, u, v, paths)
        tr.add("block-family-with-tail(statement-level)",
               tail_length=len(t_path) - 1, lengths=list(fam.lengths),
               kind=fam.kind.value)
    merged = merge_families(consec, admis,
                            within=set(cyc) | {v, u}, host=g)
    tr.add("merge", lengths=list(merged.lengths))
    return [(l, item) for l, item in zip(merged.lengths, merged.items)]


def extract_three_connected(g: Graph, k: int, *, budget: Optional[int] = None,
                            max_n: int = DEFAULT_MAX_N, force: bool = False
                            ) -> tuple[tuple[tuple[int, ...], ...], ExtractionTrace]:
    """k cycles of consecutive lengths from a 3-connected non-bipartite graph.

    Accepts k >= 6 with minimum degree >= k, excluding the complete graph
    on k+1 vertices.  Graphs containing a triangle are discharged by a
    statement-level run search over the spectrum; triangle-free graphs go
    through the constructive branches around a shortest non-separating
    induced odd cycle.  Returns the full achieved run with its trace.
    """
    if k < 6:
        raise HypothesisFailed("constructive extraction requires k >= 6")
    if not conn.is_3_connected(g):
        raise HypothesisFailed("graph is not 3-connected")
    if conn.is_bipartite(g):
        raise HypothesisFailed("graph is bipartite")
    if min(m.bit_count() for m in g.adj) < k:
        raise HypothesisFailed(f"minimum degree below {k}")
    if g.n == k + 1 and all(m.bit_count() == g.n - 1 for m in g.adj):
        raise HypothesisFailed("the complete graph on k+1 vertices is the exception")

    tr = _Tracer()
    if contains_triangle(g):
        spec = cycle_spectrum(g, budget=budget, max_n=max_n, force=force)
        stats = run_stats(spec)
        if stats.max_run < k:
            raise ConstructionFailed(
                f"triangle-branch guarantee not realized: run {stats.max_run} < {k}")
        tr.add("triangle-branch(statement-level)", run=list(stats.run))
        cycles = tuple(stats.run_witnesses[l] for l in stats.run)
        return cycles, tr.freeze()

    c = shortest_nonsep_induced_odd_cycle(g)
    if c is None:
        raise ConstructionFailed(
            "no non-separating induced odd cycle in a 3-connected non-bipartite graph")
    if c.dichotomy.kind is Dichotomy.VIOLATION:
        raise ConstructionFailed(
            f"dichotomy violated at vertex {c.dichotomy.violating_vertex}")
    cyc = c.cycle
    s = c.s
    tr.add("nonseparating-induced-odd-cycle", cycle=list(cyc), s=s)
    cyc_mask = _mask_of(cyc)
    g1_verts = [v for v in range(g.n) if not (cyc_mask >> v) & 1]
    sub1, idx1 = induced_subgraph(g, g1_verts)
    inv1 = {new: old for old, new in idx1.items()}

    two_conn_rem = conn.is_2_connected(sub1)
    if two_conn_rem:
        blocks: list[tuple[set[int], Optional[int]]] = [(set(g1_verts), None)]
    else:
        bct = conn.block_cut_tree(sub1)
        blocks = []
        for bi in bct.end_blocks:
            cut_local = bct.end_block_cut_vertex.get(bi)
            blocks.append(({inv1[w] for w in bct.blocks[bi]},
                           inv1[cut_local] if cut_local is not None else None))

    # interior vertex with two cycle contacts: strongest branch, checked first
    for b_verts, b_cut in blocks:
        for v in sorted(b_verts - ({b_cut} if b_cut is not None else set())):
            if (g.adj[v] & cyc_mask).bit_count() == 2:
                tr.add("contact-pair-branch", block=sorted(b_verts), v=v)
                pairs = _contact_pair_cycles(
                    g, c, v, b_verts, b_cut, g1_verts, k, tr, budget)
                lengths, cycles = _best_run_cycles(pairs)
                if len(lengths) < k:
                    raise ConstructionFailed(
                        f"achieved run {list(lengths)} shorter than promised {k}")
                tr.add("result", lengths=list(lengths))
                return cycles, tr.freeze()

    if two_conn_rem:
        # remainder 2-connected, every interior vertex has at most one contact
        anchors_v = g.adj[cyc[0]] & ~cyc_mask
        if not anchors_v:
            raise ConstructionFailed("cycle start has no neighbor off the cycle")
        v = (anchors_v & -anchors_v).bit_length() - 1
        anchors_u = g.adj[cyc[s - 1]] & ~cyc_mask & ~(1 << v)
        if not anchors_u:
            raise ConstructionFailed("cycle midpoint has no second neighbor off the cycle")
        u = (anchors_u & -anchors_u).bit_length() - 1
        q1 = (v,) + tuple(cyc[0:s]) + (u,)
        q2 = (v, cyc[0]) + tuple(cyc[2 * s:s - 2:-1]) + (u,)
        for q in (q1, q2):
            if not _path_ok(g, q):
                raise ConstructionFailed(f"arc path is not a path: {q}")
        tr.add("two-connected-remainder", v=v, u=u,
               arc_lengths=[len(q1) - 1, len(q2) - 1])
        fam = max_admissible_family(sub1, idx1[v], idx1[u], True, budget=budget)
        if len(fam) < k - 2:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized: {len(fam)} < {k - 2}")
        tr.add("remainder-family(statement-level)", lengths=list(fam.lengths),
               kind=fam.kind.value)
        pairs = []
        for q in (q1, q2):
            for p in fam.paths:
                gp = _map_path(p, inv1)
                cycle_seq = _join_cycle(q, gp)
                if not validate_cycle(g, cycle_seq):
                    raise ConstructionFailed(f"assembled cycle is not simple: {cycle_seq}")
                pairs.append((len(cycle_seq), cycle_seq))
        lengths, cycles = _best_run_cycles(pairs)
        if len(lengths) < k:
            raise ConstructionFailed(
                f"achieved run {list(lengths)} shorter than promised {k}")
        tr.add("result", lengths=list(lengths))
        return cycles, tr.freeze()

    # remainder has end-blocks
    d1_verts, x = blocks[0]
    if x is None:
        raise ConstructionFailed("end-block without a door in a disconnected remainder")
    a_set = d1_verts - {x}
    g2_set = set(g1_verts) - a_set
    i = find_quasi_diagonal_index(g, c, a_set, g2_set)
    L = len(cyc)
    v_mask = g.adj[cyc[i]] & _mask_of(a_set)
    u_mask = g.adj[cyc[(i + s) % L]] & _mask_of(g2_set)
    v = (v_mask & -v_mask).bit_length() - 1
    u = (u_mask & -u_mask).bit_length() - 1
    tr.add("quasi-diagonal-index", i=i, v=v, u=u, block=sorted(d1_verts), door=x)

    sub_d1, idx_d1 = induced_subgraph(g, sorted(d1_verts))
    inv_d1 = {new: old for old, new in idx_d1.items()}
    fam_d1 = max_admissible_family(sub_d1, idx_d1[x], idx_d1[v], True, budget=budget)
    if len(fam_d1) < k - 2:
        raise ConstructionFailed(
            f"admissible-family guarantee not realized in end-block: {len(fam_d1)} < {k - 2}")
    tr.add("end-block-family(statement-level)", lengths=list(fam_d1.lengths),
           kind=fam_d1.kind.value)

    if fam_d1.kind is FamilyKind.ADMISSIBLE_STEP2:
        arc_fwd = tuple(cyc[(i + t) % L] for t in range(s + 1))
        arc_bwd = tuple(cyc[(i - t) % L] for t in range(s + 2))
        q1 = (v,) + arc_fwd + (u,)
        q2 = (v,) + arc_bwd + (u,)
        t_path = _bfs_path(g, x, u, _mask_of(g2_set))
        if t_path is None:
            raise ConstructionFailed("no tail from the block door to the far anchor")
        r1 = q1 + t_path[::-1][1:]
        r2 = q2 + t_path[::-1][1:]
        consec = make_family(g, v, x, [r1, r2])
        admis = _family_to_global(fam_d1, inv_d1, g)  # x -> v
        tr.add("arc-pair-with-tail", arc_lengths=[len(q1) - 1, len(q2) - 1],
               tail_length=len(t_path) - 1)
        merged = merge_families(consec, admis,
                                within={w for p in consec.paths for w in p}, host=g)
        pairs = list(zip(merged.lengths, merged.items))
    else:
        if len(blocks) < 2:
            raise ConstructionFailed("remainder has a single end-block only")
        d2_verts, y = blocks[1]
        if y is None:
            raise ConstructionFailed("second end-block without a door")
        z_candidates = sorted(w for w in d2_verts - {y} if g.adj[w] & cyc_mask)
        if not z_candidates:
            raise ConstructionFailed(
                "second end-block has no interior vertex touching the cycle")
        z = z_candidates[0]
        w_on_c = min(bits(g.adj[z] & cyc_mask))
        # cycle detour from v to z through the cycle: shorter arc, forward on ties
        pw = cyc.index(w_on_c)
        fwd_len = (pw - i) % L
        bwd_len = (i - pw) % L
        if fwd_len <= bwd_len:
            arc = tuple(cyc[(i + t) % L] for t in range(fwd_len + 1))
        else:
            arc = tuple(cyc[(i - t) % L] for t in range(bwd_len + 1))
        p_vz = (v,) + arc + (z,)
        if not _path_ok(g, p_vz):
            raise ConstructionFailed(f"cycle detour is not a path: {p_vz}")
        allowed = _mask_of((set(g1_verts) - (d1_verts - {x}) - (d2_verts - {y})))
        p_xy = _bfs_path(g, x, y, allowed)
        if p_xy is None:
            raise ConstructionFailed(
                "no connector between the block doors avoiding both end-blocks")
        sub_d2, idx_d2 = induced_subgraph(g, sorted(d2_verts))
        inv_d2 = {new: old for old, new in idx_d2.items()}
        fam_d2 = max_admissible_family(sub_d2, idx_d2[z], idx_d2[y], True, budget=budget)
        if len(fam_d2) < k - 2:
            raise ConstructionFailed(
                f"admissible-family guarantee not realized in second end-block: "
                f"{len(fam_d2)} < {k - 2}")
        tr.add("end-block-chain", second_block=sorted(d2_verts), door=y, z=z,
               detour_length=len(p_vz) - 1, connector_length=len(p_xy) - 1,
               second_lengths=list(fam_d2.lengths), second_kind=fam_d2.kind.value)
        consec_paths = [_map_path(p, inv_d1) + p_vz[1:] for p in fam_d1.paths]
        consec = make_family(g, x, z, consec_paths)
        admis_paths = [_map_path(p, inv_d2) + p_xy[::-1][1:] for p in fam_d2.paths]
        admis = make_family(g, z, x, admis_paths)
        merged = merge_families(consec, admis,
                                within={w for p in consec.paths for w in p}, host=g)
        pairs = list(zip(merged.lengths, merged.items))

    tr.add("merge", lengths=[l for l, _ in pairs])
    lengths, cycles = _best_run_cycles(pairs)
    if len(lengths) < k:
        raise ConstructionFailed(
            f"achieved run {list(lengths)} shorter than promised {k}")
    tr.add("result", lengths=list(lengths))
    return cycles, tr.freeze()


def _path_ok(g: Graph, seq: tuple[int, ...]) -> bool:
    if len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[t], seq[t + 1]) for t in range(len(seq) - 1))


# --------------------------------------------------------------------------
# batch scanning
# --------------------------------------------------------------------------

@dataclass
class ScanEntry:
    index: int
    graph6: str
    theorem: str
    k: Optional[int]
    verdict: str                       # holds|violation|hypotheses_not_met|excepted|error
    witness_lengths: Optional[list[int]] = None
    trace: Optional[list[str]] = None
    error: Optional[str] = None

    def to_obj(self) -> dict:
        obj = {
            "index": self.index,
            "graph6": self.graph6,
            "theorem": self.theorem,
            "k": self.k,
            "verdict": self.verdict,
            "witness_lengths": self.witness_lengths,
        }
        if self.trace is not None:
            obj["trace"] = self.trace
        if self.error is not None:
            obj["error"] = self.error
        return obj


@dataclass
class ScanReport:
    summary: dict
    entries: list[ScanEntry] = field(default_factory=list)

    def to_obj(self) -> dict:
        return {"summary": self.summary,
                "entries": [e.to_obj() for e in self.entries]}


def _witness_lengths(v: Verdict) -> Optional[list[int]]:
    if not v.witness:
        return None
    for key in ("odd_run", "run"):
        if key in v.witness:
            return list(v.witness[key])
    return None


def _entries_for_graph(index: int, payload, theorem: TheoremId, ks: list[int],
                       budget: Optional[int], max_n: int, force: bool,
                       ) -> list[ScanEntry]:
    if isinstance(payload, Graph):
        g = payload
        g6 = encode_graph6(g)
    else:
        text = payload.decode("ascii", "replace") if isinstance(payload, bytes) else str(payload)
        text = text.strip()
        try:
            g = decode_graph6(text)
            g6 = text
        except GraphLibError as exc:
            return [ScanEntry(index, text, theorem.value, None, "error",
                              error=f"{type(exc).__name__}: {exc}")]
    facts = GraphFacts(g, budget=budget, max_n=max_n, force=force)
    out = []
    for k in ks:
        try:
            v = check(facts, theorem, k)
            out.append(ScanEntry(index, g6, theorem.value, k, v.verdict,
                                 witness_lengths=_witness_lengths(v)))
        except GraphLibError as exc:
            out.append(ScanEntry(index, g6, theorem.value, k, "error",
                                 error=f"{type(exc).__name__}: {exc}"))
    return out


def _scan_chunk(args) -> list[ScanEntry]:
    chunk, theorem_value, ks, budget, max_n, force = args
    theorem = TheoremId(theorem_value)
    out = []
    for index, payload in chunk:
        out.extend(_entries_for_graph(index, payload, theorem, ks, budget, max_n, force))
    return out


def _summarize(entries: Iterable[ScanEntry]) -> dict:
    summary = {"total": 0, "hypotheses_met": 0, "holds": 0, "excepted": 0,
               "violations": 0, "errors": 0}
    for e in entries:
        summary["total"] += 1
        if e.verdict == "holds":
            summary["hypotheses_met"] += 1
            summary["holds"] += 1
        elif e.verdict == "violation":
            summary["hypotheses_met"] += 1
            summary["violations"] += 1
        elif e.verdict == "excepted":
            summary["excepted"] += 1
        elif e.verdict == "error":
            summary["errors"] += 1
    return summary


def scan_catalog(records: Iterable, theorem: TheoremId, k_range: Iterable[int],
                 *, jobs: int = 1, budget: Optional[int] = None,
                 max_n: int = DEFAULT_MAX_N, force: bool = False,
                 entries_mode: str = "all", chunk_size: int = 256) -> ScanReport:
    """Check one theorem over a stream of graphs for every k in range.

    ``records`` may mix Graph objects and graph6 lines; malformed lines
    become per-entry errors and never abort the scan.  The spectrum is
    computed at most once per graph and shared across all k.  With
    ``jobs > 1`` graphs are distributed over a process pool; entries are
    assembled in input order either way, so reports are byte-identical
    for identical inputs.  ``entries_mode="violations"`` keeps only
    violation/error entries (the summary still counts everything).
    """
    ks = sorted(set(k_range))
    if not ks or ks[0] < 1 or ks[-1] > 64:
        raise BadParams("k range must be non-empty and within 1..64")
    if entries_mode not in ("all", "violations"):
        raise BadParams("entries_mode must be 'all' or 'violations'")
    indexed = enumerate(records)
    entries: list[ScanEntry] = []
    if jobs <= 1:
        for index, payload in indexed:
            entries.extend(_entries_for_graph(
                index, payload, theorem, ks, budget, max_n, force))
    else:
        import multiprocessing as mp

        def chunks():
            buf = []
            for item in indexed:
                buf.append(item)
                if len(buf) >= chunk_size:
                    yield (buf, theorem.value, ks, budget, max_n, force)
                    buf = []
            if buf:
                yield (buf, theorem.value, ks, budget, max_n, force)

        with mp.Pool(jobs) as pool:
            for part in pool.imap(_scan_chunk, chunks()):
                entries.extend(part)
    summary = _summarize(entries)
    if entries_mode == "violations":
        entries = [e for e in entries if e.verdict in ("violation", "error")]
    return ScanReport(summary, entries)
