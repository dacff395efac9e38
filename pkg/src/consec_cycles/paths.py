"""Path enumeration between vertex pairs and length-progression families.

A family of x-y paths is *consecutive* when its distinct lengths step by
one, and *admissible* when the shortest member has at least two edges
and the distinct lengths step uniformly by one or by two.  Merging a
consecutive family with an admissible one through a joint vertex yields
a guaranteed run of consecutive total lengths; the arithmetic core of
that merge is exposed separately so it can be property-tested on its
own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .connectivity import is_2_connected, bipartition_or_odd_cycle, is_bipartite
from .cycles import default_budget, validate_cycle
from .errors import (
    BadParams,
    BudgetExceeded,
    Cancelled,
    HypothesisFailed,
    NotAdmissible,
    NotConsecutive,
    OutOfRange,
    OverlapViolation,
    WitnessNotFound,
)
from .graph import Graph


class FamilyKind(Enum):
    CONSECUTIVE = "consecutive"          # distinct lengths step by 1
    ADMISSIBLE_STEP1 = "admissible-1"    # step 1 and shortest length >= 2
    ADMISSIBLE_STEP2 = "admissible-2"    # step 2 and shortest length >= 2
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class PathFamily:
    """x-y paths with their sorted length multiset and classification."""

    x: int
    y: int
    paths: tuple[tuple[int, ...], ...]
    kind: FamilyKind

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(p) - 1 for p in self.paths))

    @property
    def distinct_lengths(self) -> tuple[int, ...]:
        return tuple(sorted({len(p) - 1 for p in self.paths}))

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class ParityPair:
    """One odd and one even x-y path in the same host graph."""

    odd_path: tuple[int, ...]
    even_path: tuple[int, ...]


def validate_path(g: Graph, seq: tuple[int, ...], x: int, y: int) -> bool:
    """Is ``seq`` a simple x-y path using only edges of g?"""
    if len(seq) < 1 or seq[0] != x or seq[-1] != y:
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def classify_lengths(lengths: tuple[int, ...]) -> FamilyKind:
    """Classification of a distinct, sorted length tuple."""
    if not lengths:
        return FamilyKind.UNCLASSIFIED
    diffs = {b - a for a, b in zip(lengths, lengths[1:])}
    if diffs <= {1}:
        if lengths[0] >= 2:
            return FamilyKind.ADMISSIBLE_STEP1
        return FamilyKind.CONSECUTIVE
    if diffs == {2} and lengths[0] >= 2:
        return FamilyKind.ADMISSIBLE_STEP2
    return FamilyKind.UNCLASSIFIED


def make_family(g: Graph, x: int, y: int, paths) -> PathFamily:
    """Validate paths and classify the family by its distinct lengths."""
    tup = tuple(tuple(p) for p in paths)
    for p in tup:
        if not validate_path(g, p, x, y):
            raise BadParams(f"not a simple {x}-{y} path of the host graph: {p}")
    distinct = tuple(sorted({len(p) - 1 for p in tup}))
    return PathFamily(x, y, tup, classify_lengths(distinct))


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def xy_path_lengths(
    g: Graph,
    x: int,
    y: int,
    *,
    forbid_edge_xy: bool = False,
    budget: Optional[int] = None,
    cancel: Optional[Callable[[], bool]] = None,
) -> tuple[tuple[int, ...], dict[int, tuple[int, ...]]]:
    """Exact set of simple x-y path lengths, one witness per length.

    Exhaustive backtracking in ascending-neighbor order, so each witness
    is the lexicographically smallest path of its length.  With
    ``forbid_edge_xy`` the direct edge (if present) is excluded.
    """
    if x == y:
        raise BadParams("endpoints must differ")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside [0, {g.n})")
    adj = g.adj
    if forbid_edge_xy and g.has_edge(x, y):
        adj = g.remove_edge(x, y).adj
    limit = budget if budget is not None else default_budget()
    witnesses: dict[int, tuple[int, ...]] = {}
    path = [x]
    nodes = 0

    def extend(last: int, visited: int) -> None:
        nonlocal nodes
        m = adj[last] & ~visited
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded(f"path enumeration exceeded {limit} nodes")
            if cancel is not None and not nodes & 0xFFF and cancel():
                raise Cancelled("path enumeration cancelled")
            if v == y:
                length = len(path)
                if length not in witnesses:
                    witnesses[length] = tuple(path) + (y,)
                continue
            path.append(v)
            extend(v, visited | b)
            path.pop()

    extend(x, 1 << x)
    return tuple(sorted(witnesses)), witnesses


def max_admissible_family(
    g: Graph,
    x: int,
    y: int,
    forbid_edge_xy: bool = True,
    *,
    budget: Optional[int] = None,
    cancel: Optional[Callable[[], bool]] = None,
) -> PathFamily:
    """Largest admissible family of x-y paths (step 1 preferred on ties).

    An admissible family is determined by its distinct length set, so the
    maximum size is the longest step-1 or step-2 run among realizable
    lengths >= 2; the returned paths are the lexicographically smallest
    witness per chosen length.
    """
    _, witnesses = xy_path_lengths(
        g, x, y, forbid_edge_xy=forbid_edge_xy, budget=budget, cancel=cancel)
    usable = sorted(l for l in witnesses if l >= 2)
    best: list[int] = []
    best_step = 1
    for step in (1, 2):
        # longest arithmetic chain of this step within the length set;
        # lengths off the chain do not break it
        chain: dict[int, int] = {}
        for l in usable:
            chain[l] = chain.get(l - step, 0) + 1
        if chain:
            top = max(chain.values())
            if top > len(best):
                end = min(l for l, c in chain.items() if c == top)
                best = [end - step * i for i in range(top)][::-1]
                best_step = step
    paths = tuple(witnesses[l] for l in best)
    if not best:
        return PathFamily(x, y, (), FamilyKind.UNCLASSIFIED)
    kind = (FamilyKind.ADMISSIBLE_STEP1 if best_step == 1
            else FamilyKind.ADMISSIBLE_STEP2)
    return PathFamily(x, y, paths, kind)


# --------------------------------------------------------------------------
# odd/even path pair
# --------------------------------------------------------------------------

def odd_even_paths(
    g: Graph,
    x: int,
    y: int,
    *,
    budget: Optional[int] = None,
    cancel: Optional[Callable[[], bool]] = None,
) -> ParityPair:
    """An odd and an even simple x-y path in a non-bipartite graph.

    Requires g non-bipartite and g+xy 2-connected (HypothesisFailed
    otherwise).  Construction: take a shortest odd cycle, pick an x-y
    path (avoiding the direct edge) that meets the cycle in the most
    vertices, and reroute its middle around the two arcs of the cycle,
    whose lengths have different parity.  Under the hypotheses this
    always succeeds; WitnessNotFound would be a falsification signal.
    """
    if x == y:
        raise BadParams("endpoints must differ")
    if is_bipartite(g):
        raise HypothesisFailed("graph is bipartite")
    if not is_2_connected(g.add_edge(x, y)):
        raise HypothesisFailed("graph plus the endpoint edge is not 2-connected")

    cyc = bipartition_or_odd_cycle(g).odd_cycle
    assert cyc is not None
    on_cycle = set(cyc)
    cyc_mask = 0
    for v in cyc:
        cyc_mask |= 1 << v

    adj = g.remove_edge(x, y).adj if g.has_edge(x, y) else g.adj
    limit = budget if budget is not None else default_budget()
    nodes = 0
    best: Optional[tuple[int, ...]] = None
    best_meet = -1
    path = [x]

    def extend(last: int, visited: int, meet: int) -> bool:
        nonlocal nodes, best, best_meet
        m = adj[last] & ~visited
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded(f"path search exceeded {limit} nodes")
            if cancel is not None and not nodes & 0xFFF and cancel():
                raise Cancelled("path search cancelled")
            gain = 1 if (cyc_mask >> v) & 1 else 0
            if v == y:
                if meet + gain > best_meet:
                    best_meet = meet + gain
                    best = tuple(path) + (y,)
                    if best_meet == len(cyc):
                        return True
                continue
            path.append(v)
            done = extend(v, visited | b, meet + gain)
            path.pop()
            if done:
                return True
        return False

    extend(x, 1 << x, 1 if (cyc_mask >> x) & 1 else 0)
    if best is None or best_meet < 2:
        raise WitnessNotFound(
            "no x-y path meeting the odd cycle twice; parity rerouting impossible")

    first = next(i for i, v in enumerate(best) if v in on_cycle)
    last = next(i for i in range(len(best) - 1, -1, -1) if best[i] in on_cycle)
    a, b = best[first], best[last]
    prefix = best[:first + 1]          # x .. a, meets cycle only at a
    suffix = best[last:]               # b .. y, meets cycle only at b
    ia, ib = cyc.index(a), cyc.index(b)
    arc_fwd = tuple(cyc[(ia + t) % len(cyc)] for t in range((ib - ia) % len(cyc) + 1))
    arc_bwd = tuple(cyc[(ib + t) % len(cyc)] for t in range((ia - ib) % len(cyc) + 1))[::-1]
    pair = [prefix + arc[1:-1] + suffix for arc in (arc_fwd, arc_bwd)]
    lengths = [len(p) - 1 for p in pair]
    if lengths[0] % 2 == lengths[1] % 2:
        raise WitnessNotFound("cycle arcs failed to produce both parities")
    odd_p, even_p = (pair[0], pair[1]) if lengths[0] % 2 else (pair[1], pair[0])
    for p in (odd_p, even_p):
        if not validate_path(g, p, x, y):
            raise WitnessNotFound(f"rerouted path is not simple: {p}")
    return ParityPair(odd_path=odd_p, even_path=even_p)


# --------------------------------------------------------------------------
# merge lemma machinery
# --------------------------------------------------------------------------

def merged_length_run(
    consec_lengths, admissible_lengths, step: Optional[int] = None,
) -> tuple[int, ...]:
    """Longest difference-1 run in the pairwise sum of two length sets.

    ``consec_lengths`` must be a difference-1 progression of size >= 2
    and ``admissible_lengths`` a difference-1 or difference-2
    progression (of size >= 1).  The guaranteed run size is s+t-1 when
    the second set steps by one, and s+2(t-1) when it steps by two.
    """
    a = sorted(set(consec_lengths))
    b = sorted(set(admissible_lengths))
    if len(a) < 2 or any(y - x != 1 for x, y in zip(a, a[1:])):
        raise NotConsecutive(f"not a difference-1 progression of size >= 2: {a}")
    diffs = {y - x for x, y in zip(b, b[1:])}
    if not b or (diffs and diffs not in ({1}, {2})):
        raise NotAdmissible(f"not a uniform step-1 or step-2 progression: {b}")
    if step is not None and diffs and diffs != {step}:
        raise NotAdmissible(f"expected step {step}, got steps {diffs}")
    sums = sorted({x + y for x in a for y in b})
    best: list[int] = []
    cur: list[int] = []
    for v in sums:
        if cur and v == cur[-1] + 1:
            cur.append(v)
        else:
            cur = [v]
        if len(cur) > len(best):
            best = list(cur)
    return tuple(best)


@dataclass(frozen=True)
class MergeResult:
    """Concatenation witnesses realizing a consecutive run of total lengths."""

    items: tuple[tuple[int, ...], ...]   # x-z paths, or cycles when x == z
    lengths: tuple[int, ...]
    run_length: int
    closes_cycles: bool


def merge_families(
    consec: PathFamily,
    admissible: PathFamily,
    within: Optional[set[int]] = None,
    *,
    host: Optional[Graph] = None,
) -> MergeResult:
    """Concatenate a consecutive x-y family with an admissible y-z family.

    The consecutive family must live inside the vertex set ``within``
    (default: the union of its own paths) and the admissible family may
    meet that set only at the joint vertex y, plus at x when x == z and
    the concatenations close into cycles.  Violations raise
    OverlapViolation; classification mismatches raise NotConsecutive or
    NotAdmissible.  Returns witnesses for the longest difference-1 run
    of total lengths, which is at least s+t-1 (s+2(t-1) when the
    admissible family steps by two).
    """
    if consec.y != admissible.x:
        raise BadParams(
            f"families do not share the joint vertex: {consec.y} vs {admissible.x}")
    if len(consec) < 2 or classify_lengths(consec.distinct_lengths) not in (
            FamilyKind.CONSECUTIVE, FamilyKind.ADMISSIBLE_STEP1):
        raise NotConsecutive(
            f"consecutive side must have >= 2 paths stepping by 1: {consec.lengths}")
    adm_kind = classify_lengths(admissible.distinct_lengths)
    if not admissible.paths or adm_kind not in (
            FamilyKind.ADMISSIBLE_STEP1, FamilyKind.ADMISSIBLE_STEP2):
        raise NotAdmissible(
            f"admissible side must step uniformly by 1 or 2 with shortest >= 2: "
            f"{admissible.lengths}")

    x, y, z = consec.x, consec.y, admissible.y
    w = set(within) if within is not None else {v for p in consec.paths for v in p}
    for p in consec.paths:
        if not set(p) <= w:
            raise OverlapViolation(f"consecutive path leaves its vertex set: {p}")
    allowed = {y} | ({x} if x == z else set())
    for q in admissible.paths:
        bad = (set(q) & w) - allowed
        if bad:
            raise OverlapViolation(
                f"admissible path meets the consecutive side at {sorted(bad)}")

    by_len_p = {}
    for p in consec.paths:
        by_len_p.setdefault(len(p) - 1, p)
    by_len_q = {}
    for q in admissible.paths:
        by_len_q.setdefault(len(q) - 1, q)

    run = merged_length_run(tuple(by_len_p), tuple(by_len_q))
    closes = x == z
    items = []
    lengths = []
    for total in run:
        pick = min(
            (lp, lq) for lp in by_len_p for lq in by_len_q if lp + lq == total)
        p, q = by_len_p[pick[0]], by_len_q[pick[1]]
        joined = p + q[1:-1] if closes else p + q[1:]
        items.append(joined)
        lengths.append(total)
        if host is not None:
            ok = (validate_cycle(host, joined) if closes
                  else validate_path(host, joined, x, z))
            if not ok:
                raise OverlapViolation(f"concatenation is not simple: {joined}")
    return MergeResult(tuple(items), tuple(lengths), len(run), closes)
