"""Bipartiteness with witnesses, blocks, cut structure, and connectivity.

Everything here is the hypothesis side of the theorem checkers: which
graphs are 2- or 3-connected, which are bipartite (and if not, a
shortest odd cycle as the witness), how a graph decomposes into blocks,
and whether deleting a vertex set leaves a connected remainder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import Disconnected, EmptyGraph, NotTwoConnected, OutOfRange
from .graph import Graph, bits


# --------------------------------------------------------------------------
# flood-fill primitives (bitmask based; the hot path for the catalog scans)
# --------------------------------------------------------------------------

def _reach(adj: tuple[int, ...], inside: int, start_bit: int) -> int:
    """Vertices reachable from start_bit staying inside the mask ``inside``."""
    reach = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & inside & ~reach
        reach |= frontier
    return reach


def _connected_within(adj: tuple[int, ...], inside: int) -> bool:
    """Is the induced subgraph on the mask ``inside`` connected (or empty)?"""
    if inside == 0:
        return True
    start = inside & -inside
    return _reach(adj, inside, start) == inside


def is_connected(g: Graph) -> bool:
    """True when g is connected (the empty graph counts as connected)."""
    return _connected_within(g.adj, g.vertex_mask)


def is_bipartite(g: Graph) -> bool:
    """Two-colorability check without witness extraction."""
    color = bytearray(255 for _ in range(g.n))
    adj = g.adj
    for s in range(g.n):
        if color[s] != 255:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            cu = color[u]
            for v in bits(adj[u]):
                if color[v] == 255:
                    color[v] = cu ^ 1
                    stack.append(v)
                elif color[v] == cu:
                    return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """No vertex set of size < k disconnects g, and n > k.

    Matches kappa(g) >= k with kappa(K_n) = n-1.  Intended for small k;
    enumerates candidate cuts of size < k.
    """
    n = g.n
    if n <= k:
        return False
    full = g.vertex_mask
    if not _connected_within(g.adj, full):
        return False
    for size in range(1, k):
        for cut in combinations(range(n), size):
            rem = full
            for v in cut:
                rem &= ~(1 << v)
            if not _connected_within(g.adj, rem):
                return False
    return True


def is_2_connected(g: Graph) -> bool:
    return is_k_connected(g, 2)


def is_3_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


# --------------------------------------------------------------------------
# bipartition / odd-cycle witness
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Bipartition:
    """Either a 2-coloring of a connected graph or an odd-cycle witness."""

    parts: Optional[tuple[frozenset[int], frozenset[int]]]
    odd_cycle: Optional[tuple[int, ...]]

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def _shortest_odd_cycle(g: Graph) -> tuple[int, ...]:
    """Shortest odd cycle of a connected non-bipartite graph.

    Layered search on the parity double cover: for each root r the
    distance from (r, even) to (r, odd) is the shortest odd closed walk
    through r, and the global minimum over roots is attained by a simple
    cycle.  Roots are scanned in ascending order, so the witness is
    deterministic.
    """
    n = g.n
    adj = g.adj
    best_len = None
    best_walk = None
    for r in range(n):
        # BFS over states v*2 + parity
        dist = [-1] * (2 * n)
        par = [-1] * (2 * n)
        start = 2 * r
        dist[start] = 0
        queue = [start]
        head = 0
        goal = 2 * r + 1
        while head < len(queue):
            s = queue[head]
            head += 1
            if best_len is not None and dist[s] + 1 >= best_len:
                continue
            v, p = s >> 1, s & 1
            for w in bits(adj[v]):
                t = 2 * w + (p ^ 1)
                if dist[t] == -1:
                    dist[t] = dist[s] + 1
                    par[t] = s
                    queue.append(t)
        if dist[goal] != -1 and (best_len is None or dist[goal] < best_len):
            walk = []
            s = goal
            while s != -1:
                walk.append(s >> 1)
                s = par[s]
            walk.reverse()  # r ... r, odd length
            best_len = dist[goal]
            best_walk = tuple(walk[:-1])
    if best_walk is None:
        raise AssertionError("graph reported non-bipartite but no odd walk found")
    if len(set(best_walk)) != len(best_walk):
        raise AssertionError("minimal odd closed walk was not simple")
    return best_walk


def bipartition_or_odd_cycle(g: Graph) -> Bipartition:
    """Two-coloring of a connected graph, or a shortest odd cycle."""
    if not is_connected(g) or g.n == 0:
        raise Disconnected("bipartition is defined per connected graph")
    color = bytearray(255 for _ in range(g.n))
    color[0] = 0
    stack = [0]
    odd = False
    while stack and not odd:
        u = stack.pop()
        cu = color[u]
        for v in bits(g.adj[u]):
            if color[v] == 255:
                color[v] = cu ^ 1
                stack.append(v)
            elif color[v] == cu:
                odd = True
                break
    if odd:
        return Bipartition(parts=None, odd_cycle=_shortest_odd_cycle(g))
    part0 = frozenset(v for v in range(g.n) if color[v] == 0)
    part1 = frozenset(range(g.n)) - part0
    return Bipartition(parts=(part0, part1), odd_cycle=None)


# --------------------------------------------------------------------------
# block-cut tree
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cut vertices and end-block structure of a connected graph.

    ``blocks`` are vertex sets in ascending order of (min vertex, sorted
    tuple).  ``end_blocks`` are indices of blocks containing at most one
    cut vertex; ``end_block_cut_vertex`` maps those that do contain one
    to it.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    end_blocks: tuple[int, ...]
    end_block_cut_vertex: dict[int, int] = field(compare=False)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks and cut vertices."""
    n = g.n
    if n == 0 or not is_connected(g):
        raise Disconnected("block decomposition is defined per connected graph")
    if n == 1:
        return BlockCutTree((frozenset({0}),), frozenset(), (0,), {})

    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut: set[int] = set()
    raw_blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    # iterative DFS from 0 (g is connected)
    it_idx = [0] * n
    disc[0] = low[0] = timer
    timer += 1
    dfs = [0]
    root_children = 0
    while dfs:
        v = dfs[-1]
        if it_idx[v] < len(nbrs[v]):
            w = nbrs[v][it_idx[v]]
            it_idx[v] += 1
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                dfs.append(w)
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            dfs.pop()
            if not dfs:
                break
            u = dfs[-1]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add(a)
                    block.add(b)
                    if (a, b) == (u, v):
                        break
                raw_blocks.append(frozenset(block))
                if u != 0 or root_children > 1:
                    cut.add(u)

    blocks = tuple(sorted(raw_blocks, key=lambda b: (min(b), sorted(b))))
    cut_vertices = frozenset(cut)
    end_blocks = []
    end_cut: dict[int, int] = {}
    for i, b in enumerate(blocks):
        inside = sorted(b & cut_vertices)
        if len(inside) <= 1:
            end_blocks.append(i)
            if inside:
                end_cut[i] = inside[0]
    return BlockCutTree(blocks, cut_vertices, tuple(end_blocks), end_cut)


# --------------------------------------------------------------------------
# connectivity numbers and separators
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    is_2_connected: bool
    is_3_connected: bool


def vertex_connectivity(g: Graph) -> ConnectivityReport:
    """Exact vertex connectivity by ascending cut enumeration.

    kappa(K_n) = n-1 by convention (including kappa(K_1) = 0).  Exact and
    intended for desk-scale graphs (n <= 16 or so).
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("connectivity undefined on the empty graph")
    full = g.vertex_mask
    if all(g.adj[v] == full ^ (1 << v) for v in range(n)):
        kappa = n - 1
    else:
        kappa = 0
        for size in range(0, n - 1):
            hit = False
            for cut in combinations(range(n), size):
                rem = full
                for v in cut:
                    rem &= ~(1 << v)
                if not _connected_within(g.adj, rem):
                    hit = True
                    break
            if hit:
                kappa = size
                break
        else:
            kappa = n - 1
    return ConnectivityReport(kappa, kappa >= 2, kappa >= 3)


def is_nonseparating(g: Graph, removed: Iterable[int]) -> bool:
    """Does deleting the vertex set leave at most one component?

    An empty remainder counts as non-separating: vacuous disconnection
    is not separation.
    """
    mask = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside [0, {g.n})")
        mask |= 1 << v
    rem = g.vertex_mask & ~mask
    return _connected_within(g.adj, rem)


def two_cut_witness(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair whose removal disconnects g.

    Requires g 2-connected; returns None when no pair disconnects (the
    graph is 3-connected, or too small to have a separating pair).
    """
    if not is_2_connected(g):
        raise NotTwoConnected("two-cut search is defined on 2-connected graphs")
    full = g.vertex_mask
    for x, y in combinations(range(g.n), 2):
        rem = full & ~(1 << x) & ~(1 << y)
        if not _connected_within(g.adj, rem):
            return (x, y)
    return None


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    out = []
    seen = 0
    full = g.vertex_mask
    rest = full
    while rest:
        start = rest & -rest
        comp = _reach(g.adj, full & ~seen, start)
        out.append(frozenset(bits(comp)))
        seen |= comp
        rest = full & ~seen
    return out
