"""Immutable bitset graphs, the graph6 codec, and named-family generators.

Vertices are dense integers 0..n-1.  Adjacency is one Python int per
vertex used as a bitmask, which keeps neighbourhood intersections,
degree counts and flood fills at word speed; iterating a mask yields
neighbours in ascending order, so the masks double as sorted neighbour
sets.  Graphs are immutable and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BadParams, EmptyGraph, MalformedRecord, OutOfRange, UnsupportedVariant

MAX_VERTICES = 1 << 16


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise BadParams(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise BadParams(f"loop at vertex {u}")
            if (adj[u] >> v) & 1:
                raise BadParams(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj_masks(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Trusted constructor from prebuilt adjacency masks (no validation)."""
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    # -- queries --------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            for v in bits(m):
                yield (u, u + 1 + v)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs -------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return the graph with edge uv added (self if already present)."""
        if u == v:
            raise BadParams("cannot add a loop")
        if self.has_edge(u, v):
            return self
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph.from_adj_masks(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Return the graph with edge uv removed (self if absent)."""
        if not self.has_edge(u, v):
            return self
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adj_masks(self.n, tuple(adj))

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    degree_sequence: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    """Minimum degree and per-vertex degree sequence of ``g``."""
    if g.n == 0:
        raise EmptyGraph("degree profile undefined on the empty graph")
    seq = tuple(m.bit_count() for m in g.adj)
    return DegreeProfile(min(seq), seq)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices``, relabelled densely.

    Returns the new graph and the old->new index map.  Relabelling is by
    ascending old index.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside [0, {g.n})")
    index = {old: new for new, old in enumerate(keep)}
    adj = [0] * len(keep)
    for new, old in enumerate(keep):
        m = g.adj[old]
        for w in keep[new + 1:]:
            if (m >> w) & 1:
                adj[new] |= 1 << index[w]
                adj[index[w]] |= 1 << new
    return Graph.from_adj_masks(len(keep), tuple(adj)), index


# --------------------------------------------------------------------------
# graph6 codec
#
# Byte layout: N(n) is n+63 for n <= 62, else 126 followed by three bytes
# carrying n in 18 bits big-endian, six bits (+63) per byte.  Then the upper
# triangle of the adjacency matrix, read column by column in the order
# (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups, zero-padded, each
# group +63.  ASCII, one record per line.
# --------------------------------------------------------------------------

def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-by-column upper triangle: all (u, v) with u < v, v ascending
    for v in range(1, n):
        for u in range(v):
            yield (u, v)


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a canonical (shortest size header) graph6 record."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    out = [head]
    group = 0
    nbits = 0
    for u, v in _triangle_pairs(n):
        group = (group << 1) | ((g.adj[u] >> v) & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(group + 63))
            group = 0
            nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 record into a :class:`Graph`.

    Raises :class:`MalformedRecord` for structurally bad records and
    :class:`UnsupportedVariant` for sparse6/digraph6/header lines.
    """
    if isinstance(line, str):
        data = line.encode("ascii", errors="replace")
    else:
        data = bytes(line)
    data = data.rstrip(b"\r\n")
    if not data:
        raise MalformedRecord("empty record")
    if data[0:1] in (b":", b";", b"&"):
        raise UnsupportedVariant("sparse6/incremental/digraph6 records are not supported")
    if data[0:1] == b">":
        raise UnsupportedVariant("format header line")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedRecord("byte outside printable graph6 range 63..126")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise UnsupportedVariant("8-byte size class (n >= 2^18) is not supported")
        if len(data) < 4:
            raise MalformedRecord("truncated multi-byte vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise MalformedRecord(f"vertex count {n} exceeds {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise MalformedRecord(f"body length {len(body)} != expected {expect} groups")

    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[i // 6] - 63
            if (byte >> (5 - i % 6)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    # trailing pad bits must be zero for a canonical record
    if nbits % 6:
        pad = body[-1] - 63
        if pad & ((1 << (6 - nbits % 6)) - 1):
            raise MalformedRecord("nonzero padding bits")
    return Graph.from_adj_masks(n, tuple(adj))


# --------------------------------------------------------------------------
# named families
# --------------------------------------------------------------------------

def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 0:
        raise BadParams("n must be >= 0")
    full = (1 << n) - 1
    return Graph.from_adj_masks(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_minus_matching(n: int, m: int) -> Graph:
    """K_n with the m lowest-index disjoint edges (0,1),(2,3),... removed."""
    if m < 1 or 2 * m > n:
        raise BadParams(f"matching of {m} edges does not fit in {n} vertices")
    g = complete(n)
    for i in range(m):
        g = g.remove_edge(2 * i, 2 * i + 1)
    return g


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise BadParams("part sizes must be >= 0")
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    return Graph.from_adj_masks(a + b, tuple(right if v < a else left for v in range(a + b)))


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


def cycle_blowup(cycle_len: int, part_size: int) -> Graph:
    """Blow each vertex of C_cycle_len up into an independent set.

    Vertex (i, j) maps to part_size*i + j; consecutive parts are joined
    completely.  With an odd cycle_len and part_size >= 2 this yields a
    triangle-free, non-bipartite, regular fixture.
    """
    if cycle_len < 3 or part_size < 1:
        raise BadParams("need cycle_len >= 3 and part_size >= 1")
    edges = []
    for i in range(cycle_len):
        for j in range(part_size):
            for j2 in range(part_size):
                edges.append((part_size * i + j, part_size * ((i + 1) % cycle_len) + j2))
    return Graph(cycle_len * part_size, edges)


ALL_LABELED_MAX_N = 7


def all_labeled(n: int) -> Iterator[Graph]:
    """All 2^{n(n-1)/2} labeled graphs on n vertices, by ascending edge mask.

    Bit i of the mask is edge i in graph6 column order.  Capped at n=7;
    larger exhaustive populations must come from external catalogs.
    """
    if not 0 <= n <= ALL_LABELED_MAX_N:
        raise BadParams(f"all_labeled supports 0 <= n <= {ALL_LABELED_MAX_N}")
    pairs = list(_triangle_pairs(n))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        rest = mask
        i = 0
        while rest:
            if rest & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            rest >>= 1
            i += 1
        yield Graph.from_adj_masks(n, tuple(adj))


def all_labeled_min_degree(n: int, min_degree: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices with minimum degree >= min_degree.

    Enumerates complements by backtracking with a max-degree cap, so the
    cost scales with the answer rather than with 2^{n(n-1)/2}.  This is a
    scan population helper, not an isomorphism-reduced catalog.
    """
    if n < 0 or min_degree < 0:
        raise BadParams("n and min_degree must be >= 0")
    if min_degree > max(n - 1, 0):
        return
    cap = n - 1 - min_degree  # max degree allowed in the complement
    pairs = list(_triangle_pairs(n))
    full = complete(n).adj
    co_deg = [0] * n
    co_adj = [0] * n

    def rec(i: int) -> Iterator[Graph]:
        if i == len(pairs):
            yield Graph.from_adj_masks(
                n, tuple(full[v] & ~co_adj[v] for v in range(n)))
            return
        u, v = pairs[i]
        yield from rec(i + 1)
        if co_deg[u] < cap and co_deg[v] < cap:
            co_deg[u] += 1
            co_deg[v] += 1
            co_adj[u] |= 1 << v
            co_adj[v] |= 1 << u
            yield from rec(i + 1)
            co_deg[u] -= 1
            co_deg[v] -= 1
            co_adj[u] &= ~(1 << v)
            co_adj[v] &= ~(1 << u)

    yield from rec(0)


#: CLI-facing family registry: name -> (callable, parameter names)
FAMILIES = {
    "complete": (complete, ("n",)),
    "complete-minus-matching": (complete_minus_matching, ("n", "m")),
    "complete-bipartite": (complete_bipartite, ("a", "b")),
    "cycle": (cycle, ("n",)),
    "petersen": (petersen, ()),
    "all-labeled": (all_labeled, ("n",)),
}


def generate(family: str, **params: int):
    """Build a named family by CLI name; returns a Graph or an iterator."""
    try:
        fn, names = FAMILIES[family]
    except KeyError:
        raise BadParams(f"unknown family {family!r}; known: {sorted(FAMILIES)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise BadParams(f"family {family!r} needs parameters {missing}")
    extra = [p for p, v in params.items() if v is not None and p not in names]
    if extra:
        raise BadParams(f"family {family!r} does not take {extra}")
    return fn(**{p: params[p] for p in names})
