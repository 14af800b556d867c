"""Immutable bitset-backed simple graphs on at most 64 vertices.

A graph stores one 64-bit adjacency mask per vertex, so set-valued queries
(neighborhoods, non-neighborhoods, cuts) are single integer operations.
Vertex sets throughout the package are plain ``int`` bitmasks: bit ``v`` is
set iff vertex ``v`` belongs to the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = int
Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or mutation."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with adjacency bitmasks.

    ``adj[v]`` holds the neighbor set of ``v``. Instances are immutable and
    validated on construction: adjacency must be symmetric, irreflexive, and
    confined to bits below ``n``. The empty graph (``n == 0``) is permitted so
    that vertex deletion stays total.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency of {v} has bits at or above {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, ascending lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# graph6 codec
#
# Size prefix: one byte n+63 for n <= 62; for 63 <= n the prefix is '~'
# followed by three bytes holding n in 18 bits, 6 bits per byte, high group
# first. Payload: upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... in
# column order, packed into 6-bit groups (high bit first), each group +63,
# zero-padded to a byte boundary.
# ---------------------------------------------------------------------------


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="strict")
    return data.strip()


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 line (optional ``>>graph6<<`` header)."""
    try:
        line = _as_text(text)
    except UnicodeDecodeError as exc:
        raise Graph6Error(f"non-ASCII graph6 input: {exc}") from None
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(x < 0 or x > 63 for x in data):
        raise Graph6Error("byte outside 63..126 in graph6 line")

    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated extended size prefix")
        if data[1] == 63:
            raise Graph6Error("8-byte size prefix exceeds supported order")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph order {n} exceeds {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        kind = "truncated" if len(body) < nbytes else "oversized"
        raise Graph6Error(f"{kind} graph6 payload: {len(body)} bytes, expected {nbytes}")

    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            group, offset = divmod(idx, 6)
            if body[group] >> (5 - offset) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if nbits % 6:
        pad = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits in graph6 payload")
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    groups = []
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            filled += 1
            if filled == 6:
                groups.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        groups.append(chr((acc << (6 - filled)) + 63))
    return prefix + "".join(groups)


# ---------------------------------------------------------------------------
# neighborhood queries
# ---------------------------------------------------------------------------


def closed_nonneighborhood(g: Graph, x: int) -> VertexSet:
    """Vertices that are neither ``x`` nor adjacent to it."""
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} outside 0..{g.n - 1}")
    return g.vertex_mask & ~(g.adj[x] | (1 << x))


def common_nonneighborhood(g: Graph, u: int, v: int) -> VertexSet:
    """Intersection of the closed non-neighborhoods of ``u`` and ``v``."""
    if u == v:
        raise GraphError("common non-neighborhood needs two distinct vertices")
    return closed_nonneighborhood(g, u) & closed_nonneighborhood(g, v)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(row.bit_count() for row in g.adj)


# ---------------------------------------------------------------------------
# mutation by copy
# ---------------------------------------------------------------------------


def delete_vertices(g: Graph, s: VertexSet) -> Graph:
    """Induced subgraph on V minus ``s``; survivors relabeled densely."""
    return delete_vertices_with_map(g, s)[0]


def delete_vertices_with_map(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Like :func:`delete_vertices`, also returning the old->new index map."""
    if s & ~g.vertex_mask:
        raise GraphError("deletion set contains vertices outside the graph")
    keep = g.vertex_mask & ~s
    old = list(bits(keep))
    remap = {o: i for i, o in enumerate(old)}
    rows = []
    for o in old:
        row = 0
        for w in bits(g.adj[o] & keep):
            row |= 1 << remap[w]
        rows.append(row)
    return Graph(len(old), tuple(rows)), remap


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not present")
    rows = list(g.adj)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = normalize_edge(*e)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{g.n - 1}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# connectivity by exhaustive cut enumeration (intended for n <= 16)
# ---------------------------------------------------------------------------


def _components_masked(n: int, adj: tuple[int, ...], sub: int) -> list[int]:
    """Connected components of the induced subgraph on ``sub``.

    Ordered by smallest contained vertex.
    """
    comps = []
    rem = sub
    while rem:
        start = rem & -rem
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _is_connected_masked(n: int, adj: tuple[int, ...], sub: int) -> bool:
    if sub == 0:
        return True
    start = sub & -sub
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & sub & ~comp
        comp |= frontier
    return comp == sub


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _is_connected_masked(g.n, g.adj, g.vertex_mask)


def is_k_connected(g: Graph, k: int) -> bool:
    """No vertex cut of size < k disconnects the graph, and n > k.

    Follows the usual convention that the complete graph K_n is
    (n-1)-connected.
    """
    if k < 0:
        raise GraphError("connectivity order must be nonnegative")
    n = g.n
    if n <= k:
        return False
    full = g.vertex_mask
    for size in range(k):
        for cut in combinations(range(n), size):
            rest = full & ~mask_of(cut)
            if not _is_connected_masked(n, g.adj, rest):
                return False
    return True


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """No edge cut of size < k disconnects the graph, and n > k.

    Exhaustive over vertex bipartitions: the minimum edge cut equals the
    smallest boundary e(S, V-S) over nonempty proper S.
    """
    if k < 0:
        raise GraphError("connectivity order must be nonnegative")
    n = g.n
    if n <= k:
        return False
    if n <= 1:
        return True
    adj = g.adj
    full = g.vertex_mask
    # fixing vertex 0 on one side halves the bipartition count
    for half in range(1 << (n - 1)):
        side = half << 1 | 1
        if side == full:
            continue
        cut = sum((adj[v] & ~side).bit_count() for v in bits(side))
        if cut < k:
            return False
    return True
