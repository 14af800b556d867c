"""Maximum matching and perfect-matching predicates.

The production engine is an array-based blossom algorithm working directly
on vertex bitmasks, so induced subgraphs never need relabeling. A pruned
exhaustive recursion (:func:`brute_force_max_matching`) and a full
perfect-matching enumerator serve as independent oracles for tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph, GraphError, VertexSet, bits, _components_masked


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges plus the covered vertex set."""

    edges: tuple[Edge, ...]
    covered: VertexSet

    def size(self) -> int:
        return len(self.edges)


# ---------------------------------------------------------------------------
# blossom algorithm (deterministic: vertices and neighbors scanned ascending)
# ---------------------------------------------------------------------------


def _find_augmenting(n: int, adj: tuple[int, ...], sub: int, match: list[int], root: int) -> bool:
    """Grow an alternating tree from ``root``; augment on success.

    Classic array-based search with blossom contraction tracked through a
    ``base`` array. Only vertices inside ``sub`` participate.
    """
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = [root]
    head = 0

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while head < len(queue):
        v = queue[head]
        head += 1
        row = adj[v] & sub
        while row:
            bit = row & -row
            row ^= bit
            to = bit.bit_length() - 1
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom at the common ancestor
                cur = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur, to, in_blossom)
                mark_path(to, cur, v, in_blossom)
                for i in bits(sub):
                    if in_blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        prev = parent[to]
                        nxt = match[prev]
                        match[prev] = to
                        match[to] = prev
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _match_array(n: int, adj: tuple[int, ...], sub: int, stop_on_exposed: bool = False) -> list[int] | None:
    """Maximum matching on the vertices of ``sub`` as a match array.

    With ``stop_on_exposed`` the search aborts (returning ``None``) as soon
    as one vertex is certain to stay exposed, which makes perfect-matching
    tests fail fast.
    """
    match = [-1] * n
    for v in bits(sub):
        if match[v] == -1:
            row = adj[v] & sub
            while row:
                bit = row & -row
                row ^= bit
                u = bit.bit_length() - 1
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in bits(sub):
        if match[v] == -1:
            if not _find_augmenting(n, adj, sub, match, v) and stop_on_exposed:
                return None
    return match


def _matching_size(n: int, adj: tuple[int, ...], sub: int) -> int:
    match = _match_array(n, adj, sub)
    assert match is not None
    return sum(1 for v in bits(sub) if match[v] != -1) // 2


def _has_pm(n: int, adj: tuple[int, ...], sub: int) -> bool:
    if sub.bit_count() % 2:
        return False
    return _match_array(n, adj, sub, stop_on_exposed=True) is not None


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching; deterministic for a fixed labeling."""
    match = _match_array(g.n, g.adj, g.vertex_mask)
    assert match is not None
    edges = []
    covered = 0
    for v in range(g.n):
        u = match[v]
        if u > v:
            edges.append((v, u))
            covered |= (1 << v) | (1 << u)
    return Matching(tuple(edges), covered)


def has_perfect_matching(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _has_pm(g.n, g.adj, g.vertex_mask)


def deficiency(g: Graph) -> int:
    """Number of vertices missed by a maximum matching."""
    return g.n - 2 * _matching_size(g.n, g.adj, g.vertex_mask)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def brute_force_max_matching(g: Graph) -> int:
    """Maximum matching size by pruned exhaustive recursion (n <= 16)."""
    if g.n > 16:
        raise GraphError("brute-force matching limited to n <= 16")
    adj = g.adj
    best = 0

    def rec(mask: int, acc: int) -> None:
        nonlocal best
        if acc > best:
            best = acc
        if acc + mask.bit_count() // 2 <= best:
            return
        # drop vertices with no available partner
        while mask:
            bit = mask & -mask
            if adj[bit.bit_length() - 1] & mask & ~bit:
                break
            mask ^= bit
        if not mask:
            return
        if acc + mask.bit_count() // 2 <= best:
            return
        vbit = mask & -mask
        rest = mask ^ vbit
        row = adj[vbit.bit_length() - 1] & rest
        while row:
            ubit = row & -row
            row ^= ubit
            rec(rest ^ ubit, acc + 1)
        rec(rest, acc)  # leave the lowest vertex unmatched

    rec(g.vertex_mask, 0)
    return best


def all_perfect_matchings(g: Graph) -> list[Matching]:
    """Every perfect matching, enumerated deterministically (n <= 14, even)."""
    if g.n > 14:
        raise GraphError("perfect-matching enumeration limited to n <= 14")
    if g.n % 2:
        raise GraphError("odd-order graph has no perfect matching")
    adj = g.adj
    out: list[Matching] = []
    acc: list[Edge] = []
    full = g.vertex_mask

    def rec(mask: int) -> None:
        if not mask:
            out.append(Matching(tuple(acc), full))
            return
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        row = adj[v] & mask & ~vbit
        while row:
            ubit = row & -row
            row ^= ubit
            acc.append((v, ubit.bit_length() - 1))
            rec(mask ^ vbit ^ ubit)
            acc.pop()

    rec(full)
    return out


def every_perfect_matching_contains(g: Graph, e: tuple[int, int]) -> bool:
    """True iff g has a perfect matching and every one of them uses ``e``.

    Decided by two matching calls: a perfect matching must exist, and none
    may survive the removal of ``e``.
    """
    u, v = e if e[0] < e[1] else (e[1], e[0])
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not present")
    if not has_perfect_matching(g):
        return False
    rows = list(g.adj)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return not _has_pm(g.n, tuple(rows), g.vertex_mask)


# ---------------------------------------------------------------------------
# odd components
# ---------------------------------------------------------------------------


def odd_components(g: Graph, x: VertexSet) -> tuple[int, list[VertexSet]]:
    """Odd-order components of g - x, ordered by smallest original label."""
    if x & ~g.vertex_mask:
        raise GraphError("removal set contains vertices outside the graph")
    comps = [c for c in _components_masked(g.n, g.adj, g.vertex_mask & ~x) if c.bit_count() % 2]
    return len(comps), comps
