"""Factor-criticality, Gallai-Edmonds decomposition, and barrier witnesses.

A barrier witness is a vertex set X whose removal leaves only factor-critical
components, at least |X| + 2 of them; one exists in every graph of deficiency
at least two (in particular in every even-order graph without a perfect
matching). At the orders this package targets (n <= 12) exhaustive subset
search finds all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, VertexSet, bits, _components_masked
from .matching import _has_pm, _matching_size


def _is_factor_critical_masked(n: int, adj: tuple[int, ...], sub: int) -> bool:
    if sub.bit_count() % 2 == 0:
        return False
    m = sub
    while m:
        bit = m & -m
        m ^= bit
        if not _has_pm(n, adj, sub ^ bit):
            return False
    return True


def is_factor_critical(g: Graph) -> bool:
    """Deleting any single vertex leaves a perfect matching (n odd).

    The single-vertex graph qualifies: removing its vertex leaves the empty
    graph, whose perfect matching is vacuous.
    """
    if g.n == 0:
        return False
    return _is_factor_critical_masked(g.n, g.adj, g.vertex_mask)


@dataclass(frozen=True)
class GEDecomposition:
    """Partition of the vertices by maximum-matching structure.

    ``d``: vertices missed by some maximum matching; ``a``: their neighbors
    outside ``d``; ``c``: everything else.
    """

    d: VertexSet
    a: VertexSet
    c: VertexSet


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Compute the decomposition definition-first, via n+1 matching calls.

    A vertex is missed by some maximum matching iff deleting it drops the
    deficiency by one.
    """
    n, adj = g.n, g.adj
    full = g.vertex_mask
    base = _matching_size(n, adj, full)
    d = 0
    for v in range(n):
        if _matching_size(n, adj, full ^ (1 << v)) == base:
            d |= 1 << v
    a = 0
    for v in bits(d):
        a |= adj[v]
    a &= ~d
    return GEDecomposition(d=d, a=a, c=full & ~d & ~a)


@dataclass(frozen=True)
class ComponentInfo:
    vertices: VertexSet
    odd: bool
    factor_critical: bool


@dataclass(frozen=True)
class BarrierWitness:
    """A set X with every component of G - X factor-critical."""

    x: VertexSet
    components: tuple[ComponentInfo, ...]

    def odd_component_count(self) -> int:
        return sum(1 for c in self.components if c.odd)


def _witness_for(
    n: int,
    adj: tuple[int, ...],
    full: int,
    x: int,
    fc_cache: dict[int, bool],
) -> BarrierWitness | None:
    """Build the witness for X if all components of G - X are factor-critical
    and there are at least |X| + 2 of them; otherwise None."""
    comps = _components_masked(n, adj, full & ~x)
    if len(comps) < x.bit_count() + 2:
        return None
    infos = []
    for comp in comps:
        if comp.bit_count() % 2 == 0:
            return None
        fc = fc_cache.get(comp)
        if fc is None:
            fc = _is_factor_critical_masked(n, adj, comp)
            fc_cache[comp] = fc
        if not fc:
            return None
        infos.append(ComponentInfo(vertices=comp, odd=True, factor_critical=True))
    return BarrierWitness(x=x, components=tuple(infos))


def find_barrier_witnesses(g: Graph, max_x: int) -> list[BarrierWitness]:
    """All X with |X| <= max_x leaving only factor-critical components and at
    least |X| + 2 of them, ordered by (|X|, bitmask value).

    Requires a graph without a perfect matching. Whenever the deficiency is
    at least 2 (always true for even order), some witness attains
    C_o(G-X) - |X| = deficiency; it satisfies |X| <= (n - 2) / 2, so any
    ``max_x`` of at least that bound guarantees a nonempty result. A graph
    of deficiency 1 has no set meeting the +2 margin and yields [].
    """
    if g.n > 12:
        raise GraphError("exhaustive barrier search limited to n <= 12")
    if max_x > g.n:
        raise GraphError("max_x exceeds the vertex count")
    if _has_pm(g.n, g.adj, g.vertex_mask):
        raise GraphError("graph has a perfect matching; no barrier witness exists")
    n, adj, full = g.n, g.adj, g.vertex_mask
    fc_cache: dict[int, bool] = {}
    masks = sorted(
        (m for m in range(1 << n) if m.bit_count() <= max_x),
        key=lambda m: (m.bit_count(), m),
    )
    out = []
    for x in masks:
        w = _witness_for(n, adj, full, x, fc_cache)
        if w is not None:
            out.append(w)
    return out
