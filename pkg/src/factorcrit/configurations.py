"""The fourteen-configuration taxonomy of deficient 10-vertex graphs.

A 10-vertex graph h with no perfect matching, together with a designated
non-edge e = uv such that h + e has a perfect matching and no vertex of
degree <= 1, always admits a barrier witness X with |X| <= 4 whose removal
leaves exactly |X| + 2 factor-critical components with u and v in distinct
ones. The triple (|X|, component-size multiset, endpoint component sizes)
then lands in a fixed fourteen-row table, labeled C1..C14.

The module also builds host graphs of order n >= 12 realizing each label
(used to exercise the non-neighborhood intersection bounds) and carries
those bounds per label.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .decomp import BarrierWitness, find_barrier_witnesses
from .graphs import (
    Edge,
    Graph,
    GraphError,
    VertexSet,
    add_edge,
    common_nonneighborhood,
    min_degree,
)
from .matching import has_perfect_matching


class ConfigLabel(Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"
    C11 = "C11"
    C12 = "C12"
    C13 = "C13"
    C14 = "C14"


class EdgePlacement(Enum):
    """Where the designated edge sits, by endpoint component sizes."""

    TRIVIAL_TRIVIAL = "trivial-trivial"
    TRIVIAL_TRIPLE = "trivial-3comp"
    TRIVIAL_QUINTUPLE = "trivial-5comp"
    TRIPLE_TRIPLE = "comp-comp(3,3)"
    BETWEEN_TWO = "between-the-two-components"


@dataclass(frozen=True)
class ConfigSignature:
    x_size: int
    component_sizes: tuple[int, ...]  # ascending multiset, sums to 10 - x_size
    placement: EdgePlacement


_TT = EdgePlacement.TRIVIAL_TRIVIAL
_T3 = EdgePlacement.TRIVIAL_TRIPLE
_T5 = EdgePlacement.TRIVIAL_QUINTUPLE
_P33 = EdgePlacement.TRIPLE_TRIPLE
_B2 = EdgePlacement.BETWEEN_TWO

_SIGNATURES: list[tuple[ConfigLabel, ConfigSignature]] = [
    (ConfigLabel.C1, ConfigSignature(0, (3, 7), _B2)),
    (ConfigLabel.C2, ConfigSignature(0, (5, 5), _B2)),
    (ConfigLabel.C3, ConfigSignature(1, (1, 1, 7), _TT)),
    (ConfigLabel.C4, ConfigSignature(1, (1, 3, 5), _T5)),
    (ConfigLabel.C5, ConfigSignature(1, (1, 3, 5), _T3)),
    (ConfigLabel.C6, ConfigSignature(1, (3, 3, 3), _P33)),
    (ConfigLabel.C7, ConfigSignature(2, (1, 1, 1, 5), _T5)),
    (ConfigLabel.C8, ConfigSignature(2, (1, 1, 1, 5), _TT)),
    (ConfigLabel.C9, ConfigSignature(2, (1, 1, 3, 3), _P33)),
    (ConfigLabel.C10, ConfigSignature(2, (1, 1, 3, 3), _T3)),
    (ConfigLabel.C11, ConfigSignature(2, (1, 1, 3, 3), _TT)),
    (ConfigLabel.C12, ConfigSignature(3, (1, 1, 1, 1, 3), _TT)),
    (ConfigLabel.C13, ConfigSignature(3, (1, 1, 1, 1, 3), _T3)),
    (ConfigLabel.C14, ConfigSignature(4, (1, 1, 1, 1, 1, 1), _TT)),
]

_BY_SIGNATURE = {
    (sig.x_size, sig.component_sizes, sig.placement): label for label, sig in _SIGNATURES
}


def signature_table() -> list[tuple[ConfigLabel, ConfigSignature]]:
    """The fixed fourteen-row table, in label order."""
    return list(_SIGNATURES)


def _placement_of(x_size: int, u_size: int, v_size: int) -> EdgePlacement:
    if x_size == 0:
        return _B2
    pair = (u_size, v_size) if u_size <= v_size else (v_size, u_size)
    try:
        return {(1, 1): _TT, (1, 3): _T3, (1, 5): _T5, (3, 3): _P33}[pair]
    except KeyError:
        raise RuntimeError(
            f"endpoint component sizes {pair} outside the classification table"
        ) from None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


class ClassificationError(ValueError):
    """A classification precondition failed; ``reason`` states which one."""

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class ClassifiedWitness:
    label: ConfigLabel
    witness: BarrierWitness
    u_component: VertexSet
    v_component: VertexSet


@dataclass(frozen=True)
class ClassificationResult:
    entries: tuple[ClassifiedWitness, ...]

    @property
    def canonical(self) -> ClassifiedWitness:
        """The entry with smallest |X|, ties broken by bitmask value."""
        return self.entries[0]

    def labels(self) -> list[ConfigLabel]:
        seen = []
        for entry in self.entries:
            if entry.label not in seen:
                seen.append(entry.label)
        return seen


def classify(h: Graph, e: tuple[int, int]) -> ClassificationResult:
    """Classify a deficient 10-vertex graph with designated missing edge.

    Every barrier witness X with |X| <= 4, exactly |X| + 2 components, and
    u, v in distinct components is mapped to its table row. Entries keep the
    (|X|, bitmask) search order, so the first one is canonical.
    """
    if h.n != 10:
        raise GraphError(f"classification needs order 10, got {h.n}")
    u, v = e if e[0] < e[1] else (e[1], e[0])
    if not (0 <= u < 10 and 0 <= v < 10) or u == v:
        raise GraphError(f"invalid designated edge ({u},{v})")
    if h.has_edge(u, v):
        raise GraphError(f"designated edge ({u},{v}) must be a non-edge")

    if has_perfect_matching(h):
        raise ClassificationError(
            "has_perfect_matching", "graph already has a perfect matching"
        )
    plus = add_edge(h, (u, v))
    if not has_perfect_matching(plus):
        raise ClassificationError(
            "edge_gives_no_perfect_matching",
            "adding the designated edge does not create a perfect matching",
        )
    if min_degree(plus) <= 1:
        raise ClassificationError(
            "pendant_vertex",
            "graph plus designated edge has a vertex of degree <= 1",
        )

    ubit, vbit = 1 << u, 1 << v
    entries = []
    for w in find_barrier_witnesses(h, 4):
        if len(w.components) != w.x.bit_count() + 2:
            continue
        u_comp = v_comp = 0
        for comp in w.components:
            if comp.vertices & ubit:
                u_comp = comp.vertices
            if comp.vertices & vbit:
                v_comp = comp.vertices
        if not u_comp or not v_comp or u_comp == v_comp:
            continue
        x_size = w.x.bit_count()
        sizes = tuple(sorted(c.vertices.bit_count() for c in w.components))
        placement = _placement_of(x_size, u_comp.bit_count(), v_comp.bit_count())
        label = _BY_SIGNATURE.get((x_size, sizes, placement))
        if label is None:
            raise RuntimeError(
                f"witness ({x_size}, {sizes}, {placement}) missing from the table"
            )
        entries.append(
            ClassifiedWitness(label=label, witness=w, u_component=u_comp, v_component=v_comp)
        )
    if not entries:
        raise RuntimeError("no qualifying barrier witness found despite preconditions")
    return ClassificationResult(entries=tuple(entries))


# ---------------------------------------------------------------------------
# host construction
# ---------------------------------------------------------------------------


class HostBuildError(ValueError):
    """The requested host cannot meet the minimum-degree guarantee."""


@dataclass(frozen=True)
class BuiltInstance:
    graph: Graph
    edge: Edge
    s_e: VertexSet


_ENDPOINT_SIZES: dict[EdgePlacement, tuple[int, int]] = {
    _TT: (1, 1),
    _T3: (1, 3),
    _T5: (1, 5),
    _P33: (3, 3),
}


def _component_edges(block: list[int], style: str) -> list[Edge]:
    if len(block) == 1:
        return []
    if style == "clique":
        return [(a, b) for i, a in enumerate(block) for b in block[i + 1:]]
    if style == "cycle":
        return [(block[i], block[(i + 1) % len(block)]) for i in range(len(block))]
    raise GraphError(f"unknown component style {style!r}")


def build_instance(
    label: ConfigLabel,
    n: int,
    component_style: str = "clique",
    x_attachment: str = "complete",
) -> BuiltInstance:
    """Embed a configuration into a host of order n >= 12.

    Vertex layout: u's component first (u = 0), then v's component, then the
    leftover components by descending size, then X, then the n - 10 padding
    vertices S_e. Components are cliques (or odd cycles), S_e is complete to
    everything, and X is joined to every core vertex (``complete``) or only
    as forced by degree and matchability (``minimal``). Hosts that end up
    with minimum degree below n - 8 are rejected.
    """
    if n < 12:
        raise GraphError(f"host order {n} below 12")
    if x_attachment not in ("complete", "minimal"):
        raise GraphError(f"unknown attachment mode {x_attachment!r}")
    sig = dict(_SIGNATURES)[label]
    if sig.placement is _B2:
        u_size, v_size = sig.component_sizes
    else:
        u_size, v_size = _ENDPOINT_SIZES[sig.placement]

    leftover_sizes = list(sig.component_sizes)
    leftover_sizes.remove(u_size)
    leftover_sizes.remove(v_size)
    leftover_sizes.sort(reverse=True)

    next_v = 0

    def take(count: int) -> list[int]:
        nonlocal next_v
        block = list(range(next_v, next_v + count))
        next_v += count
        return block

    u_block = take(u_size)
    v_block = take(v_size)
    leftovers = [take(size) for size in leftover_sizes]
    x_block = take(sig.x_size)
    s_block = take(n - 10)
    assert next_v == n

    u, v = u_block[0], v_block[0]
    edges: list[Edge] = [(u, v)]
    for block in [u_block, v_block, *leftovers]:
        edges.extend(_component_edges(block, component_style))
    edges.extend(_component_edges(x_block, "clique"))
    for s in s_block:
        edges.extend((s, w) for w in range(s))

    core = list(range(10))
    if x_attachment == "complete":
        edges.extend((x, w) for x in x_block for w in core if w not in x_block)
    else:
        # one X vertex per leftover component (gives the matching of
        # core + e), a second X edge on leftover trivials, and one X edge on
        # each trivial endpoint (degree 2 inside core + e)
        for i, block in enumerate(leftovers):
            edges.append((x_block[i], block[0]))
            if len(block) == 1:
                edges.append((x_block[(i + 1) % len(x_block)], block[0]))
        if x_block:
            if u_size == 1:
                edges.append((x_block[0], u))
            if v_size == 1:
                edges.append((x_block[0], v))

    rows = [0] * n
    for a, b in set(edges):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    host = Graph(n, tuple(rows))

    if min_degree(host) < n - 8:
        raise HostBuildError(
            f"{label.value} with {x_attachment!r} attachment at n={n} has "
            f"minimum degree {min_degree(host)} < {n - 8}"
        )

    s_e = 0
    for s in s_block:
        s_e |= 1 << s
    _check_built(host, (u, v), s_e)
    return BuiltInstance(graph=host, edge=(u, v), s_e=s_e)


def _check_built(host: Graph, e: Edge, s_e: VertexSet) -> None:
    core = core_graph(host, e, s_e)
    if has_perfect_matching(core):
        raise AssertionError("built core unexpectedly has a perfect matching")
    plus = add_edge(core, e)
    if not has_perfect_matching(plus):
        raise AssertionError("built core plus designated edge lacks a perfect matching")
    if min_degree(plus) <= 1:
        raise AssertionError("built core plus designated edge has a pendant vertex")


def core_graph(host: Graph, e: Edge, s_e: VertexSet) -> Graph:
    """The order-10 deficient core: host minus e minus the padding set.

    Valid for hosts laid out by :func:`build_instance` (padding occupies the
    top indices, so core labels are unchanged).
    """
    if s_e != ((1 << host.n) - 1) ^ ((1 << 10) - 1):
        raise GraphError("padding set must occupy the top host indices")
    rows = [row & ((1 << 10) - 1) for row in host.adj[:10]]
    u, v = e
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(10, tuple(rows))


# ---------------------------------------------------------------------------
# non-neighborhood intersection bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionBounds:
    """Bounds on |N̄[u] ∩ N̄[v]| when every degree is at least n - 8."""

    label: ConfigLabel
    lo: int
    hi: int


_BOUNDS: dict[ConfigLabel, tuple[int, int]] = {
    ConfigLabel.C1: (0, 5),
    ConfigLabel.C2: (0, 5),
    ConfigLabel.C3: (7, 7),
    ConfigLabel.C4: (3, 5),
    ConfigLabel.C5: (5, 5),
    ConfigLabel.C6: (3, 5),
    ConfigLabel.C7: (2, 5),
    ConfigLabel.C8: (6, 7),
    ConfigLabel.C9: (2, 5),
    ConfigLabel.C10: (4, 5),
    ConfigLabel.C11: (6, 7),
    ConfigLabel.C12: (5, 7),
    ConfigLabel.C13: (3, 5),
    ConfigLabel.C14: (4, 7),
}


def intersection_bounds(label: ConfigLabel) -> IntersectionBounds:
    """Fixed per-label bounds; unstated sides are the universal 0 and 7."""
    lo, hi = _BOUNDS[label]
    return IntersectionBounds(label=label, lo=lo, hi=hi)


class DegreeHypothesisError(ValueError):
    """The host violates the minimum-degree hypothesis the bounds assume."""


def check_intersection_bounds(host: Graph, e: Edge, s_e: VertexSet, label: ConfigLabel) -> bool:
    """Whether |N̄[u] ∩ N̄[v]| in the host falls inside the label's bounds.

    Only valid under the standing hypothesis delta(host) >= n - 8; callers
    vouch that host - e - s_e classifies as ``label``.
    """
    del s_e  # part of the instance contract, not needed for the count
    n = host.n
    if min_degree(host) < n - 8:
        raise DegreeHypothesisError(
            f"minimum degree {min_degree(host)} below n-8 = {n - 8}"
        )
    u, v = e
    count = common_nonneighborhood(host, u, v).bit_count()
    b = intersection_bounds(label)
    return b.lo <= count <= b.hi
