"""Partitions into connected blocks and the quotient graph they induce.

Blocks ("super-vertices") must induce connected subgraphs; the quotient
joins two blocks whenever some cross edge exists. Sharpness bounds block
diameters from above and drives the distortion of the quotient mapping,
coarseness bounds them from below and drives compression.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import BlockNotConnected, InvalidVertex, NotAPartition
from .graph import Graph, bfs_distances
from .quasi import VertexMapping, verify_q1


class Partition:
    """A cover of the vertex set by disjoint connected blocks.

    Blocks keep their given order; members are stored ascending.
    ``block_of[v]`` is the index of the block containing ``v``.
    """

    __slots__ = ("graph", "blocks", "block_of")

    def __init__(self, graph: Graph, blocks: Iterable[Sequence[int]]):
        n = graph.vertex_count
        block_of = [-1] * n
        cleaned: list[tuple[int, ...]] = []
        for i, blk in enumerate(blocks):
            members = sorted(blk)
            if not members:
                raise NotAPartition(f"block {i} is empty")
            for v in members:
                if not (0 <= v < n):
                    raise InvalidVertex(f"block {i} contains vertex {v}")
                if block_of[v] >= 0:
                    raise NotAPartition(
                        f"vertex {v} appears in blocks {block_of[v]} and {i}"
                    )
                block_of[v] = i
            cleaned.append(tuple(members))
        missing = block_of.count(-1)
        if missing:
            raise NotAPartition(f"{missing} vertices not covered by any block")
        for i, members in enumerate(cleaned):
            if not _block_connected(graph, members):
                raise BlockNotConnected(f"block {i} does not induce a connected subgraph")
        self.graph = graph
        self.blocks: tuple[tuple[int, ...], ...] = tuple(cleaned)
        self.block_of: tuple[int, ...] = tuple(block_of)

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return f"Partition({len(self.blocks)} blocks over {self.graph!r})"


def _block_connected(g: Graph, members: Sequence[int]) -> bool:
    inside = set(members)
    seen = {members[0]}
    queue = deque([members[0]])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u in inside and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(inside)


def singleton_partition(g: Graph) -> Partition:
    """One block per vertex; the quotient is the graph itself."""
    return Partition(g, ([v] for v in g.vertices()))


@dataclass(frozen=True)
class PartitionGraph:
    """A partition together with its quotient graph and natural mapping."""

    quotient: Graph
    mapping: VertexMapping
    partition: Partition


def build_partition_graph(g: Graph, p: Partition) -> PartitionGraph:
    """Quotient of ``g`` by ``p``: one vertex per block, edges from cross edges."""
    if p.graph is not g and p.graph != g:
        raise NotAPartition("partition belongs to a different graph")
    quotient_edges = set()
    for u, v in g.edges():
        bu, bv = p.block_of[u], p.block_of[v]
        if bu != bv:
            quotient_edges.add((min(bu, bv), max(bu, bv)))
    quotient = Graph(len(p.blocks), sorted(quotient_edges))
    return PartitionGraph(
        quotient=quotient,
        mapping=VertexMapping(g, quotient, p.block_of),
        partition=p,
    )


def induced_diameter(g: Graph, members: Sequence[int]) -> int:
    """Diameter of the subgraph induced by a connected vertex set."""
    inside = set(members)
    best = 0
    for s in members:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u in inside and u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        best = max(best, max(dist.values()))
    return best


@dataclass(frozen=True)
class SharpnessReport:
    """Extreme block diameters and the vertex compression they imply."""

    sharpness: int
    coarseness: int
    compression_ratio: Fraction


def sharpness_report(g: Graph, p: Partition) -> SharpnessReport:
    """Max and min induced block diameter, and |quotient| / |graph|."""
    diameters = [induced_diameter(g, blk) for blk in p.blocks]
    return SharpnessReport(
        sharpness=max(diameters),
        coarseness=min(diameters),
        compression_ratio=Fraction(len(p.blocks), g.vertex_count),
    )


def _sweep_order(g: Graph, order: Optional[Sequence[int]]) -> Sequence[int]:
    if order is None:
        return range(g.vertex_count)
    sweep = list(order)
    if sorted(sweep) != list(range(g.vertex_count)):
        raise InvalidVertex("order must be a permutation of all vertices")
    return sweep


def collapse_basic(g: Graph, order: Optional[Sequence[int]] = None) -> Partition:
    """Group each picked vertex with its still-unassigned neighbors.

    Picks the first unassigned vertex in sweep order (ascending id by
    default), so results are reproducible. Every block is a star around
    its pick, hence diameter at most two.
    """
    assigned = bytearray(g.vertex_count)
    blocks = []
    for v in _sweep_order(g, order):
        if assigned[v]:
            continue
        blk = [v]
        assigned[v] = 1
        for u in g.adjacency[v]:
            if not assigned[u]:
                assigned[u] = 1
                blk.append(u)
        blocks.append(blk)
    return Partition(g, blocks)


def collapse_modified(g: Graph, order: Optional[Sequence[int]] = None) -> Partition:
    """Two-phase neighborhood collapse favoring larger blocks.

    Phase one repeatedly seeds a block at a completely free vertex (one
    with no assigned neighbor) and absorbs its unassigned neighbors.
    Phase two attaches every leftover vertex to the block of its
    smallest-id neighbor assigned during phase one. Anchoring to the
    phase-one snapshot (never to another leftover) keeps every member
    within two hops of its block's seed, so diameters stay at most four.
    """
    n = g.vertex_count
    sweep = _sweep_order(g, order)
    assigned = bytearray(n)
    blocks: list[list[int]] = []
    block_of = [-1] * n

    def completely_free(v: int) -> bool:
        return not assigned[v] and all(not assigned[u] for u in g.adjacency[v])

    while True:
        seed = next((v for v in sweep if completely_free(v)), -1)
        if seed < 0:
            break
        blk = [seed]
        assigned[seed] = 1
        block_of[seed] = len(blocks)
        for u in g.adjacency[seed]:
            if not assigned[u]:
                assigned[u] = 1
                block_of[u] = len(blocks)
                blk.append(u)
        blocks.append(blk)

    anchored = bytes(assigned)
    for w in sweep:
        if anchored[w]:
            continue
        host = min(u for u in g.adjacency[w] if anchored[u])
        block_of[w] = block_of[host]
        blocks[block_of[host]].append(w)
    return Partition(g, blocks)


def verify_partition_qiso(pg: PartitionGraph) -> bool:
    """Check the quotient mapping's guaranteed distortion exhaustively.

    With ``c`` the measured sharpness, the distance inequality must hold
    at stretch ``c + 1`` with additive 1, and quotient distances must
    never exceed the original ones.
    """
    g = pg.mapping.source
    c = sharpness_report(g, pg.partition).sharpness
    if not verify_q1(pg.mapping, c + 1, 1):
        return False
    quotient_rows = [bfs_distances(pg.quotient, i) for i in pg.quotient.vertices()]
    block_of = pg.partition.block_of
    for x in g.vertices():
        row = bfs_distances(g, x)
        qrow = quotient_rows[block_of[x]]
        for y in range(x + 1, g.vertex_count):
            if qrow[block_of[y]] > row[y]:
                return False
    return True
