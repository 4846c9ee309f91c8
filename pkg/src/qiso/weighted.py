"""Vertex-weighted graphs, weighted medians, and median recovery on trees.

Weights are exact (integers or rationals), so weighted distance-sums and
their comparisons never carry rounding error. Turning a partition-tree
into a weighted graph by recording block cardinalities lets the original
median be located from the quotient alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidWeight, NotAdjacent
from .graph import Graph, bfs_distances, require_tree
from .partition import Partition, PartitionGraph, build_partition_graph
from .quasi import VertexMapping

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with a strictly positive weight per vertex."""

    graph: Graph
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.vertex_count:
            raise InvalidWeight(
                f"{len(self.weights)} weights for {self.graph.vertex_count} vertices"
            )
        for v, w in enumerate(self.weights):
            if w <= 0:
                raise InvalidWeight(f"weight of vertex {v} is {w}, must be positive")


def subset_weight(wg: WeightedGraph, s: Sequence[int]) -> Weight:
    """Total weight of a vertex subset."""
    for v in s:
        wg.graph.check_vertex(v)
    return sum(wg.weights[v] for v in s)


def weighted_distance_sum(wg: WeightedGraph, x: int) -> Weight:
    """Sum over all vertices of hop distance from ``x`` times their weight."""
    dist = bfs_distances(wg.graph, x)
    return sum(d * w for d, w in zip(dist, wg.weights))


def weighted_median(wg: WeightedGraph) -> tuple[int, ...]:
    """Vertices minimizing the weighted distance-sum, ascending."""
    sums = [weighted_distance_sum(wg, v) for v in wg.graph.vertices()]
    best = min(sums)
    return tuple(v for v, s in enumerate(sums) if s == best)


def weighted_partition_tree(
    t: Graph, p: Partition
) -> tuple[WeightedGraph, VertexMapping]:
    """Quotient of a tree with block cardinalities as vertex weights.

    The weights sum to the original vertex count, which is exactly the
    bookkeeping needed to recover the original median from the quotient.
    """
    require_tree(t)
    pg: PartitionGraph = build_partition_graph(t, p)
    weights = tuple(len(blk) for blk in p.blocks)
    return WeightedGraph(pg.quotient, weights), pg.mapping


def locate_median_via_partition(t: Graph, p: Partition) -> tuple[int, ...]:
    """Original-tree candidate region for the median, found on the quotient.

    Returns the union of the blocks forming the weighted median of the
    cardinality-weighted quotient; every one of those blocks contains at
    least one true median vertex of the tree.
    """
    wq, _ = weighted_partition_tree(t, p)
    region: list[int] = []
    for b in weighted_median(wq):
        region.extend(p.blocks[b])
    return tuple(sorted(region))


def subtree_side(g: Graph, x: int, y: int) -> tuple[int, ...]:
    """Vertices whose path to ``y`` passes through ``x`` (including ``x``).

    Computed by removing the edge ``{x, y}`` from the tree and flooding
    from ``x``.
    """
    require_tree(g)
    if not g.adjacent(x, y):
        raise NotAdjacent(f"{x} and {y} are not adjacent")
    seen = {x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if (v, u) == (x, y):
                continue
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return tuple(sorted(seen))


def subtree_split_check(wg: WeightedGraph, x: int, y: int) -> bool:
    """Verify the split identity across one tree edge, exactly.

    For adjacent ``x, y`` with side subtrees ``S_x`` and ``S_y``, checks
    that distance-sum(x) + weight(S_x) equals distance-sum(y) + weight(S_y).
    """
    side_x = subtree_side(wg.graph, x, y)
    side_y = subtree_side(wg.graph, y, x)
    return (
        weighted_distance_sum(wg, x) + subset_weight(wg, side_x)
        == weighted_distance_sum(wg, y) + subset_weight(wg, side_y)
    )
