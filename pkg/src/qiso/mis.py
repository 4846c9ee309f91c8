"""Maximal independent sets and the distance-3 derived graph.

The derived graph keeps only the vertices of a maximal independent set
and joins two of them whenever their original distance is at most three.
The canonical mapping fixes set members and sends every other vertex to
its smallest-id neighbor inside the set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidMapping, InvalidVertex, NotIndependent, NotMaximal
from .graph import CheckResult, Graph, bfs_distances
from .quasi import VertexMapping


def greedy_mis(g: Graph, order: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """Greedy maximal independent set, ascending vertex id by default.

    ``order`` may supply any permutation of the vertices; the sweep adds
    a vertex whenever none of its neighbors has been added before it.
    """
    n = g.vertex_count
    if order is None:
        sweep: Sequence[int] = range(n)
    else:
        sweep = list(order)
        if sorted(sweep) != list(range(n)):
            raise InvalidVertex("order must be a permutation of all vertices")
    chosen = bytearray(n)
    blocked = bytearray(n)
    for v in sweep:
        if not blocked[v]:
            chosen[v] = 1
            blocked[v] = 1
            for u in g.adjacency[v]:
                blocked[u] = 1
    return tuple(v for v in range(n) if chosen[v])


def check_independent(g: Graph, s: Sequence[int]) -> None:
    members = set(s)
    for v in members:
        g.check_vertex(v)
        for u in g.adjacency[v]:
            if u in members:
                raise NotIndependent(f"edge ({min(u, v)}, {max(u, v)}) inside the set")


def check_maximal_independent(g: Graph, s: Sequence[int]) -> None:
    check_independent(g, s)
    members = set(s)
    for v in g.vertices():
        if v not in members and not any(u in members for u in g.adjacency[v]):
            raise NotMaximal(f"vertex {v} could be added to the set")


@dataclass(frozen=True)
class MisResult:
    """An independent-set simplification: the set, its graph, the mapping.

    ``derived`` uses dense ids; its vertex ``i`` stands for ``mis[i]``.
    The mapping goes from the original graph onto ``derived``.
    """

    mis: tuple[int, ...]
    derived: Graph
    mapping: VertexMapping


def _distances_within(g: Graph, source: int, limit: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d == limit:
            continue
        for u in g.adjacency[v]:
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def mis_derived(
    g: Graph, s: Sequence[int], image: Optional[Sequence[int]] = None
) -> MisResult:
    """Build the derived graph of a maximal independent set.

    Set members become the vertices; members at original distance 1 to 3
    become adjacent. ``image`` may override the canonical mapping with
    any per-vertex choice of adjacent set member (fixed on the set
    itself); it is validated, not trusted.
    """
    check_maximal_independent(g, s)
    mis = tuple(sorted(set(s)))
    index = {v: i for i, v in enumerate(mis)}
    edges = []
    for v in mis:
        near = _distances_within(g, v, 3)
        for u, d in near.items():
            if u > v and u in index and d >= 1:
                edges.append((index[v], index[u]))
    derived = Graph(len(mis), edges)

    if image is None:
        img = []
        for v in g.vertices():
            if v in index:
                img.append(index[v])
            else:
                w = next(u for u in g.adjacency[v] if u in index)
                img.append(index[w])
    else:
        if len(image) != g.vertex_count:
            raise InvalidMapping("image must assign every vertex")
        img = []
        for v, w in enumerate(image):
            if w not in index:
                raise InvalidMapping(f"f({v}) = {w} is not in the set")
            if v in index:
                if w != v:
                    raise InvalidMapping(f"set member {v} must map to itself")
            elif w not in g.adjacency[v]:
                raise InvalidMapping(f"f({v}) = {w} is not adjacent to {v}")
            img.append(index[w])
    return MisResult(mis=mis, derived=derived, mapping=VertexMapping(g, derived, img))


def verify_mis_bounds(r: MisResult) -> CheckResult:
    """Check the derived-distance sandwich for every pair of vertices.

    For pairs with distinct images the derived distance must lie in
    ``[max(1, floor(d/3)), d]`` where ``d`` is the original distance:
    every derived edge spans an original distance of at most three, so a
    derived path of k edges spans at most 3k, and mapping a shortest
    original path vertex by vertex gives a derived walk of the same
    length. Pairs sharing an image coincide in the derived graph.
    """
    g = r.mapping.source
    img = r.mapping.image
    n = g.vertex_count
    derived_rows = [bfs_distances(r.derived, i) for i in r.derived.vertices()]
    for x in range(n):
        row = bfs_distances(g, x)
        drow = derived_rows[img[x]]
        for y in range(x + 1, n):
            if img[x] == img[y]:
                continue
            d1 = row[y]
            d2 = drow[img[y]]
            if not (max(1, d1 // 3) <= d2 <= d1):
                return CheckResult(False, (x, y))
    return CheckResult(True)
