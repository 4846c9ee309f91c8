"""Immutable simple undirected graphs and exact hop-distance metrics.

Distances are shortest-path hop counts computed by breadth-first search.
A :class:`Graph` never changes after construction, so every query here is
pure and safe to call concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    EmptyGraph,
    EmptySet,
    InvalidEdge,
    InvalidVertex,
    NotATree,
)


@dataclass(frozen=True)
class CheckResult:
    """Verdict of an exhaustive check plus the first witness of failure.

    Truthiness follows ``ok``, so results can be used directly in
    assertions while still carrying the offending vertex or pair.
    """

    ok: bool
    witness: object | None = None

    def __bool__(self) -> bool:
        return self.ok


class Graph:
    """Simple connected undirected graph on dense vertex ids ``0..n-1``.

    Construction validates all structural invariants: endpoints in range,
    no self-loops, no parallel edges, and connectivity. Adjacency lists
    are stored sorted, which keeps every traversal deterministic.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 1:
            raise EmptyGraph("a graph needs at least one vertex")
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidVertex(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            if u == v:
                raise InvalidEdge(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidEdge(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._edge_count = len(seen)
        if self._reached_from_zero() != vertex_count:
            raise Disconnected("graph is not connected")

    def _reached_from_zero(self) -> int:
        seen = bytearray(len(self._adj))
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    queue.append(u)
        return count

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def is_tree(self) -> bool:
        # Connectivity is a construction invariant, so the edge count decides.
        return self._edge_count == len(self._adj) - 1

    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        return out

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < len(self._adj)):
            raise InvalidVertex(f"vertex {v} outside 0..{len(self._adj) - 1}")

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def require_tree(g: Graph) -> None:
    if not g.is_tree:
        raise NotATree(f"expected a tree, got n={g.vertex_count}, m={g.edge_count}")


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex, indexed by vertex id.

    All entries are finite because graphs are connected by construction.
    """
    g.check_vertex(source)
    adj = g.adjacency
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    """Hop distance between two vertices (single BFS)."""
    g.check_vertex(v)
    return bfs_distances(g, u)[v]


def _checked_set(g: Graph, s: Sequence[int], name: str) -> list[int]:
    members = list(s)
    if not members:
        raise EmptySet(f"{name} must not be empty")
    for v in members:
        g.check_vertex(v)
    return members


def set_distance(g: Graph, s1: Sequence[int], s2: Sequence[int]) -> int:
    """Minimum hop distance over all pairs drawn from the two sets.

    Zero exactly when the sets intersect.
    """
    a = _checked_set(g, s1, "s1")
    b = set(_checked_set(g, s2, "s2"))
    adj = g.adjacency
    dist = [-1] * g.vertex_count
    queue = deque()
    for v in a:
        if v in b:
            return 0
        if dist[v] < 0:
            dist[v] = 0
            queue.append(v)
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in adj[v]:
            if dist[u] < 0:
                if u in b:
                    return dv + 1
                dist[u] = dv + 1
                queue.append(u)
    raise AssertionError("unreachable: connected graph")


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-vertex eccentricities with their witnesses, radius and diameter.

    ``witnesses[v]`` lists, in ascending order, every vertex realizing
    ``eccentricity[v]``.
    """

    eccentricity: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]
    radius: int
    diameter: int


def _ecc_list(g: Graph) -> list[int]:
    return [max(bfs_distances(g, v)) for v in g.vertices()]


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    """Eccentricity of every vertex, computed by one BFS per source."""
    eccs: list[int] = []
    wits: list[tuple[int, ...]] = []
    for v in g.vertices():
        dist = bfs_distances(g, v)
        e = max(dist)
        eccs.append(e)
        wits.append(tuple(x for x, d in enumerate(dist) if d == e))
    return EccentricityProfile(
        eccentricity=tuple(eccs),
        witnesses=tuple(wits),
        radius=min(eccs),
        diameter=max(eccs),
    )


def center(g: Graph) -> tuple[int, ...]:
    """Vertices of minimum eccentricity, ascending."""
    eccs = _ecc_list(g)
    rad = min(eccs)
    return tuple(v for v, e in enumerate(eccs) if e == rad)


def distance_sum(g: Graph, v: int) -> int:
    """Sum of hop distances from ``v`` to every vertex."""
    return sum(bfs_distances(g, v))


def median(g: Graph) -> tuple[int, ...]:
    """Vertices of minimum distance-sum, ascending."""
    sums = [distance_sum(g, v) for v in g.vertices()]
    best = min(sums)
    return tuple(v for v, s in enumerate(sums) if s == best)


def leaf_removal_center(t: Graph) -> tuple[int, ...]:
    """Locate a tree's center by repeatedly deleting all current leaves.

    Returns the one or two surviving vertices; agrees with :func:`center`
    on every tree.
    """
    require_tree(t)
    n = t.vertex_count
    if n <= 2:
        return tuple(range(n))
    degree = [t.degree(v) for v in t.vertices()]
    removed = bytearray(n)
    layer = [v for v in t.vertices() if degree[v] == 1]
    alive = n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = 1
            for u in t.neighbors(v):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        alive -= len(layer)
        layer = nxt
    return tuple(v for v in t.vertices() if not removed[v])


def _bfs_with_parents(g: Graph, source: int) -> tuple[list[int], list[int]]:
    adj = g.adjacency
    dist = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue.append(u)
    return dist, parent


def diameter_path(t: Graph) -> list[int]:
    """A path of a tree whose length equals the diameter (double BFS).

    Endpoint ties break toward the smallest vertex id, so the result is
    deterministic.
    """
    require_tree(t)
    d0 = bfs_distances(t, 0)
    u = d0.index(max(d0))
    dist, parent = _bfs_with_parents(t, u)
    w = dist.index(max(dist))
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def uni_ecc_holds(g: Graph) -> CheckResult:
    """Whether distance to the center equals eccentricity minus radius.

    The property holds for every tree but fails on some graphs; the first
    violating vertex (ascending) is returned as the witness.
    """
    eccs = _ecc_list(g)
    rad = min(eccs)
    ctr = [v for v, e in enumerate(eccs) if e == rad]
    # One multi-source BFS from the whole center.
    adj = g.adjacency
    dist = [-1] * g.vertex_count
    queue = deque()
    for v in ctr:
        dist[v] = 0
        queue.append(v)
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    for v in g.vertices():
        if dist[v] != eccs[v] - rad:
            return CheckResult(False, v)
    return CheckResult(True)
