"""Independent brute-force oracles used by the test suites.

Everything here is deliberately naive: alternate routes to answers the
main library computes more directly, kept simple enough to trust.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph


def floyd_warshall(g: Graph) -> list[list[int]]:
    """All-pairs distances by the classic triple loop. Small graphs only."""
    n = g.vertex_count
    inf = n + 1
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def longest_simple_cycle(g: Graph, max_vertices: int = 12) -> int:
    """Length of the longest simple cycle, 0 when acyclic.

    Exhaustive DFS over simple paths, exponential in the worst case,
    hence the size guard.
    """
    if g.vertex_count > max_vertices:
        raise TooLarge(
            f"cycle enumeration guarded at {max_vertices} vertices, got {g.vertex_count}"
        )
    adj = g.adjacency
    best = 0

    def extend(start: int, v: int, on_path: set[int], length: int) -> None:
        nonlocal best
        for u in adj[v]:
            if u == start:
                if length >= 3 and length > best:
                    best = length
            elif u > start and u not in on_path:
                on_path.add(u)
                extend(start, u, on_path, length + 1)
                on_path.discard(u)

    for s in g.vertices():
        extend(s, s, {s}, 1)
    return best


def is_chordal(g: Graph) -> bool:
    """Chordality via repeated simplicial elimination.

    A graph is chordal exactly when deleting simplicial vertices (those
    whose neighborhood is a clique) can empty it; induced subgraphs of a
    chordal graph stay chordal, so greedy removal is safe.
    """
    alive: set[int] = set(g.vertices())
    nbrs = {v: set(g.neighbors(v)) for v in g.vertices()}
    while alive:
        found = -1
        for v in sorted(alive):
            around = nbrs[v] & alive
            if all(b in nbrs[a] for a in around for b in around if a < b):
                found = v
                break
        if found < 0:
            return False
        alive.discard(found)
    return True
