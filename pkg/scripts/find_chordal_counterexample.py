#!/usr/bin/env python
"""Exhaustive search for a chordal graph violating uniform eccentricity.

Wanted: a connected chordal graph whose center is a single vertex with
eccentricity 2 (so the radius is 2), and which has a vertex at distance
2 from the center with eccentricity 3. Such a vertex breaks the
uniform-eccentricity identity, since 2 != 3 - 2.

Any graph with these properties looks, from its center c, like two
distance layers: the neighbors of c and the shell at distance 2, with
no edge from c to the shell. The scan therefore fixes vertex 0 as c,
splits the rest into the two layers in every way, and enumerates all
edge subsets on the remaining pairs (bitmask adjacency keeps this fast).
The first hit in scan order is printed, ready to freeze as a constant;
vertices are relabeled so the edge list is in canonical form.
"""

from __future__ import annotations

import argparse
from itertools import combinations


def layer_distances(adj: list[int], start: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[start] = 0
    frontier = 1 << start
    reached = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nxt |= adj[v]
        nxt &= ~reached
        reached |= nxt
        rest = nxt
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            dist[v] = d
        frontier = nxt
    return dist


def is_chordal_mask(adj: list[int], n: int) -> bool:
    alive = (1 << n) - 1
    while alive:
        found = -1
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            around = adj[v] & alive
            ok = True
            scan = around
            while scan:
                a = (scan & -scan).bit_length() - 1
                scan &= scan - 1
                if (adj[a] & around) != around & ~(1 << a):
                    ok = False
                    break
            if ok:
                found = v
                break
        if found < 0:
            return False
        alive &= ~(1 << found)
    return True


def search(n: int) -> tuple[int, list[tuple[int, int]]] | None:
    center = 0
    others = list(range(1, n))
    pairs = list(combinations(others, 2))
    for shell_size in range(1, n - 1):
        inner = others[: n - 1 - shell_size]
        shell = others[n - 1 - shell_size:]
        shell_set = set(shell)
        base = [0] * n
        for u in inner:
            base[center] |= 1 << u
            base[u] |= 1 << center
        total = 1 << len(pairs)
        print(f"n={n}, |shell|={shell_size}: {total} edge subsets")
        for mask in range(total):
            adj = base.copy()
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            # Every shell vertex needs an inner neighbor and no center edge;
            # inner vertices must not be dominated into eccentricity 2 later.
            ok = True
            for w in shell:
                if not any(adj[w] >> u & 1 for u in inner):
                    ok = False
                    break
            if not ok:
                continue
            dist_c = layer_distances(adj, center, n)
            if any(dist_c[u] != 1 for u in inner):
                continue
            if any(dist_c[w] != 2 for w in shell):
                continue
            eccs = [max(layer_distances(adj, v, n)) for v in range(n)]
            if eccs[center] != 2:
                continue
            if sum(1 for e in eccs if e == 2) != 1:
                continue
            if not any(eccs[w] == 3 for w in shell):
                continue
            if not is_chordal_mask(adj, n):
                continue
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if adj[u] >> v & 1
            ]
            return n, edges
    return None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9)
    args = parser.parse_args()
    for n in range(4, args.max_n + 1):
        hit = search(n)
        if hit is not None:
            size, edges = hit
            print(f"found on {size} vertices with {len(edges)} edges:")
            print(f"  edges = {tuple(edges)}")
            return
    print("no hit; raise --max-n")


if __name__ == "__main__":
    main()
