"""Detection of distance-k asteroidal triples and the freeness threshold.

A triple qualifies at level k when each pair is joined by a path that stays
clear of the distance-k neighborhood of the third vertex.  Witnesses carry
those three paths so they can be re-verified independently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graphs import Graph, _check_vertices, is_connected, is_path, neighborhood_k


@dataclass(frozen=True)
class KatWitness:
    """Three vertices plus, for each pair, a path avoiding the third's N^k."""

    triple: tuple[int, int, int]
    k: int
    # paths join the sorted-triple pairs in order: (a,b), (a,c), (b,c)
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def _avoiding_path(
    g: Graph, src: int, dst: int, forbidden: frozenset[int]
) -> Optional[tuple[int, ...]]:
    """Shortest src-dst path inside V minus forbidden; deterministic parents."""
    if src in forbidden or dst in forbidden:
        return None
    parent: dict[int, Optional[int]] = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            out = []
            cur: Optional[int] = dst
            while cur is not None:
                out.append(cur)
                cur = parent[cur]
            return tuple(reversed(out))
        for x in sorted(g.adj[u]):
            if x not in forbidden and x not in parent:
                parent[x] = u
                queue.append(x)
    return None


def is_k_at(g: Graph, triple: Iterable[int], k: int) -> Optional[KatWitness]:
    """Witness that the triple is a k-AT of g, or None.

    For each pair, a BFS runs in the subgraph left after deleting the
    distance-k neighborhood of the third vertex; the three shortest paths
    found become the certificate.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    trip = tuple(sorted(triple))
    if len(trip) != 3 or len(set(trip)) != 3:
        raise ValueError(f"need three distinct vertices, got {trip}")
    _check_vertices(g, trip)
    a, b, c = trip
    paths = []
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        path = _avoiding_path(g, x, y, neighborhood_k(g, (z,), k))
        if path is None:
            return None
        paths.append(path)
    return KatWitness(trip, k, (paths[0], paths[1], paths[2]))


def verify_kat(g: Graph, w: KatWitness) -> bool:
    """Re-check a witness from scratch: path validity and avoidance."""
    a, b, c = w.triple
    if len({a, b, c}) != 3 or w.k < 1:
        return False
    for (x, y, z), path in zip(((a, b, c), (a, c, b), (b, c, a)), w.paths):
        if not is_path(g, path):
            return False
        if path[0] != x or path[-1] != y:
            return False
        if not neighborhood_k(g, (z,), w.k).isdisjoint(path):
            return False
    return True


def find_k_at(g: Graph, k: int) -> Optional[KatWitness]:
    """First k-AT witness in lexicographic triple order, or None."""
    for trip in combinations(range(g.n), 3):
        w = is_k_at(g, trip, k)
        if w is not None:
            return w
    return None


def min_k_at_free(g: Graph) -> int:
    """Smallest k >= 1 at which g has no k-AT.

    Well-defined because a (k+1)-AT is also a k-AT, and bounded by n since
    distance-n neighborhoods swallow the whole connected graph.  Levels are
    scanned linearly; the previous level's triple is retried first as a
    cheap hint before rescanning.
    """
    if not is_connected(g):
        raise ValueError("min_k_at_free requires a connected graph")
    k = 1
    w = find_k_at(g, k)
    while w is not None:
        k += 1
        w = is_k_at(g, w.triple, k) or find_k_at(g, k)
    return k
