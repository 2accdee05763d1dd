"""Immutable simple graphs and the search primitives everything else builds on.

Vertices are dense integer indices 0..n-1.  Graphs are frozen after
construction, so values can be shared freely, hashed, and memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the frozen set of neighbors of ``v``.  Symmetry,
    irreflexivity and index ranges are enforced by :meth:`from_edges`,
    the only intended constructor.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")


# Bitmask adjacency is the hot-path representation: BFS layers become a few
# integer operations, which matters once the harness grinds through
# thousands of small graphs.

@lru_cache(maxsize=None)
def _adj_masks(g: Graph) -> tuple[int, ...]:
    return tuple(sum(1 << u for u in g.adj[v]) for v in range(g.n))


def _expand(masks: Sequence[int], frontier: int) -> int:
    out = 0
    while frontier:
        low = frontier & -frontier
        out |= masks[low.bit_length() - 1]
        frontier &= frontier - 1
    return out


def _grow_mask(g: Graph, seed: int, k: Optional[int] = None) -> int:
    """Vertices within distance k of the seed set (all reachable if k is None)."""
    masks = _adj_masks(g)
    seen = seed
    frontier = seed
    steps = 0
    while frontier and (k is None or steps < k):
        frontier = _expand(masks, frontier) & ~seen
        seen |= frontier
        steps += 1
    return seen


def _reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from start inside the allowed mask (start included)."""
    masks = _adj_masks(g)
    seen = (1 << start) & allowed
    frontier = seen
    while frontier:
        frontier = _expand(masks, frontier) & allowed & ~seen
        seen |= frontier
    return seen


def _ecc_of_mask(g: Graph, seed: int) -> Optional[int]:
    """Max distance from any vertex to the seed set; None if something is unreachable."""
    masks = _adj_masks(g)
    full = (1 << g.n) - 1
    seen = seed
    frontier = seed
    d = 0
    while seen != full:
        frontier = _expand(masks, frontier) & ~seen
        if not frontier:
            return None
        seen |= frontier
        d += 1
    return d


def _mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _mask_to_set(m: int) -> frozenset[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m &= m - 1
    return frozenset(out)


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[Optional[int]]:
    """Distance from every vertex to the nearest source; None marks unreachable."""
    src = list(sources)
    if not src:
        raise ValueError("bfs_distances requires a nonempty source set")
    _check_vertices(g, src)
    dist: list[Optional[int]] = [None] * g.n
    frontier = []
    for s in src:
        if dist[s] is None:
            dist[s] = 0
            frontier.append(s)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for x in g.adj[u]:
                if dist[x] is None:
                    dist[x] = d
                    nxt.append(x)
        frontier = nxt
    return dist


def neighborhood_k(g: Graph, sources: Iterable[int], k: int) -> frozenset[int]:
    """The set of vertices at distance at most k from the source set."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    src = list(sources)
    _check_vertices(g, src)
    return _mask_to_set(_grow_mask(g, _mask_of(src), k))


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise ValueError("connectivity is undefined for the empty graph")
    return _grow_mask(g, 1) == (1 << g.n) - 1


def is_path(g: Graph, p: Sequence[int]) -> bool:
    """True iff p is a nonempty sequence of distinct vertices with consecutive edges."""
    if len(p) == 0 or len(set(p)) != len(p):
        return False
    if any(not (0 <= v < g.n) for v in p):
        return False
    return all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def is_induced_path(g: Graph, p: Sequence[int]) -> bool:
    """True iff p is a path of g with no edge between non-consecutive entries."""
    _check_vertices(g, p)
    if not is_path(g, p):
        return False
    for i in range(len(p)):
        for j in range(i + 2, len(p)):
            if g.has_edge(p[i], p[j]):
                return False
    return True


def induced_paths(g: Graph) -> Iterator[tuple[int, ...]]:
    """All induced paths of g, one orientation each (first vertex <= last)."""
    for s in range(g.n):
        yield (s,)
        stack: list[tuple[int, ...]] = [(s,)]
        while stack:
            path = stack.pop()
            tail = path[-1]
            for x in sorted(g.adj[tail], reverse=True):
                if x in path:
                    continue
                # induced: x may touch the path only at the tail
                if any(g.has_edge(x, y) for y in path[:-1]):
                    continue
                ext = path + (x,)
                if ext[0] <= ext[-1]:
                    yield ext
                stack.append(ext)


def _is_induced_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    m = len(cyc)
    if m < 3 or len(set(cyc)) != m:
        return False
    for i in range(m):
        for j in range(i + 1, m):
            adjacent = g.has_edge(cyc[i], cyc[j])
            consecutive = j - i == 1 or (i == 0 and j == m - 1)
            if adjacent != consecutive:
                return False
    return True


def find_long_induced_cycle(g: Graph, min_len: int) -> Optional[tuple[int, ...]]:
    """Some chordless cycle with at least min_len vertices, or None.

    DFS over chordless paths; exponential in the worst case, which is fine
    for the small-graph corpora this library targets.
    """
    if min_len < 3:
        raise ValueError(f"min_len must be at least 3, got {min_len}")

    def search(s: int) -> Optional[tuple[int, ...]]:
        # every vertex after s is > s, so s is the cycle minimum
        stack: list[tuple[int, ...]] = [(s,)]
        while stack:
            path = stack.pop()
            tail = path[-1]
            for x in sorted(g.adj[tail], reverse=True):
                if x <= s or x in path:
                    continue
                if any(g.has_edge(x, y) for y in path[1:-1]):
                    continue
                if g.has_edge(x, s) and len(path) > 1:
                    # closing edge; extending past x would chord through s
                    cyc = path + (x,)
                    if len(cyc) >= min_len and cyc[1] < cyc[-1]:
                        assert _is_induced_cycle(g, cyc)
                        return cyc
                    continue
                stack.append(path + (x,))
        return None

    for s in range(g.n):
        found = search(s)
        if found is not None:
            return found
    return None


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n m' header plus m lines of 'u v' (0-based indices)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad edge-list header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge on line {i}: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValueError(f"bad edge on line {i}: {ln!r}") from exc
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
