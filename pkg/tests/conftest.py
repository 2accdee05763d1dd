"""Shared strategies, corpora, and independent brute-force oracles.

The oracles here deliberately avoid the library's own search paths: they
enumerate permutations, subsets, or unpruned path sets so that fast
implementations are checked against slow-but-obvious ones.
"""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from pathecc.graphs import Graph, bfs_distances
from pathecc.pqtree import BinaryMatrix


# --- hypothesis strategies --------------------------------------------------

def graph_strategy(min_n: int = 1, max_n: int = 7, connected: bool = False):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=min_n, max_value=max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        bitmap = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        g = Graph.from_edges(
            n, [e for idx, e in enumerate(pairs) if (bitmap >> idx) & 1]
        )
        if connected:
            comp = {0}
            frontier = [0]
            while frontier:
                u = frontier.pop()
                for x in g.adj[u]:
                    if x not in comp:
                        comp.add(x)
                        frontier.append(x)
            extra = []
            prev = 0
            for v in range(n):
                if v not in comp:
                    extra.append((prev, v))
                prev = v
            if extra:
                g = Graph.from_edges(n, g.edges() + extra)
        return g

    return build()


def matrix_strategy(max_rows: int = 6, max_cols: int = 6):
    @st.composite
    def build(draw):
        r = draw(st.integers(min_value=1, max_value=max_rows))
        c = draw(st.integers(min_value=1, max_value=max_cols))
        bits = tuple(
            tuple(draw(st.integers(0, 1)) for _ in range(c)) for _ in range(r)
        )
        return BinaryMatrix(r, c, bits)

    return build()


# --- brute-force oracles ------------------------------------------------------

def brute_c1p(m: BinaryMatrix):
    """First row permutation making every column's ones contiguous, or None."""
    for perm in permutations(range(m.rows)):
        pos = {row: i for i, row in enumerate(perm)}
        ok = True
        for j in range(m.cols):
            where = sorted(pos[r] for r in range(m.rows) if m.bits[r][j])
            if where and where[-1] - where[0] + 1 != len(where):
                ok = False
                break
        if ok:
            return perm
    return None


def all_simple_paths(g: Graph):
    """Every simple path once, first vertex <= last, lexicographic order."""
    for s in range(g.n):
        stack = [(s,)]
        while stack:
            path = stack.pop()
            if path[0] <= path[-1]:
                yield path
            for x in sorted(g.adj[path[-1]], reverse=True):
                if x not in path:
                    stack.append(path + (x,))


def path_ecc_oracle(g: Graph, path) -> int:
    dist = bfs_distances(g, set(path))
    assert all(d is not None for d in dist)
    return max(dist)  # type: ignore[type-var]


def brute_pe(g: Graph):
    """(value, first witness) by scoring every simple path, no pruning."""
    best = None
    best_path = None
    for path in all_simple_paths(g):
        e = path_ecc_oracle(g, path)
        if best is None or e < best:
            best, best_path = e, path
    return best, best_path


def brute_induced_cycles(g: Graph, min_len: int):
    """All vertex sets of size >= min_len inducing a chordless cycle."""
    out = []
    for size in range(min_len, g.n + 1):
        for vs in combinations(range(g.n), size):
            degs = [sum(1 for u in vs if g.has_edge(v, u)) for v in vs]
            if any(d != 2 for d in degs):
                continue
            # all degree 2: a disjoint union of cycles; connected means one cycle
            seen = {vs[0]}
            frontier = [vs[0]]
            inside = set(vs)
            while frontier:
                u = frontier.pop()
                for x in g.adj[u]:
                    if x in inside and x not in seen:
                        seen.add(x)
                        frontier.append(x)
            if len(seen) == size:
                out.append(vs)
    return out


def brute_has_kat(g: Graph, k: int) -> bool:
    """k-AT existence via avoidance-BFS over all triples, no path extraction."""
    from pathecc.graphs import neighborhood_k

    def connects(x, y, forb):
        if x in forb or y in forb:
            return False
        seen = {x}
        frontier = [x]
        while frontier:
            u = frontier.pop()
            if u == y:
                return True
            for t in g.adj[u]:
                if t not in forb and t not in seen:
                    seen.add(t)
                    frontier.append(t)
        return False

    for a, b, c in combinations(range(g.n), 3):
        if (
            connects(a, b, neighborhood_k(g, (c,), k))
            and connects(a, c, neighborhood_k(g, (b,), k))
            and connects(b, c, neighborhood_k(g, (a,), k))
        ):
            return True
    return False


# --- shared corpora -----------------------------------------------------------

@pytest.fixture(scope="session")
def connected_upto_5():
    from pathecc.families import enumerate_connected

    return [g for n in range(1, 6) for g in enumerate_connected(n)]


@pytest.fixture(scope="session")
def connected_upto_6():
    from pathecc.families import enumerate_connected

    return [g for n in range(1, 7) for g in enumerate_connected(n)]
