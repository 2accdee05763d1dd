"""Named graph families, fixture graphs with their matrices, graph6 I/O,
and exhaustive enumeration of small connected graphs up to isomorphism."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .graphs import Graph, is_connected
from .pqtree import BinaryMatrix

FAMILY_NAMES = (
    "subdivided_claw",
    "cycle",
    "path",
    "clique",
    "ladder_k4",
    "fig_example_a",
    "fig_example_b",
    "fig_example_c",
    "fig_biconvex",
    "random_gnp",
    "exhaustive",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its numeric parameters, as addressed from the CLI."""

    name: str
    params: tuple[float, ...] = ()


def subdivided_claw(k: int) -> Graph:
    """Three legs of k edges each, joined at a center vertex (vertex 0)."""
    if k < 1:
        raise ValueError(f"subdivided claw needs k >= 1, got {k}")
    edges = []
    for leg in range(3):
        prev = 0
        for step in range(k):
            cur = 1 + leg * k + step
            edges.append((prev, cur))
            prev = cur
    return Graph.from_edges(3 * k + 1, edges)


def cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {length}")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def clique(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"clique needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def ladder_k4(k: int) -> Graph:
    """Ladder on 2k vertices whose last rung is blown up into a K4.

    Labels follow the drawing this family is transcribed from: rung i joins
    v_i and v_{2k+1-i}, the rails run i..2k-i and i+1..2k+1-i, and the two
    extra diagonals complete the K4 on v_{k-1}, v_k, v_{k+1}, v_{k+2}.
    Vertex v_i maps to index i-1.
    """
    if k < 2:
        raise ValueError(f"ladder_k4 needs k >= 2, got {k}")

    def e(i: int, j: int) -> tuple[int, int]:
        return (i - 1, j - 1)

    edges = [e(i, 2 * k + 1 - i) for i in range(1, k + 1)]
    edges += [e(i, 2 * k - i) for i in range(1, k)]
    edges += [e(i + 1, 2 * k + 1 - i) for i in range(1, k)]
    edges += [e(k - 1, k), e(k + 1, k + 2)]
    return Graph.from_edges(2 * k, edges)


def ladder_k4_diagonal(k: int) -> frozenset[int]:
    """Diagonal choice making the identity order a consecutivity witness."""
    if k < 2:
        raise ValueError(f"ladder_k4 needs k >= 2, got {k}")
    return frozenset((k - 1, k))


def _from_labeled_edges(n: int, labeled: Sequence[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in labeled])


def fig_example_a() -> Graph:
    """Six-vertex fixture whose plain adjacency matrix is consecutive as given."""
    return _from_labeled_edges(6, [(4, 5), (5, 1), (1, 6), (6, 2), (2, 5), (5, 3)])


def fig_example_b() -> Graph:
    """Six-vertex fixture whose all-ones-diagonal matrix is consecutive as given."""
    return _from_labeled_edges(
        6, [(3, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (3, 5)]
    )


def fig_example_c() -> Graph:
    """fig_example_a plus the edge v3-v4; needs one augmented diagonal entry."""
    return _from_labeled_edges(
        6, [(4, 5), (5, 1), (1, 6), (6, 2), (2, 5), (5, 3), (3, 4)]
    )


FIG_C_DIAGONAL = frozenset((3,))  # v4

def fig_biconvex() -> Graph:
    """Seven-vertex biconvex fixture carrying the 1-AT {v1, v4, v5}."""
    return _from_labeled_edges(
        7, [(1, 6), (6, 3), (3, 7), (7, 2), (2, 5), (2, 6), (7, 4)]
    )


FIG_BICONVEX_AT = (0, 3, 4)  # v1, v4, v5

# Matrices transcribed from the fixture drawings; tests assert they agree
# with the generators above.
FIG_A_ADJACENCY = BinaryMatrix.from_rows(
    [
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 1, 1, 1, 0, 0],
        [1, 1, 0, 0, 0, 0],
    ]
)

FIG_B_AUGMENTED = BinaryMatrix.from_rows(
    [
        [1, 1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0, 0],
        [1, 1, 1, 1, 1, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
    ]
)

FIG_C_PARTIAL = BinaryMatrix.from_rows(
    [
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 1, 1, 1, 0],
        [1, 1, 1, 1, 0, 0],
        [1, 1, 0, 0, 0, 0],
    ]
)


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 1:
        raise ValueError(f"random graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a family spec describes; exhaustive specs are streams."""
    name, params = spec.name, spec.params
    ints = [int(x) for x in params]
    if name == "subdivided_claw":
        return subdivided_claw(*ints)
    if name == "cycle":
        return cycle(*ints)
    if name == "path":
        return path_graph(*ints)
    if name == "clique":
        return clique(*ints)
    if name == "ladder_k4":
        return ladder_k4(*ints)
    if name == "fig_example_a":
        return fig_example_a()
    if name == "fig_example_b":
        return fig_example_b()
    if name == "fig_example_c":
        return fig_example_c()
    if name == "fig_biconvex":
        return fig_biconvex()
    if name == "random_gnp":
        n = int(params[0])
        p = float(params[1])
        seed = int(params[2]) if len(params) > 2 else 0
        return random_gnp(n, p, seed)
    if name == "exhaustive":
        raise ValueError("exhaustive specs describe a stream; use enumerate_connected")
    raise ValueError(f"unknown family {name!r}")


# --- graph6 ----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; the message carries the failing byte offset."""


def _g6_encode_number(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(
            chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0)
        )
    raise ValueError(f"graph6 encoding supports at most 258047 vertices, got {n}")


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 line for g (no trailing newline, no optional header)."""
    out = [_g6_encode_number(g.n)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos : pos + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (short or extended vertex-count form)."""
    s = line.strip()
    offset = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
        offset = len(_G6_HEADER)
    if not s:
        raise Graph6Error(f"empty graph6 payload at byte {offset}")

    def val(i: int) -> int:
        ch = ord(s[i])
        if not 63 <= ch <= 126:
            raise Graph6Error(f"invalid graph6 byte {s[i]!r} at byte {offset + i}")
        return ch - 63

    if val(0) == 63:  # '~' marks the extended vertex-count forms
        if len(s) >= 2 and val(1) == 63:
            raise Graph6Error(
                f"graph6 very-long form (>258047 vertices) unsupported at byte {offset}"
            )
        if len(s) < 4:
            raise Graph6Error(f"truncated graph6 vertex count at byte {offset + len(s)}")
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        body = 4
    else:
        n = val(0)
        body = 1

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - body
    if have < need:
        raise Graph6Error(
            f"truncated graph6 payload at byte {offset + len(s)}: "
            f"need {need} bytes, have {have}"
        )
    if have > need:
        raise Graph6Error(
            f"trailing graph6 bytes at byte {offset + body + need}"
        )
    edges = []
    idx = 0
    for pos in range(need):
        group = val(body + pos)
        for shift in (5, 4, 3, 2, 1, 0):
            if idx >= nbits:
                break
            if (group >> shift) & 1:
                # bit idx addresses the pair (i, j) in column-major order
                j = 1
                while (j + 1) * j // 2 <= idx:
                    j += 1
                i = idx - j * (j - 1) // 2
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


# --- exhaustive enumeration -------------------------------------------------

def canonical_key(g: Graph) -> tuple[int, ...]:
    """Minimum adjacency bitstring over all vertex orderings.

    Positions are assigned one at a time; placing a vertex at position p
    fixes its adjacency bits to the p already-placed vertices, and branches
    whose bits already exceed the best known prefix are cut.  The result is
    the true minimum, grouped as one integer per position.
    """
    n = g.n
    if n == 0:
        return ()
    adj = g.adj
    best: Optional[list[int]] = None

    def extend(placed: list[int], used: set[int], prefix: list[int]) -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        scored = []
        for x in range(n):
            if x in used:
                continue
            word = 0
            ax = adj[x]
            for y in placed:
                word = (word << 1) | (1 if y in ax else 0)
            scored.append((word, x))
        # smallest word first: finds a strong incumbent early
        for word, x in sorted(scored):
            # prune against the incumbent; best may change between siblings
            if best is not None and prefix == best[:p] and word > best[p]:
                continue
            placed.append(x)
            used.add(x)
            prefix.append(word)
            extend(placed, used, prefix)
            prefix.pop()
            used.remove(x)
            placed.pop()

    extend([], set(), [])
    assert best is not None
    return tuple(best)


@lru_cache(maxsize=None)
def _all_graphs_upto_iso(n: int) -> tuple[Graph, ...]:
    """All graphs (connected or not) on n vertices up to isomorphism.

    Built by extending every (n-1)-vertex representative with each possible
    neighborhood of a new vertex, deduplicating by canonical key.
    """
    if n == 1:
        return (Graph.from_edges(1),)
    found: dict[tuple[int, ...], Graph] = {}
    for parent in _all_graphs_upto_iso(n - 1):
        base_edges = parent.edges()
        for nbhd in range(1 << (n - 1)):
            edges = base_edges + [
                (v, n - 1) for v in range(n - 1) if (nbhd >> v) & 1
            ]
            g = Graph.from_edges(n, edges)
            key = canonical_key(g)
            if key not in found:
                found[key] = g
    return tuple(found[k] for k in sorted(found))


MAX_ENUMERATION_N = 7


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices up to isomorphism, in a fixed order.

    Larger corpora are meant to be supplied externally as graph6 files.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )
    for g in _all_graphs_upto_iso(n):
        if is_connected(g):
            yield g
