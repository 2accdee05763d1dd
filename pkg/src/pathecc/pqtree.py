"""Binary matrices, PQ-trees, and consecutive-ones-property testing.

The PQ-tree here is persistent: a reduction returns a new tree and leaves
the input untouched, so backtracking searches can keep whole stacks of
trees and share structure for free.  The reduction applies the classic
template set (leaf, P1-P6, Q1-Q3) via a recursive labeling pass instead of
the amortized bubble-up bookkeeping; at the matrix sizes this library
handles, clarity wins over the linear-time constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union


@dataclass(frozen=True)
class BinaryMatrix:
    """A 0/1 matrix stored row-major as nested tuples."""

    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        out = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix rows")
            if any(x not in (0, 1) for x in r):
                raise ValueError("matrix entries must be 0 or 1")
            out.append(tuple(int(x) for x in r))
        return cls(len(out), width, tuple(out))

    def column_ones(self, j: int) -> frozenset[int]:
        return frozenset(i for i in range(self.rows) if self.bits[i][j])


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the 'rows cols' header plus rows of 0/1 characters."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}, expected 'rows cols'")
    try:
        r, c = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad matrix header {lines[0]!r}") from exc
    if len(lines) - 1 != r:
        raise ValueError(f"expected {r} matrix rows, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:], start=2):
        row = ln.replace(" ", "")
        if len(row) != c or any(ch not in "01" for ch in row):
            raise ValueError(f"bad matrix row on line {i}: {ln!r}")
        rows.append(tuple(int(ch) for ch in row))
    return BinaryMatrix(r, c, tuple(rows))


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend("".join(str(x) for x in row) for row in m.bits)
    return "\n".join(lines) + "\n"


# --- tree nodes -----------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    row: int

    @property
    def leaves(self) -> frozenset[int]:
        return frozenset((self.row,))


@dataclass(frozen=True)
class PNode:
    children: tuple["Node", ...]
    leaves: frozenset[int]


@dataclass(frozen=True)
class QNode:
    children: tuple["Node", ...]
    leaves: frozenset[int]


Node = Union[Leaf, PNode, QNode]


def _union_leaves(children: Sequence[Node]) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for c in children:
        out |= c.leaves
    return out


def _p(children: Sequence[Node]) -> Node:
    if len(children) == 1:
        return children[0]
    return PNode(tuple(children), _union_leaves(children))


def _q(children: Sequence[Node]) -> Node:
    if len(children) == 1:
        return children[0]
    if len(children) == 2:
        # a two-child Q allows exactly the same two frontiers as a P
        return PNode(tuple(children), _union_leaves(children))
    return QNode(tuple(children), _union_leaves(children))


def _group(nodes: Sequence[Node]) -> Node:
    return nodes[0] if len(nodes) == 1 else _p(nodes)


@dataclass(frozen=True)
class PQTree:
    """Rooted tree over a fixed leaf set; P children permute, Q children flip."""

    root: Node

    @classmethod
    def universal(cls, rows: int) -> "PQTree":
        if rows < 1:
            raise ValueError("a PQ-tree needs at least one leaf")
        leaves = [Leaf(i) for i in range(rows)]
        return cls(leaves[0] if rows == 1 else _p(leaves))

    @property
    def leaf_set(self) -> frozenset[int]:
        return self.root.leaves


def frontier(t: PQTree) -> tuple[int, ...]:
    """Left-to-right leaf order of the tree as stored."""
    out: list[int] = []

    def walk(node: Node) -> None:
        if isinstance(node, Leaf):
            out.append(node.row)
        else:
            for c in node.children:
                walk(c)

    walk(t.root)
    return tuple(out)


# --- reduction ------------------------------------------------------------
#
# _label classifies a non-root node against the constraint set and returns
#   ("e", node)      all leaves outside s (template L1/P1/Q1, empty side)
#   ("f", node)      all leaves inside s  (same templates, full side)
#   ("p", children)  singly partial: an ordered child tuple, empty leaves
#                    at the left end and full leaves at the right end
#                    (templates P3, P5, Q2)
#   None             the constraint is unsatisfiable below this node

_Labeled = tuple[str, object]


def _label(node: Node, s: frozenset[int]) -> Optional[_Labeled]:
    lv = node.leaves
    if lv.isdisjoint(s):
        return ("e", node)
    if lv <= s:
        return ("f", node)
    # a leaf is never partial, so node has children
    subs = []
    for c in node.children:  # type: ignore[union-attr]
        lab = _label(c, s)
        if lab is None:
            return None
        subs.append(lab)

    if isinstance(node, PNode):
        empty = [n for t, n in subs if t == "e"]
        full = [n for t, n in subs if t == "f"]
        parts = [p for t, p in subs if t == "p"]
        if len(parts) == 0:
            # P3: both sides nonempty because the node is partial
            return ("p", (_group(empty), _group(full)))
        if len(parts) == 1:
            # P5: empties on the empty end, fulls on the full end
            seq: tuple = ()
            if empty:
                seq += (_group(empty),)
            seq += tuple(parts[0])
            if full:
                seq += (_group(full),)
            return ("p", seq)
        return None

    # QNode: children must read e* [partial] f* in one orientation (Q2)
    for ordered in (subs, list(reversed(subs))):
        spliced = _parse_singly_partial(ordered)
        if spliced is not None:
            return ("p", spliced)
    return None


def _parse_singly_partial(subs: Sequence[_Labeled]) -> Optional[tuple]:
    out: list[Node] = []
    in_full = False
    for tag, payload in subs:
        if not in_full:
            if tag == "e":
                out.append(payload)  # type: ignore[arg-type]
            elif tag == "p":
                out.extend(payload)  # type: ignore[arg-type]
                in_full = True
            else:
                out.append(payload)  # type: ignore[arg-type]
                in_full = True
        else:
            if tag != "f":
                return None
            out.append(payload)  # type: ignore[arg-type]
    return tuple(out)


def _apply_root(node: Node, s: frozenset[int]) -> Optional[Node]:
    """Templates at the pertinent root, where both ends may stay interior."""
    subs = []
    for c in node.children:  # type: ignore[union-attr]
        lab = _label(c, s)
        if lab is None:
            return None
        subs.append(lab)

    if isinstance(node, PNode):
        empty = [n for t, n in subs if t == "e"]
        full = [n for t, n in subs if t == "f"]
        parts = [p for t, p in subs if t == "p"]
        if len(parts) == 0:
            # P2: bundle the full children so they stay adjacent
            return _p(tuple(empty) + (_group(full),))
        if len(parts) == 1:
            # P4
            mid = tuple(parts[0]) + ((_group(full),) if full else ())
            qq = _q(mid)
            return _p(tuple(empty) + (qq,)) if empty else qq
        if len(parts) == 2:
            # P6: both partial children merge around the full block
            mid = (
                tuple(parts[0])
                + ((_group(full),) if full else ())
                + tuple(reversed(parts[1]))
            )
            qq = _q(mid)
            return _p(tuple(empty) + (qq,)) if empty else qq
        return None

    # Q root (Q3): children read e* [partial] f* [partial-reversed] e*
    out: list[Node] = []
    state = 0  # 0 leading empties, 1 full block, 2 trailing empties
    for tag, payload in subs:
        if tag == "e":
            if state == 1:
                state = 2
            out.append(payload)  # type: ignore[arg-type]
        elif tag == "f":
            if state == 0:
                state = 1
            elif state == 2:
                return None
            out.append(payload)  # type: ignore[arg-type]
        else:
            if state == 0:
                out.extend(payload)  # type: ignore[arg-type]
                state = 1
            elif state == 1:
                out.extend(reversed(payload))  # type: ignore[arg-type]
                state = 2
            else:
                return None
    return _q(tuple(out))


def _reduce_node(node: Node, s: frozenset[int]) -> Optional[Node]:
    if node.leaves == s or isinstance(node, Leaf):
        return node
    # descend while one child wholly contains the constraint
    for i, c in enumerate(node.children):
        if s <= c.leaves:
            c2 = _reduce_node(c, s)
            if c2 is None:
                return None
            children = node.children[:i] + (c2,) + node.children[i + 1 :]
            if isinstance(node, PNode):
                return PNode(children, node.leaves)
            return QNode(children, node.leaves)
    return _apply_root(node, s)


def pq_reduce(t: PQTree, s: Iterable[int]) -> Optional[PQTree]:
    """Constrain the tree so the rows of s are consecutive in every frontier.

    Returns the reduced tree, or None when no frontier of t keeps s
    consecutive.  The input tree is never modified.
    """
    ss = frozenset(s)
    if not ss:
        raise ValueError("cannot reduce by an empty row set")
    unknown = ss - t.leaf_set
    if unknown:
        raise ValueError(f"unknown rows in constraint: {sorted(unknown)}")
    root = _reduce_node(t.root, ss)
    return None if root is None else PQTree(root)


# --- consecutive ones -----------------------------------------------------

def is_c1p_order(m: BinaryMatrix, perm: Sequence[int]) -> bool:
    """True iff placing row perm[i] at position i makes every column's 1s a block."""
    pos = {r: i for i, r in enumerate(perm)}
    for j in range(m.cols):
        where = [pos[r] for r in m.column_ones(j)]
        if where and max(where) - min(where) + 1 != len(where):
            return False
    return True


def has_c1p(m: BinaryMatrix) -> Optional[tuple[int, ...]]:
    """A row permutation witnessing the consecutive ones property, or None.

    Builds the universal tree and reduces by each column's 1-set, widest
    columns first so infeasible instances fail fast.  Empty and full
    columns are vacuously consecutive and skipped.
    """
    tree = PQTree.universal(m.rows)
    cols = sorted(range(m.cols), key=lambda j: (-len(m.column_ones(j)), j))
    for j in cols:
        ones = m.column_ones(j)
        if len(ones) in (0, m.rows):
            continue
        reduced = pq_reduce(tree, ones)
        if reduced is None:
            return None
        tree = reduced
    perm = frontier(tree)
    assert is_c1p_order(m, perm), "PQ-tree produced a non-witnessing order"
    return perm
