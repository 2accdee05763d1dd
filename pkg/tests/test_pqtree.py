from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_c1p, matrix_strategy
from pathecc.families import FIG_A_ADJACENCY, FIG_B_AUGMENTED, FIG_C_PARTIAL
from pathecc.pqtree import (
    BinaryMatrix,
    Leaf,
    PNode,
    PQTree,
    QNode,
    format_matrix,
    frontier,
    has_c1p,
    is_c1p_order,
    parse_matrix,
    pq_reduce,
)


def all_frontiers(t: PQTree) -> set[tuple[int, ...]]:
    """Every leaf order the tree represents, by brute expansion."""

    def expand(node) -> set[tuple[int, ...]]:
        if isinstance(node, Leaf):
            return {(node.row,)}
        child_sets = [expand(c) for c in node.children]

        def concats(order) -> set[tuple[int, ...]]:
            outs = {()}
            for idx in order:
                outs = {o + tail for o in outs for tail in child_sets[idx]}
            return outs

        if isinstance(node, PNode):
            result = set()
            for order in permutations(range(len(node.children))):
                result |= concats(order)
            return result
        assert isinstance(node, QNode)
        idx = list(range(len(node.children)))
        return concats(idx) | concats(idx[::-1])

    return expand(t.root)


def perms_with_consecutive(rows: int, constraints) -> set[tuple[int, ...]]:
    out = set()
    for perm in permutations(range(rows)):
        pos = {r: i for i, r in enumerate(perm)}
        if all(
            max(pos[r] for r in s) - min(pos[r] for r in s) + 1 == len(s)
            for s in constraints
        ):
            out.add(perm)
    return out


def test_universal_tree():
    t = PQTree.universal(4)
    assert frontier(t) == (0, 1, 2, 3)
    assert len(all_frontiers(t)) == 24
    t1 = PQTree.universal(1)
    assert frontier(t1) == (0,)
    with pytest.raises(ValueError):
        PQTree.universal(0)


def test_reduce_full_set_keeps_everything():
    t = PQTree.universal(5)
    t2 = pq_reduce(t, set(range(5)))
    assert t2 is not None
    assert all_frontiers(t2) == all_frontiers(t)


def test_reduce_two_overlapping_pairs():
    t = PQTree.universal(3)
    t = pq_reduce(t, {0, 1})
    assert t is not None
    t = pq_reduce(t, {1, 2})
    assert t is not None
    assert all_frontiers(t) == {(0, 1, 2), (2, 1, 0)}


def test_reduce_chain_then_contradiction():
    t = PQTree.universal(4)
    for s in ({0, 1}, {2, 3}, {1, 2}):
        t = pq_reduce(t, s)
        assert t is not None
    assert all_frontiers(t) == {(0, 1, 2, 3), (3, 2, 1, 0)}
    assert pq_reduce(t, {0, 2}) is None


def test_reduce_errors():
    t = PQTree.universal(3)
    with pytest.raises(ValueError):
        pq_reduce(t, set())
    with pytest.raises(ValueError):
        pq_reduce(t, {0, 7})


@given(
    st.integers(min_value=2, max_value=5),
    st.lists(st.sets(st.integers(0, 4), min_size=1), min_size=1, max_size=5),
)
@settings(max_examples=300, deadline=None)
def test_reduce_matches_permutation_filter(rows, raw_constraints):
    """After each reduction the frontier set equals the brute-force filter."""
    constraints = [frozenset(x % rows for x in s) for s in raw_constraints]
    t: PQTree | None = PQTree.universal(rows)
    applied: list[frozenset[int]] = []
    for s in constraints:
        applied.append(s)
        expected = perms_with_consecutive(rows, applied)
        t = pq_reduce(t, s)
        if t is None:
            assert expected == set()
            return
        assert all_frontiers(t) == expected


def test_has_c1p_fig_matrices():
    assert has_c1p(FIG_A_ADJACENCY) is not None
    assert has_c1p(FIG_B_AUGMENTED) is not None
    assert has_c1p(FIG_C_PARTIAL) is not None
    # the fixtures are printed in an order that is already consecutive
    assert is_c1p_order(FIG_A_ADJACENCY, range(6))
    assert is_c1p_order(FIG_B_AUGMENTED, range(6))
    assert is_c1p_order(FIG_C_PARTIAL, range(6))


def test_has_c1p_identity_matrix():
    ident = BinaryMatrix.from_rows([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    assert has_c1p(ident) is not None


def test_has_c1p_known_negative():
    # rows cannot be ordered so that all three overlapping pairs plus the
    # disjointness constraint hold; classic non-C1P instance
    m = BinaryMatrix.from_rows(
        [
            [1, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [1, 1, 1],
        ]
    )
    assert (has_c1p(m) is None) == (brute_c1p(m) is None)


@given(matrix_strategy(max_rows=6, max_cols=6))
@settings(max_examples=400, deadline=None)
def test_has_c1p_matches_brute_force(m):
    mine = has_c1p(m)
    ref = brute_c1p(m)
    assert (mine is None) == (ref is None)
    if mine is not None:
        assert is_c1p_order(m, mine)


@given(matrix_strategy(max_rows=5, max_cols=5), st.randoms())
@settings(max_examples=150, deadline=None)
def test_column_order_is_irrelevant(m, rng):
    cols = list(range(m.cols))
    rng.shuffle(cols)
    shuffled = BinaryMatrix(
        m.rows, m.cols, tuple(tuple(row[j] for j in cols) for row in m.bits)
    )
    assert (has_c1p(m) is None) == (has_c1p(shuffled) is None)


def test_matrix_text_roundtrip():
    text = format_matrix(FIG_C_PARTIAL)
    assert parse_matrix(text) == FIG_C_PARTIAL
    with pytest.raises(ValueError):
        parse_matrix("2 2\n01")
    with pytest.raises(ValueError):
        parse_matrix("2 2\n01\n2x")
    with pytest.raises(ValueError):
        BinaryMatrix.from_rows([[0, 1], [1]])
