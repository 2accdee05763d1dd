"""Corpus-level property checks and the small-graph counterexample hunter.

Every property is a pure predicate over one graph; the runner evaluates the
enabled set over a corpus and assembles a deterministic report.  Set
CPK_THREADS to evaluate graphs in parallel; results are merged in corpus
order either way, so reports are stable.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .asteroidal import find_k_at, min_k_at_free, verify_kat
from .central_path import find_k_dominating_path_or_witness
from .eccentricity import has_path_with_ecc_at_most, pe_exact
from .families import emit_graph6
from .graphs import (
    Graph,
    find_long_induced_cycle,
    induced_paths,
    is_connected,
    neighborhood_k,
)
from .star_c1p import (
    OrderingWitness,
    check_order_lemma,
    find_star_c1p,
    neighborhood_bounds,
    verify_witness,
)

PE_MAX_N = 12
STAR_MAX_N = 20


@dataclass(frozen=True)
class PropertyResult:
    property_id: str
    checked: int
    skipped: int
    violations: tuple[tuple[str, str], ...]  # (graph6, details)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class PropertyReport:
    corpus: str
    results: tuple[PropertyResult, ...]
    wall_time_s: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    witness: OrderingWitness
    pe_value: int
    pe_witness: tuple[int, ...]


@dataclass(frozen=True)
class HuntResult:
    searched: int
    with_witness: int
    counterexample: Optional[Counterexample]


class _GraphCase:
    """Lazy per-graph evaluations shared by all properties in one run."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict = {}

    def _get(self, key: str, fn: Callable):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def connected(self) -> bool:
        return self._get("conn", lambda: is_connected(self.g))

    @property
    def star(self) -> Optional[OrderingWitness]:
        return self._get("star", lambda: find_star_c1p(self.g))

    @property
    def min_k(self) -> int:
        return self._get("min_k", lambda: min_k_at_free(self.g))

    @property
    def pe(self) -> int:
        return self._get("pe", lambda: pe_exact(self.g).value)


_SKIP = object()


def _prop_theorem1(case: _GraphCase):
    if not case.connected or case.g.n > PE_MAX_N:
        return _SKIP
    if case.min_k == 1 and case.pe > 1:
        return f"1-AT-free but pe={case.pe}"
    return None


def _prop_theorem3(case: _GraphCase):
    if not case.connected or case.g.n > PE_MAX_N:
        return _SKIP
    if case.pe > case.min_k:
        return f"pe={case.pe} exceeds min k-AT-free level {case.min_k}"
    return None


def _prop_theorem4(case: _GraphCase):
    if case.g.n > STAR_MAX_N:
        return _SKIP
    if case.star is None:
        return None
    kat = find_k_at(case.g, 2)
    if kat is not None:
        return f"ordering witness exists alongside 2-AT {kat.triple}"
    return None


def _prop_corollary(case: _GraphCase):
    if not case.connected or case.g.n > PE_MAX_N:
        return _SKIP
    if case.star is not None and case.pe > 2:
        return f"ordering witness exists but pe={case.pe}"
    return None


def _prop_c5_free(case: _GraphCase):
    if case.g.n > STAR_MAX_N:
        return _SKIP
    if case.star is None:
        return None
    cyc = find_long_induced_cycle(case.g, 5)
    if cyc is not None:
        return f"ordering witness exists alongside induced cycle {cyc}"
    return None


def _prop_order_lemma(case: _GraphCase):
    if case.g.n > STAR_MAX_N:
        return _SKIP
    w = case.star
    if w is None:
        return None
    for p in induced_paths(case.g):
        if not check_order_lemma(case.g, w, p):
            return f"order conditions fail on induced path {p}"
    return None


def path_neighborhood_holds(
    g: Graph, w: OrderingWitness, p: tuple[int, ...], x: int
) -> bool:
    """Rank bounds forced on a vertex x outside N[p] for odd-length induced p.

    With u, v the extremities: if x sits beyond both in the order, both
    neighborhoods end before x; if before both, they start after x; if
    between, the far extremity's neighborhood ends before x and the near
    one's starts after it.
    """
    u, v = p[0], p[-1]
    ru, rv, rx = w.mu[u], w.mu[v], w.mu[x]
    bu = neighborhood_bounds(g, w, u)
    bv = neighborhood_bounds(g, w, v)
    if rx > ru and rx > rv:
        return bu.max_rank <= rx and bv.max_rank <= rx
    if rx < ru and rx < rv:
        return rx <= bu.min_rank and rx <= bv.min_rank
    if ru < rx < rv:
        return bv.max_rank <= rx <= bu.min_rank
    return bu.max_rank <= rx <= bv.min_rank


def _prop_path_neighborhood(case: _GraphCase):
    if case.g.n > STAR_MAX_N:
        return _SKIP
    w = case.star
    if w is None:
        return None
    g = case.g
    for p in induced_paths(g):
        if len(p) % 2 != 0:  # odd number of edges = even vertex count
            continue
        closed = neighborhood_k(g, p, 1)
        for x in range(g.n):
            if x in closed:
                continue
            if not path_neighborhood_holds(g, w, p, x):
                return f"rank bounds fail for path {p} and vertex {x}"
    return None


def _prop_star_c1p_exists(case: _GraphCase):
    if case.g.n > STAR_MAX_N:
        return _SKIP
    if case.star is None:
        return "no ordering witness"
    return None


def _prop_dichotomy(case: _GraphCase):
    if not case.connected or case.g.n > PE_MAX_N:
        return _SKIP
    g = case.g
    for k in (1, 2, 3):
        d = find_k_dominating_path_or_witness(g, k)
        want_path = k >= case.min_k
        if d.path is not None:
            if not want_path:
                return f"k={k}: path returned although a {k}-AT exists"
            if has_path_with_ecc_at_most(g, k) is None:
                return f"k={k}: path returned but decision oracle disagrees"
        else:
            assert d.witness is not None
            if want_path:
                return f"k={k}: witness returned although graph is {k}-AT-free"
            if not verify_kat(g, d.witness):
                return f"k={k}: witness fails re-verification"
    return None


PROPERTIES: dict[str, Callable[[_GraphCase], object]] = {
    "theorem1": _prop_theorem1,
    "theorem3": _prop_theorem3,
    "theorem4": _prop_theorem4,
    "corollary": _prop_corollary,
    "c5_free": _prop_c5_free,
    "order_lemma": _prop_order_lemma,
    "path_neighborhood": _prop_path_neighborhood,
    "star_c1p_exists": _prop_star_c1p_exists,
    "dichotomy": _prop_dichotomy,
}


def _eval_graph(args: tuple[Graph, tuple[str, ...]]) -> list[tuple[str, object]]:
    g, prop_ids = args
    case = _GraphCase(g)
    return [(pid, PROPERTIES[pid](case)) for pid in prop_ids]


def _worker_count() -> int:
    raw = os.environ.get("CPK_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_property_suite(
    corpus: Iterable[Graph],
    properties: Iterable[str],
    corpus_name: str = "corpus",
) -> PropertyReport:
    """Evaluate the chosen properties over every graph of the corpus.

    Oversized or otherwise ineligible graphs are skipped and counted, never
    fatal.  The report depends only on corpus order and the enabled set.
    """
    prop_ids = tuple(sorted(set(properties)))
    unknown = [p for p in prop_ids if p not in PROPERTIES]
    if unknown:
        raise ValueError(f"unknown properties: {unknown}")
    start = time.monotonic()
    graphs = list(corpus)
    jobs = [(g, prop_ids) for g in graphs]
    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_eval_graph, jobs, chunksize=16))
    else:
        rows = [_eval_graph(job) for job in jobs]

    checked = {pid: 0 for pid in prop_ids}
    skipped = {pid: 0 for pid in prop_ids}
    violations: dict[str, list[tuple[str, str]]] = {pid: [] for pid in prop_ids}
    for g, row in zip(graphs, rows):
        for pid, outcome in row:
            if outcome is _SKIP:
                skipped[pid] += 1
            elif outcome is None:
                checked[pid] += 1
            else:
                checked[pid] += 1
                violations[pid].append((emit_graph6(g), str(outcome)))
    results = tuple(
        PropertyResult(pid, checked[pid], skipped[pid], tuple(violations[pid]))
        for pid in prop_ids
    )
    return PropertyReport(corpus_name, results, time.monotonic() - start)


def hunt_conjecture(
    corpus: Iterable[Graph], corpus_name: str = "corpus"
) -> HuntResult:
    """Look for a connected graph with an ordering witness yet pe >= 2.

    Records the first hit, re-verified on both sides before being reported;
    finding none leaves the conjectured bound standing on this corpus.
    """
    searched = 0
    with_witness = 0
    for g in corpus:
        searched += 1
        if g.n > min(PE_MAX_N, STAR_MAX_N) or not is_connected(g):
            continue
        witness = find_star_c1p(g)
        if witness is None:
            continue
        with_witness += 1
        result = pe_exact(g)
        if result.value >= 2:
            assert verify_witness(g, witness)
            return HuntResult(
                searched,
                with_witness,
                Counterexample(emit_graph6(g), witness, result.value, result.witness),
            )
    return HuntResult(searched, with_witness, None)
