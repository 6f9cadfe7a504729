"""Exact search oracles, independent of the constructive pipeline.

* :func:`coupon_search` -- backtracking for a k-colouring in which every open
  neighbourhood contains all k colours.
* :func:`onh` / :func:`hypergraph_two_coloring` -- the open neighbourhood
  hypergraph and a plain property-B search on it.
* :func:`total_domatic_number` -- exact value with a witness partition.
* :func:`enumerate_f_partitions` and :func:`find_l_embedding` -- exhaustive
  cover search and subgraph search used to cross-check the construction.
"""

from __future__ import annotations

import itertools
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Iterator, Protocol, Sequence

import numpy as np

from .coloring import Color
from .graph import Graph
from .motif import LWitness, PieceKind, template_of
from .partition import Partition, Piece

DEFAULT_TWO_COLOR_BUDGET = 10**8
DEFAULT_PER_K_BUDGET = 10**7


def default_budget() -> int:
    env = os.environ.get("TDP_BUDGET")
    return int(env) if env else DEFAULT_TWO_COLOR_BUDGET


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class SearchCancelled(RuntimeError):
    pass


class CancelToken(Protocol):
    def is_set(self) -> bool: ...


@dataclass
class SearchResult:
    k: int
    witness: list[int] | None  # colour index per vertex
    nodes: int
    elapsed: float

    @property
    def found(self) -> bool:
        return self.witness is not None


class _CouponSearch:
    def __init__(self, g: Graph, k: int, budget: int, cancel: CancelToken | None):
        self.g, self.k, self.budget, self.cancel = g, k, budget, cancel
        self.color = [-1] * g.n
        self.count = [[0] * k for _ in range(g.n)]
        self.unset = [len(row) for row in g.adj]
        self.colored_nbrs = [0] * g.n
        self.trail: list[int] = []
        self.nodes = 0

    def missing(self, u: int) -> int:
        return sum(1 for c in self.count[u] if c == 0)

    def _set(self, v: int, c: int):
        self.color[v] = c
        for u in self.g.adj[v]:
            self.count[u][c] += 1
            self.unset[u] -= 1
            self.colored_nbrs[u] += 1
        self.trail.append(v)

    def _undo(self, mark: int):
        while len(self.trail) > mark:
            v = self.trail.pop()
            c = self.color[v]
            for u in self.g.adj[v]:
                self.count[u][c] -= 1
                self.unset[u] += 1
                self.colored_nbrs[u] -= 1
            self.color[v] = -1

    def _propagate(self, v: int, c: int) -> bool:
        queue = [(v, c)]
        while queue:
            x, cx = queue.pop()
            if self.color[x] >= 0:
                if self.color[x] != cx:
                    return False
                continue
            self._set(x, cx)
            for u in self.g.adj[x]:
                miss = self.missing(u)
                if miss > self.unset[u]:
                    return False
                if miss == 1 and self.unset[u] == 1:
                    w = next(y for y in self.g.adj[u] if self.color[y] < 0)
                    queue.append((w, self.count[u].index(0)))
        return True

    def _pick(self) -> int:
        best, key = -1, None
        for v in range(self.g.n):
            if self.color[v] < 0:
                kv = -self.colored_nbrs[v]
                if key is None or kv < key:
                    best, key = v, kv
        return best

    def _solve(self, first: bool) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.nodes)
        if self.cancel is not None and self.cancel.is_set():
            raise SearchCancelled()
        v = self._pick()
        if v < 0:
            return True
        # colours are interchangeable, so the first branching vertex takes colour 0
        for c in ((0,) if first else range(self.k)):
            mark = len(self.trail)
            if self._propagate(v, c) and self._solve(False):
                return True
            self._undo(mark)
        return False

    def run(self) -> list[int] | None:
        if any(len(row) < self.k for row in self.g.adj):
            return None
        if self.g.n == 0:
            return []
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.g.n + 1000))
        try:
            return list(self.color) if self._solve(True) else None
        finally:
            sys.setrecursionlimit(limit)


def coupon_search(
    g: Graph, k: int, budget: int | None = None, cancel: CancelToken | None = None
) -> SearchResult:
    """Exhaustive search for a k-coupon colouring of ``g``.

    Raises :class:`BudgetExhausted` instead of returning when the node budget
    runs out, so a ``None`` witness always means proven impossible.
    """
    t0 = time.perf_counter()
    s = _CouponSearch(g, k, default_budget() if budget is None else budget, cancel)
    witness = s.run()
    return SearchResult(k, witness, s.nodes, time.perf_counter() - t0)


def exact_two_colorable(
    g: Graph, budget: int | None = None, cancel: CancelToken | None = None
) -> list[Color] | None:
    res = coupon_search(g, 2, budget, cancel)
    if res.witness is None:
        return None
    return [Color.BLACK if c == 0 else Color.WHITE for c in res.witness]


@dataclass
class ExactResult:
    d_t: int
    witness: list[list[int]] | None
    nodes: int
    elapsed: float
    proven: bool = True
    nodes_per_k: dict[int, int] = field(default_factory=dict)


def total_domatic_number(
    g: Graph, budget_per_k: int = DEFAULT_PER_K_BUDGET, cancel: CancelToken | None = None
) -> ExactResult:
    """Largest k such that V(g) splits into k total dominating sets."""
    t0 = time.perf_counter()
    if g.n == 0 or any(not row for row in g.adj):
        return ExactResult(0, None, 0, time.perf_counter() - t0)
    per_k = {}
    for k in range(min(len(row) for row in g.adj), 1, -1):
        res = coupon_search(g, k, budget_per_k, cancel)
        per_k[k] = res.nodes
        if res.found:
            classes = [[v for v, c in enumerate(res.witness) if c == i] for i in range(k)]
            return ExactResult(k, classes, sum(per_k.values()), time.perf_counter() - t0, True, per_k)
    return ExactResult(1, [list(range(g.n))], sum(per_k.values()), time.perf_counter() - t0, True, per_k)


# -- open neighbourhood hypergraph ---------------------------------------------


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for e in self.edges:
            if not e or any(not 0 <= x < self.n for x in e):
                raise ValueError(f"bad hyperedge {e}")

    def incidence(self) -> np.ndarray:
        m = np.zeros((len(self.edges), self.n), dtype=np.int8)
        for i, e in enumerate(self.edges):
            m[i, list(e)] = 1
        return m

    def uniformity(self) -> set[int]:
        return {len(e) for e in self.edges}

    def degrees(self) -> np.ndarray:
        return self.incidence().sum(axis=0)

    def is_proper_two_coloring(self, colors: Sequence[int]) -> bool:
        """No hyperedge is monochromatic under the 0/1 labelling ``colors``."""
        x = np.asarray(colors, dtype=np.int64)
        inc = self.incidence().astype(np.int64)
        ones = inc @ x
        sizes = inc.sum(axis=1)
        return bool(np.all((ones > 0) & (ones < sizes)))


def onh(g: Graph) -> Hypergraph:
    """One hyperedge ``N(v)`` per vertex, duplicates kept."""
    return Hypergraph(g.n, tuple(tuple(row) for row in g.adj))


def hypergraph_two_coloring(h: Hypergraph, budget: int = 10**7) -> list[int] | None:
    """Plain backtracking for a 2-colouring of ``h`` with no monochromatic edge.

    Vertices are coloured in label order; an edge is checked once its largest
    vertex is coloured.
    """
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(h.n)]
    for e in h.edges:
        closing[max(e)].append(e)
    colors = [0] * h.n
    nodes = 0

    def ok(v: int) -> bool:
        return all(len({colors[x] for x in e}) == 2 for e in closing[v])

    def go(v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(nodes)
        if v == h.n:
            return True
        for c in ((0,) if v == 0 else (0, 1)):
            colors[v] = c
            if ok(v) and go(v + 1):
                return True
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 2 * h.n + 1000))
    try:
        return list(colors) if h.n == 0 or go(0) else None
    finally:
        sys.setrecursionlimit(limit)


# -- F-partition enumeration ---------------------------------------------------


def template_embeddings(g: Graph, kind: PieceKind | str) -> list[Piece]:
    """One role assignment per distinct (kind, edge set) copy of the template in ``g``."""
    kind = PieceKind(kind)
    t = template_of(kind)
    order = t.roles
    nb = {r: set(t.neighbors(r)) for r in order}
    out, seen = [], set()
    assign: dict[str, int] = {}

    def extend(i: int):
        if i == len(order):
            piece = Piece(kind, tuple(assign[r] for r in order))
            key = frozenset(frozenset(e) for e in piece.edges())
            if key not in seen:
                seen.add(key)
                out.append(piece)
            return
        r = order[i]
        placed = [assign[s] for s in order[:i] if s in nb[r]]
        cands = set(g.adj[placed[0]]) if placed else set(range(g.n))
        for x in placed[1:]:
            cands &= set(g.adj[x])
        used = set(assign.values())
        for x in sorted(cands - used):
            assign[r] = x
            extend(i + 1)
            del assign[r]

    extend(0)
    return out


def enumerate_f_partitions(g: Graph, cap: int = 100_000) -> list[Partition]:
    """All vertex-disjoint covers of ``g`` by template copies, up to ``cap``."""
    by_vertex: list[list[Piece]] = [[] for _ in range(g.n)]
    for kind in PieceKind:
        for piece in template_embeddings(g, kind):
            by_vertex[min(piece.vertices)].append(piece)
    covered = [False] * g.n
    chosen: list[Piece] = []
    out: list[Partition] = []

    def cover():
        if len(out) >= cap:
            return
        v = next((x for x in range(g.n) if not covered[x]), None)
        if v is None:
            out.append(Partition(list(chosen)))
            return
        # v is the least uncovered vertex, so it is the least vertex of its piece
        for piece in by_vertex[v]:
            if any(covered[x] for x in piece.vertices):
                continue
            for x in piece.vertices:
                covered[x] = True
            chosen.append(piece)
            cover()
            chosen.pop()
            for x in piece.vertices:
                covered[x] = False

    cover()
    return out


# -- generic L search ------------------------------------------------------------


def l_embeddings(g: Graph) -> Iterator[LWitness]:
    """Every copy of L in ``g`` (any degrees), by direct subgraph search."""
    for c in range(g.n):
        for mids in itertools.combinations(g.adj[c], 3):
            used0 = {c, *mids}
            options = [[x for x in g.adj[u] if x not in used0] for u in mids]

            def pick(i: int, used: set[int], acc: list):
                if i == 3:
                    yield LWitness(c, tuple(mids), tuple(acc))
                    return
                for pair in itertools.combinations(options[i], 2):
                    if used.isdisjoint(pair):
                        yield from pick(i + 1, used | set(pair), acc + [pair])

            yield from pick(0, set(), [])


def find_l_embedding(g: Graph) -> LWitness | None:
    return next(l_embeddings(g), None)
