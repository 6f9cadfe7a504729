"""Short cycles through a vertex, detection of the forbidden tree L, and the
six piece templates C3, C4, K23, X, Y, Z.

In a cubic graph a copy of L (a vertex, its three neighbours and six distinct
vertices at distance two) exists exactly when some vertex lies on neither a
triangle nor a 4-cycle, so detection is a constant amount of work per vertex.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph


class PieceKind(str, enum.Enum):
    C3 = "C3"
    C4 = "C4"
    K23 = "K23"
    X = "X"
    Y = "Y"
    Z = "Z"


@dataclass(frozen=True)
class PieceTemplate:
    kind: PieceKind
    roles: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    degree2: frozenset[str]
    adjacent_pairs: frozenset[frozenset[str]]
    # pair of degree-2 roles at distance two -> their common neighbours
    distance2_pairs: Mapping[frozenset[str], tuple[str, ...]]

    @property
    def order(self) -> int:
        return len(self.roles)

    def index(self, role: str) -> int:
        return self.roles.index(role)

    def neighbors(self, role: str) -> tuple[str, ...]:
        out = [b for a, b in self.edges if a == role] + [a for a, b in self.edges if b == role]
        return tuple(sorted(out, key=self.roles.index))

    def edge_indices(self) -> list[tuple[int, int]]:
        return [(self.roles.index(a), self.roles.index(b)) for a, b in self.edges]


def _pairs(*items: str) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(p) for p in items)


_TEMPLATES = {
    PieceKind.C3: PieceTemplate(
        PieceKind.C3,
        ("t0", "t1", "t2"),
        (("t0", "t1"), ("t1", "t2"), ("t0", "t2")),
        frozenset({"t0", "t1", "t2"}),
        _pairs(("t0", "t1"), ("t1", "t2"), ("t0", "t2")),
        {},
    ),
    PieceKind.C4: PieceTemplate(
        PieceKind.C4,
        ("c0", "c1", "c2", "c3"),
        (("c0", "c1"), ("c1", "c2"), ("c2", "c3"), ("c0", "c3")),
        frozenset({"c0", "c1", "c2", "c3"}),
        _pairs(("c0", "c1"), ("c1", "c2"), ("c2", "c3"), ("c0", "c3")),
        {frozenset({"c0", "c2"}): ("c1", "c3"), frozenset({"c1", "c3"}): ("c0", "c2")},
    ),
    PieceKind.K23: PieceTemplate(
        PieceKind.K23,
        ("p0", "p1", "q0", "q1", "q2"),
        tuple((p, q) for p in ("p0", "p1") for q in ("q0", "q1", "q2")),
        frozenset({"q0", "q1", "q2"}),
        frozenset(),
        {
            frozenset({"q0", "q1"}): ("p0", "p1"),
            frozenset({"q0", "q2"}): ("p0", "p1"),
            frozenset({"q1", "q2"}): ("p0", "p1"),
        },
    ),
    # house: square a-b-c-d with roof vertex w on c, d
    PieceKind.X: PieceTemplate(
        PieceKind.X,
        ("a", "b", "c", "d", "w"),
        (("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("c", "w"), ("d", "w")),
        frozenset({"a", "b", "w"}),
        _pairs(("a", "b")),
        {frozenset({"a", "w"}): ("d",), frozenset({"b", "w"}): ("c",)},
    ),
    # domino: rows a-b-c over d-e-f
    PieceKind.Y: PieceTemplate(
        PieceKind.Y,
        ("a", "b", "c", "d", "e", "f"),
        (("a", "b"), ("b", "c"), ("d", "e"), ("e", "f"), ("a", "d"), ("b", "e"), ("c", "f")),
        frozenset({"a", "c", "d", "f"}),
        _pairs(("a", "d"), ("c", "f")),
        {frozenset({"a", "c"}): ("b",), frozenset({"d", "f"}): ("e",)},
    ),
    # domino plus apex z on a, c
    PieceKind.Z: PieceTemplate(
        PieceKind.Z,
        ("a", "b", "c", "d", "e", "f", "z"),
        (
            ("a", "b"), ("b", "c"), ("d", "e"), ("e", "f"),
            ("a", "d"), ("b", "e"), ("c", "f"), ("a", "z"), ("c", "z"),
        ),
        frozenset({"d", "f", "z"}),
        frozenset(),
        {
            frozenset({"d", "z"}): ("a",),
            frozenset({"f", "z"}): ("c",),
            frozenset({"d", "f"}): ("e",),
        },
    ),
}


def template_of(kind: PieceKind | str) -> PieceTemplate:
    return _TEMPLATES[PieceKind(kind)]


def _derived_metadata(t: PieceTemplate):
    nb = {r: set(t.neighbors(r)) for r in t.roles}
    deg2 = frozenset(r for r in t.roles if len(nb[r]) == 2)
    adjacent = frozenset(
        frozenset((a, b)) for a, b in itertools.combinations(sorted(deg2), 2) if b in nb[a]
    )
    dist2 = {}
    for a, b in itertools.combinations(sorted(deg2), 2):
        common = nb[a] & nb[b]
        if b not in nb[a] and common:
            dist2[frozenset((a, b))] = tuple(sorted(common, key=t.roles.index))
    return deg2, adjacent, dist2


def check_templates() -> None:
    """Recompute each template's degree-2 and distance metadata from its edges."""
    for t in _TEMPLATES.values():
        deg2, adjacent, dist2 = _derived_metadata(t)
        if deg2 != t.degree2 or adjacent != t.adjacent_pairs or dist2 != dict(t.distance2_pairs):
            raise AssertionError(f"template {t.kind.value} metadata disagrees with its edges")
        if len(set(t.edges)) != len(t.edges) or any(a == b for a, b in t.edges):
            raise AssertionError(f"template {t.kind.value} is not simple")
        if min(len(t.neighbors(r)) for r in t.roles) < 2:
            raise AssertionError(f"template {t.kind.value} has a vertex of degree < 2")


def automorphisms(kind: PieceKind | str) -> tuple[dict[str, str], ...]:
    return _AUTOMORPHISMS[PieceKind(kind)]


def _compute_automorphisms(t: PieceTemplate) -> tuple[dict[str, str], ...]:
    edges = {frozenset(e) for e in t.edges}
    out = []
    for perm in itertools.permutations(t.roles):
        sigma = dict(zip(t.roles, perm))
        if all(frozenset((sigma[a], sigma[b])) in edges for a, b in t.edges):
            out.append(sigma)
    return tuple(out)


check_templates()
_AUTOMORPHISMS = {k: _compute_automorphisms(t) for k, t in _TEMPLATES.items()}


def check_embedding(g: Graph, kind: PieceKind | str, vertices: Sequence[int]) -> bool:
    """True iff ``vertices`` (one per template role, in role order) are distinct
    and every template edge is an edge of ``g``. Extra edges of ``g`` are allowed."""
    t = template_of(kind)
    if len(vertices) != t.order:
        raise ValueError(f"{t.kind.value} needs {t.order} vertices, got {len(vertices)}")
    if len(set(vertices)) != len(vertices):
        return False
    if any(not 0 <= v < g.n for v in vertices):
        return False
    return all(g.has_edge(vertices[i], vertices[j]) for i, j in t.edge_indices())


# -- local cycles ------------------------------------------------------------


def triangle_through(g: Graph, v: int) -> tuple[int, int, int] | None:
    """``(v, w1, w2)`` for the least adjacent pair ``w1 < w2`` of neighbours of ``v``."""
    nb = g.adj[v]
    for i, w1 in enumerate(nb):
        for w2 in nb[i + 1 :]:
            if g.has_edge(w1, w2):
                return v, w1, w2
    return None


def c4s_through(g: Graph, v: int) -> list[tuple[int, int, int, int]]:
    """All 4-cycles through ``v`` as paths ``(v, u1, u2, u3)`` with ``u1 < u3``, sorted."""
    out = []
    nb = g.adj[v]
    for u1 in nb:
        for u2 in g.adj[u1]:
            if u2 == v:
                continue
            for u3 in g.adj[u2]:
                if u3 != u1 and u3 > u1 and u3 in nb:
                    out.append((v, u1, u2, u3))
    out.sort()
    return out


def c4_through(g: Graph, v: int) -> tuple[int, int, int, int] | None:
    cycles = c4s_through(g, v)
    return cycles[0] if cycles else None


@dataclass(frozen=True)
class LWitness:
    center: int
    neighbors: tuple[int, int, int]
    leaves: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def vertices(self) -> list[int]:
        return [self.center, *self.neighbors, *(x for pair in self.leaves for x in pair)]

    def edges(self) -> list[tuple[int, int]]:
        out = [(self.center, u) for u in self.neighbors]
        for u, pair in zip(self.neighbors, self.leaves):
            out += [(u, x) for x in pair]
        return out

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices()
        return (
            len(set(vs)) == 10
            and all(0 <= x < g.n for x in vs)
            and all(g.has_edge(a, b) for a, b in self.edges())
        )

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "neighbors": list(self.neighbors),
            "leaves": [list(p) for p in self.leaves],
        }

    @classmethod
    def from_json(cls, d: dict) -> "LWitness":
        return cls(d["center"], tuple(d["neighbors"]), tuple(tuple(p) for p in d["leaves"]))


def find_l_witness(g: Graph) -> LWitness | None:
    """Embedding of L rooted at the least vertex on no triangle and no 4-cycle,
    or ``None`` when the cubic graph ``g`` is L-free."""
    for v in range(g.n):
        if triangle_through(g, v) is None and c4_through(g, v) is None:
            nbrs = g.adj[v]
            leaves = tuple(tuple(x for x in g.adj[u] if x != v) for u in nbrs)
            return LWitness(v, tuple(nbrs), leaves)
    return None
