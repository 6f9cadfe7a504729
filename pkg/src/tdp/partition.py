"""Incremental partition of an L-free cubic graph into C3/C4/K23/X/Y/Z pieces.

The builder keeps a partition of a covered vertex set ``H`` and absorbs the
least uncovered vertex ``v`` each step. Every covered vertex has at least two
neighbours inside its own piece, so it has at most one neighbour outside
``H``; that single fact forces the handful of gluing configurations handled
by the replacement table below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError, validate_cubic
from .motif import (
    PieceKind,
    automorphisms,
    c4s_through,
    check_embedding,
    find_l_witness,
    template_of,
    triangle_through,
)

GLUE_C3 = "glue-C3"  # new v adjacent to an adjacent degree-2 pair
GLUE_C4 = "glue-C4"  # new x-y edge, x adjacent to p, y adjacent to q, p-q adjacent degree-2 pair
APEX = "apex"  # new v adjacent to two degree-2 roles at distance two

NEW_SYMBOLS = {GLUE_C3: ("v",), GLUE_C4: ("x", "y"), APEX: ("v",)}

K = PieceKind

# (branch, kind) -> [(canonical role pair, [(new kind, role symbols), ...])]
# Symbols are roles of the old piece or the new vertices of NEW_SYMBOLS.
REPLACEMENTS: dict[tuple[str, PieceKind], list[tuple[tuple[str, str], list[tuple[PieceKind, tuple[str, ...]]]]]] = {
    (GLUE_C3, K.C3): [(("t0", "t1"), [(K.C4, ("v", "t0", "t2", "t1"))])],
    (GLUE_C3, K.C4): [(("c0", "c1"), [(K.X, ("c2", "c3", "c0", "c1", "v"))])],
    (GLUE_C3, K.X): [(("a", "b"), [(K.C3, ("v", "a", "b")), (K.C3, ("c", "d", "w"))])],
    (GLUE_C3, K.Y): [(("a", "d"), [(K.C3, ("v", "a", "d")), (K.C4, ("b", "c", "f", "e"))])],
    (GLUE_C4, K.C3): [(("t0", "t1"), [(K.X, ("y", "x", "t0", "t1", "t2"))])],
    (GLUE_C4, K.C4): [(("c0", "c1"), [(K.Y, ("x", "c0", "c3", "y", "c1", "c2"))])],
    (GLUE_C4, K.X): [(("a", "b"), [(K.C3, ("c", "d", "w")), (K.C4, ("x", "a", "b", "y"))])],
    (GLUE_C4, K.Y): [(("a", "d"), [(K.C4, ("x", "a", "d", "y")), (K.C4, ("b", "c", "f", "e"))])],
    (APEX, K.C4): [(("c0", "c2"), [(K.K23, ("c0", "c2", "c1", "c3", "v"))])],
    (APEX, K.K23): [(("q0", "q1"), [(K.Y, ("v", "q0", "p0", "q1", "p1", "q2"))])],
    (APEX, K.X): [(("a", "w"), [(K.Y, ("v", "a", "b", "w", "d", "c"))])],
    (APEX, K.Y): [(("a", "c"), [(K.Z, ("a", "b", "c", "d", "e", "f", "v"))])],
    (APEX, K.Z): [
        (("d", "f"), [(K.C4, ("z", "a", "b", "c")), (K.C4, ("d", "e", "f", "v"))]),
        (("d", "z"), [(K.C4, ("v", "z", "a", "d")), (K.C4, ("b", "c", "f", "e"))]),
    ],
}


class PartitionInvariantError(RuntimeError):
    """The builder met a configuration the construction rules out.

    ``trace`` holds the step records up to and including the failing step.
    """

    def __init__(self, message: str, trace: list[dict]):
        super().__init__(message)
        self.trace = trace


class ReplacementLookupError(KeyError):
    pass


@dataclass(frozen=True)
class Piece:
    kind: PieceKind
    vertices: tuple[int, ...]

    def role_of(self, vertex: int) -> str:
        return template_of(self.kind).roles[self.vertices.index(vertex)]

    def vertex_of(self, role: str) -> int:
        return self.vertices[template_of(self.kind).index(role)]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[j]) for i, j in template_of(self.kind).edge_indices()]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, d: dict) -> "Piece":
        return cls(PieceKind(d["kind"]), tuple(int(x) for x in d["vertices"]))


@dataclass
class Partition:
    pieces: list[Piece]
    owner: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.owner:
            self.owner = {v: i for i, p in enumerate(self.pieces) for v in p.vertices}

    @property
    def covered(self) -> set[int]:
        return set(self.owner)

    def piece_of(self, v: int) -> Piece:
        return self.pieces[self.owner[v]]

    def canonical(self) -> frozenset:
        """Order- and automorphism-independent identity: each piece as
        ``(kind, edge set)``."""
        return frozenset(
            (p.kind, frozenset(frozenset(e) for e in p.edges())) for p in self.pieces
        )

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self.pieces]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Partition":
        return cls([Piece.from_json(d) for d in data])


# -- replacement table ---------------------------------------------------------


def replacement_table():
    return REPLACEMENTS


def _glued_edges(branch: str, pair: tuple[str, str]) -> list[tuple[str, str]]:
    p, q = pair
    if branch == GLUE_C4:
        return [("x", p), ("y", q), ("x", "y")]
    return [("v", p), ("v", q)]


def validate_replacement_table() -> list[str]:
    """Check every row on the glued template union; return failures (empty = pass).

    Also checks that every role pair the builder can present (adjacent
    degree-2 pairs for the glue branches, distance-two degree-2 pairs for the
    apex branch) is reachable from some canonical row by an automorphism.
    """
    failures = []
    for (branch, kind), rows in REPLACEMENTS.items():
        t = template_of(kind)
        for pair, result in rows:
            p, q = pair
            if branch == APEX:
                ok = frozenset(pair) in t.distance2_pairs
            else:
                ok = frozenset(pair) in t.adjacent_pairs
            if not ok:
                failures.append(f"{branch}/{kind.value}: {pair} is not a valid attachment pair")
                continue
            labels = list(t.roles) + list(NEW_SYMBOLS[branch])
            idx = {s: i for i, s in enumerate(labels)}
            edges = [(idx[a], idx[b]) for a, b in list(t.edges) + _glued_edges(branch, pair)]
            glued = Graph.from_edges(len(labels), edges)
            used: list[int] = []
            for new_kind, syms in result:
                vs = [idx[s] for s in syms]
                if not check_embedding(glued, new_kind, vs):
                    failures.append(f"{branch}/{kind.value}{pair}: {new_kind.value}{syms} not embedded")
                used += vs
            if sorted(used) != list(range(len(labels))):
                failures.append(f"{branch}/{kind.value}{pair}: result pieces do not partition the union")
    for branch in (GLUE_C3, GLUE_C4, APEX):
        for kind in PieceKind:
            t = template_of(kind)
            pairs = t.distance2_pairs if branch == APEX else t.adjacent_pairs
            for pair in pairs:
                a, b = sorted(pair, key=t.roles.index)
                for ordered in ((a, b), (b, a)):
                    try:
                        _lookup(branch, kind, ordered)
                    except ReplacementLookupError:
                        failures.append(f"{branch}/{kind.value}: no row covers {ordered}")
    return failures


def _lookup(branch: str, kind: PieceKind, roles: tuple[str, str]):
    """Row and automorphism carrying the row's canonical pair onto ``roles``."""
    rows = REPLACEMENTS.get((branch, kind))
    if rows is None:
        raise ReplacementLookupError(f"no {branch} replacement for {kind.value}")
    for pair, result in rows:
        for sigma in automorphisms(kind):
            if (sigma[pair[0]], sigma[pair[1]]) == roles:
                return result, sigma
            if branch != GLUE_C4 and (sigma[pair[1]], sigma[pair[0]]) == roles:
                return result, sigma
    raise ReplacementLookupError(f"{branch} on {kind.value} at roles {roles} is not a table case")


def apply_replacement(branch: str, piece: Piece, pair: tuple[int, int], new: dict[str, int]) -> list[Piece]:
    """Pieces replacing ``piece`` once the vertices in ``new`` are glued at ``pair``."""
    roles = (piece.role_of(pair[0]), piece.role_of(pair[1]))
    result, sigma = _lookup(branch, piece.kind, roles)
    out = []
    for kind, syms in result:
        out.append(Piece(kind, tuple(new[s] if s in new else piece.vertex_of(sigma[s]) for s in syms)))
    return out


_TABLE_FAILURES = validate_replacement_table()
if _TABLE_FAILURES:
    raise ImportError("replacement table failed validation: " + "; ".join(_TABLE_FAILURES))


# -- builder -------------------------------------------------------------------


class _Builder:
    def __init__(self, g: Graph, check_invariants: bool):
        self.g = g
        self.check = check_invariants
        self.owner = [-1] * g.n
        self.pieces: dict[int, Piece] = {}
        self.next_id = 0
        self.trace: list[dict] = []

    def fail(self, msg: str):
        raise PartitionInvariantError(msg, self.trace)

    def add(self, piece: Piece):
        pid = self.next_id
        self.next_id += 1
        self.pieces[pid] = piece
        for x in piece.vertices:
            self.owner[x] = pid

    def replace(self, pid: int, new_pieces: Sequence[Piece]):
        del self.pieces[pid]
        for p in new_pieces:
            self.add(p)

    def common_piece(self, vertices: Sequence[int]) -> int:
        ids = {self.owner[x] for x in vertices}
        if len(ids) != 1:
            self.fail(f"vertices {list(vertices)} lie in different pieces")
        return ids.pop()

    def glue(self, branch: str, pair: tuple[int, int], new: dict[str, int], case: str):
        pid = self.common_piece(pair)
        old = self.pieces[pid]
        try:
            repl = apply_replacement(branch, old, pair, new)
        except ReplacementLookupError as exc:
            self.fail(f"{case}: {exc}")
        self.trace[-1].update(old=old.to_json(), new=[p.to_json() for p in repl])
        self.replace(pid, repl)

    def step(self, v: int):
        g, inH = self.g, lambda x: self.owner[x] >= 0
        rec = {"step": len(self.trace), "v": v}
        self.trace.append(rec)
        tri = triangle_through(g, v)
        if tri is not None:
            _, w1, w2 = tri
            inside = inH(w1) + inH(w2)
            if inside == 0:
                rec["case"] = "triangle-new"
                self.add(Piece(K.C3, (v, w1, w2)))
            elif inside == 2:
                rec["case"] = "triangle-glue"
                self.glue(GLUE_C3, (w1, w2), {"v": v}, "triangle-glue")
            else:
                rec["case"] = "triangle-mixed"
                self.fail(f"triangle {tri}: exactly one of w1, w2 is covered")
            return
        cycles = c4s_through(g, v)
        if not cycles:
            self.fail(f"vertex {v} lies on no triangle and no 4-cycle")
        for cyc in cycles:
            _, u1, u2, u3 = cyc
            flags = (inH(u1), inH(u2), inH(u3))
            k = sum(flags)
            if k == 0:
                rec.update(case="c4-new", cycle=list(cyc))
                self.add(Piece(K.C4, cyc))
                return
            if k == 3:
                rec.update(case="c4-apex", cycle=list(cyc))
                self.common_piece((u1, u2, u3))
                self.glue(APEX, (u1, u3), {"v": v}, "c4-apex")
                return
            if k == 2 and not flags[0]:
                rec.update(case="c4-glue", cycle=list(cyc))
                self.glue(GLUE_C4, (u2, u3), {"x": u1, "y": v}, "c4-glue")
                return
            if k == 2 and not flags[2]:
                rec.update(case="c4-glue", cycle=list(cyc))
                self.glue(GLUE_C4, (u2, u1), {"x": u3, "y": v}, "c4-glue")
                return
        rec.update(case="c4-unreachable", cycles=[list(c) for c in cycles])
        self.fail(f"no 4-cycle through {v} has an admissible covered pattern")

    def verify_step(self):
        g, owner = self.g, self.owner
        for pid, p in self.pieces.items():
            if not check_embedding(g, p.kind, p.vertices):
                self.fail(f"piece {p.to_json()} is not embedded in the graph")
            if any(owner[x] != pid for x in p.vertices):
                self.fail(f"piece {p.to_json()} overlaps another piece")
        for x in range(g.n):
            if owner[x] >= 0:
                outside = sum(1 for y in g.adj[x] if owner[y] < 0)
                if outside > 1:
                    self.fail(f"covered vertex {x} has {outside} uncovered neighbours")

    def run(self) -> Partition:
        for v in range(self.g.n):
            if self.owner[v] >= 0:
                continue
            self.step(v)
            if self.owner[v] < 0:
                self.fail(f"step did not cover {v}")
            if self.check:
                self.verify_step()
        pieces = sorted(self.pieces.values(), key=lambda p: min(p.vertices))
        return Partition(pieces)


def f_partition(g: Graph, check_invariants: bool = True) -> Partition:
    """Partition the vertices of an L-free cubic graph into template pieces.

    Deterministic: the least uncovered vertex is absorbed each step and every
    cycle choice is lexicographic. Raises :class:`GraphError` on a non-cubic
    or L-containing input and :class:`PartitionInvariantError` if the
    construction ever reaches a configuration it should exclude.
    """
    validate_cubic(g)
    w = find_l_witness(g)
    if w is not None:
        raise GraphError(f"graph contains L centred at vertex {w.center}")
    return _Builder(g, check_invariants).run()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    error: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_partition(g: Graph, p: Partition) -> ValidationReport:
    seen: dict[int, int] = {}
    for i, piece in enumerate(p.pieces):
        t = template_of(piece.kind)
        if len(piece.vertices) != t.order:
            return ValidationReport(False, f"piece {i} has wrong arity for {piece.kind.value}")
        for x in piece.vertices:
            if not 0 <= x < g.n:
                return ValidationReport(False, f"piece {i} uses out-of-range vertex {x}")
            if x in seen:
                return ValidationReport(False, f"disjointness: vertex {x} in pieces {seen[x]} and {i}")
            seen[x] = i
        if not check_embedding(g, piece.kind, piece.vertices):
            return ValidationReport(False, f"embedding: piece {i} {piece.to_json()} is not a subgraph")
    missing = [x for x in range(g.n) if x not in seen]
    if missing:
        return ValidationReport(False, f"coverage: vertex {missing[0]} is in no piece")
    return ValidationReport(True)
