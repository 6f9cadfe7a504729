"""Two-coupon colourings: every vertex sees both colours among its neighbours.

C4, K23, X and Y pieces carry a fixed colouring that works inside the piece
alone. C3 and Z pieces cannot do that, so each is coloured relative to one
external neighbour of an attachment vertex (a degree-2 role): the attachment
takes the external colour and every other role is satisfied internally.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import Graph, VertexSet
from .motif import PieceKind, template_of
from .partition import Partition, Piece, validate_partition


class Color(str, enum.Enum):
    BLACK = "B"
    WHITE = "W"

    def flip(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


B, W = Color.BLACK, Color.WHITE

BASE_KINDS = (PieceKind.C4, PieceKind.K23, PieceKind.X, PieceKind.Y)
DEPENDENT_KINDS = (PieceKind.C3, PieceKind.Z)


class ColoringError(RuntimeError):
    pass


class IncompleteColoringError(ValueError):
    """Raised when a verifier is handed a colouring with unset vertices."""


def _all_assignments(k: int):
    # B < W, so product order is lexicographic order
    return itertools.product((B, W), repeat=k)


def _internal_ok(kind: PieceKind, roles_color: Mapping[str, Color], skip: Iterable[str] = ()) -> bool:
    t = template_of(kind)
    skip = set(skip)
    for r in t.roles:
        if r in skip:
            continue
        seen = {roles_color[x] for x in t.neighbors(r)}
        if len(seen) < 2:
            return False
    return True


def _search_base(kind: PieceKind) -> dict[str, Color]:
    t = template_of(kind)
    for combo in _all_assignments(t.order):
        if combo[0] is not B:
            continue
        assign = dict(zip(t.roles, combo))
        if _internal_ok(kind, assign):
            return assign
    raise ColoringError(f"{kind.value} has no internal 2-coupon colouring")


def _search_dependent(kind: PieceKind, attachment: str, external: Color) -> dict[str, Color]:
    t = template_of(kind)
    if attachment not in t.degree2:
        raise ValueError(f"{attachment!r} is not a degree-2 role of {kind.value}")
    for combo in _all_assignments(t.order):
        assign = dict(zip(t.roles, combo))
        if assign[attachment] is not external:
            continue
        if not _internal_ok(kind, assign, skip=[attachment]):
            continue
        seen = {assign[x] for x in t.neighbors(attachment)} | {external}
        if len(seen) == 2:
            return assign
    raise ColoringError(f"no dependent colouring for {kind.value} at {attachment} with {external.value}")


def _derive_tables():
    base = {k: _search_base(k) for k in BASE_KINDS}
    dep = {}
    for k in DEPENDENT_KINDS:
        for role in sorted(template_of(k).degree2):
            for c in (B, W):
                dep[(k, role, c)] = _search_dependent(k, role, c)
    return base, dep


# Derived once at import; a failed search aborts the import.
BASE_TABLE, DEPENDENT_TABLE = _derive_tables()


def base_coloring(kind: PieceKind | str) -> dict[str, Color]:
    """Fixed internal colouring of a C4/K23/X/Y template (least, role 0 black)."""
    kind = PieceKind(kind)
    if kind not in BASE_TABLE:
        raise ValueError(f"{kind.value} has no internal 2-coupon colouring")
    return dict(BASE_TABLE[kind])


def dependent_coloring(kind: PieceKind | str, attachment: str, external: Color | str) -> dict[str, Color]:
    kind, external = PieceKind(kind), Color(external)
    if kind not in DEPENDENT_KINDS:
        raise ValueError(f"{kind.value} is coloured by base_coloring")
    if attachment not in template_of(kind).degree2:
        raise ValueError(f"{attachment!r} is not a degree-2 role of {kind.value}")
    return dict(DEPENDENT_TABLE[(kind, attachment, external)])


def _attachment(g: Graph, piece: Piece) -> tuple[int, int]:
    """Least degree-2 vertex of ``piece`` with a neighbour outside it, and that neighbour."""
    inside = set(piece.vertices)
    t = template_of(piece.kind)
    candidates = sorted(piece.vertex_of(r) for r in t.degree2)
    for x in candidates:
        outside = [y for y in g.adj[x] if y not in inside]
        if outside:
            return x, outside[0]
    raise ColoringError(f"piece {piece.to_json()} has no external neighbour")


def _paint(colors: list, piece: Piece, assign: Mapping[str, Color]) -> None:
    for r, c in assign.items():
        colors[piece.vertex_of(r)] = c


def two_coupon_color(g: Graph, p: Partition) -> list[Color]:
    """Colour ``g`` black/white so that each colour class totally dominates.

    Base pieces first, then the C3/Z pieces in order of least vertex. When a
    dependent piece's external neighbour is itself in an uncoloured dependent
    piece, that neighbour is fixed black and both pieces are coloured together.
    """
    report = validate_partition(g, p)
    if not report:
        raise ColoringError(f"invalid partition: {report.error}")
    colors: list[Color | None] = [None] * g.n
    pending = []
    for piece in p.pieces:
        if piece.kind in BASE_TABLE:
            _paint(colors, piece, BASE_TABLE[piece.kind])
        else:
            pending.append(piece)
    pending.sort(key=lambda q: min(q.vertices))
    done: set[int] = set()
    for piece in pending:
        if id(piece) in done:
            continue
        x, v = _attachment(g, piece)
        if colors[v] is not None:
            _paint(colors, piece, dependent_coloring(piece.kind, piece.role_of(x), colors[v]))
        else:
            other = p.piece_of(v)
            if other.kind not in DEPENDENT_KINDS or id(other) in done:
                raise ColoringError(f"uncoloured neighbour {v} outside a pending dependent piece")
            _paint(colors, piece, dependent_coloring(piece.kind, piece.role_of(x), B))
            side = dependent_coloring(other.kind, other.role_of(v), colors[x])
            if side[other.role_of(v)] is not B:
                raise ColoringError("chain step did not reproduce a black attachment")
            _paint(colors, other, side)
            done.add(id(other))
        done.add(id(piece))
    if any(c is None for c in colors):
        raise ColoringError("some vertex was left uncoloured")
    return colors


def verify_total_dominating(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    """Every vertex of ``g`` has a neighbour in ``s``."""
    members = np.zeros(g.n, dtype=bool)
    members[list(s)] = True
    return all(members[list(row)].any() for row in g.adj)


def verify_coupon(g: Graph, coloring: Sequence[Color | str | None]) -> bool:
    """Both colour classes are total dominating sets."""
    if len(coloring) != g.n:
        raise ValueError(f"colouring has {len(coloring)} entries for n={g.n}")
    if any(c is None for c in coloring):
        raise IncompleteColoringError("colouring has unset vertices")
    cols = [Color(c) for c in coloring]
    black = [v for v, c in enumerate(cols) if c is B]
    white = [v for v, c in enumerate(cols) if c is W]
    return verify_total_dominating(g, black) and verify_total_dominating(g, white)


def flip(coloring: Sequence[Color]) -> list[Color]:
    return [c.flip() for c in coloring]


def to_letters(coloring: Sequence[Color]) -> list[str]:
    return [c.value for c in coloring]
