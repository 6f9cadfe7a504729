"""Simple undirected graphs on dense integer labels, plus text formats.

Vertices are always ``0..n-1``. A :class:`Graph` is immutable once built;
every constructor goes through :meth:`Graph.from_edges`, which rejects loops,
duplicate edges and out-of-range labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Iterator

import numpy as np

GRAPH6_HEADER = ">>graph6<<"

VertexSet = AbstractSet[int]


class GraphError(ValueError):
    """Raised for malformed graph input or violated graph invariants."""


class NotCubicError(GraphError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        total = 0
        for v, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in row:
                if not 0 <= u < self.n:
                    raise GraphError(f"label {u} out of range for n={self.n}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
            total += len(row)
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("negative order")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a label >= n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def __len__(self) -> int:
        return self.n


def validate_cubic(g: Graph) -> None:
    """Raise :class:`NotCubicError` naming the first vertex whose degree is not 3."""
    for v in range(g.n):
        if len(g.adj[v]) != 3:
            raise NotCubicError(v, len(g.adj[v]))
    if g.n == 0:
        raise GraphError("empty graph is not cubic")


def is_cubic(g: Graph) -> bool:
    try:
        validate_cubic(g)
    except GraphError:
        return False
    return True


# -- edge list ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` line per edge.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphError(f"expected header 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise GraphError(f"non-integer token: {exc}") from None
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    out = [f"n {g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- graph6 ------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def serialize_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>"):
        if not s.startswith(GRAPH6_HEADER):
            raise GraphError("malformed graph6 header")
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"character {ch!r} outside the graph6 range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise GraphError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) != need:
        raise GraphError(f"graph6 payload has {len(payload)} chars, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graphs(text: str, fmt: str) -> list[Graph]:
    """Parse a whole input document; graph6 input may hold one graph per line."""
    if fmt == "graph6":
        return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
    if fmt == "edges":
        return [parse_edge_list(text)]
    raise GraphError(f"unknown format {fmt!r}")
