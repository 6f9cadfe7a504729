"""Named graph families and random cubic graphs used as the test corpus."""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError, validate_cubic

MAX_PAIRING_RETRIES = 1000


def lcf(n: int, shifts: list[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation ``shifts^repeats`` on ``n`` vertices."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    pattern = shifts * repeats
    if len(pattern) != n:
        raise GraphError("LCF pattern length must equal n")
    for i, s in enumerate(pattern):
        j = (i + s) % n
        edges.add((i, j))
    canon = {(min(u, v), max(u, v)) for u, v in edges}
    return Graph.from_edges(n, sorted(canon))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k33() -> Graph:
    return Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def prism(k: int) -> Graph:
    """Two k-cycles ``0..k-1`` and ``k..2k-1`` joined by the matching ``i ~ i+k``."""
    if k < 3:
        raise GraphError("prism needs k >= 3")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, i + k))
    return Graph.from_edges(2 * k, edges)


def moebius_ladder(k: int) -> Graph:
    """2k-cycle plus the k diameters ``i ~ i+k``; ``moebius_ladder(3)`` is K3,3."""
    if k < 3:
        raise GraphError("moebius ladder needs k >= 3")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)]
    return Graph.from_edges(n, edges)


def truncate(g: Graph) -> Graph:
    """Replace every vertex by a triangle.

    Vertex ``3v + i`` is the corner of ``v``'s triangle facing its ``i``-th
    neighbour in sorted order.
    """
    validate_cubic(g)
    edges = []
    for v in range(g.n):
        a, b, c = 3 * v, 3 * v + 1, 3 * v + 2
        edges += [(a, b), (b, c), (a, c)]
    for u, v in g.edges():
        cu = 3 * u + g.adj[u].index(v)
        cv = 3 * v + g.adj[v].index(u)
        edges.append((cu, cv))
    return Graph.from_edges(3 * g.n, edges)


def random_cubic(n: int, seed: int | None = None, max_retries: int = MAX_PAIRING_RETRIES) -> Graph:
    """Random cubic simple graph by the pairing model with rejection.

    Each attempt shuffles the ``3n`` half-edges and pairs them off; attempts
    producing a loop or a repeated edge are discarded.
    """
    if n < 4 or n % 2:
        raise GraphError(f"random cubic graph needs even n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), 3)
    for _ in range(max_retries):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        keys = lo * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        return Graph.from_edges(n, sorted(zip(lo.tolist(), hi.tolist())))
    raise GraphError(f"pairing model failed {max_retries} times for n={n}")


_FIXED = {"k4": lambda: complete(4), "k33": k33, "petersen": petersen, "heawood": heawood}
_PARAM = {"prism": prism, "moebius_ladder": moebius_ladder, "cycle": cycle}


def gen_named(name: str, param: int | None = None) -> Graph:
    """Build a named graph: ``k4``, ``k33``, ``petersen``, ``heawood`` or
    ``prism``/``moebius_ladder``/``cycle`` with an integer parameter."""
    key = name.lower().replace("-", "_")
    if key in _FIXED:
        if param is not None:
            raise GraphError(f"{name} takes no parameter")
        return _FIXED[key]()
    if key in _PARAM:
        if param is None:
            raise GraphError(f"{name} needs an integer parameter")
        return _PARAM[key](param)
    raise GraphError(f"unknown graph name {name!r}")


NAMED_GRAPHS = tuple(_FIXED) + tuple(_PARAM)
