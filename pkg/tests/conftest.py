import collections

import pytest

from tdp.generators import complete, k33, moebius_ladder, prism, random_cubic, truncate
from tdp.graph import Graph

ACCEPTANCE_RESULTS: dict[str, str] = {}


def record(criterion: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[criterion] = f"{'PASS' if passed else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[key])


def bfs_girth(g: Graph) -> float:
    """Shortest cycle length by BFS from every vertex (independent of tdp.motif)."""
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = collections.deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    side = {}
    for s in range(g.n):
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges()])


def small_l_free_cubic(max_n: int = 14, seeds: int = 200):
    """Random cubic graphs up to ``max_n`` vertices that pass the L test, deduplicated."""
    from tdp.graph import serialize_graph6
    from tdp.motif import find_l_witness

    seen, out = set(), []
    for n in range(4, max_n + 1, 2):
        for s in range(seeds):
            g = random_cubic(n, s)
            key = serialize_graph6(g)
            if key not in seen and find_l_witness(g) is None:
                seen.add(key)
                out.append(g)
    return out


@pytest.fixture(scope="session")
def named_l_free():
    out = {"k4": complete(4), "k33": k33(), "trunc_k4": truncate(complete(4))}
    for k in range(3, 8):
        out[f"prism{k}"] = prism(k)
        out[f"moebius{k}"] = moebius_ladder(k)
    return out


@pytest.fixture(scope="session")
def random_l_free():
    return small_l_free_cubic()
