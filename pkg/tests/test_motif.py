import itertools

import numpy as np
import pytest

from tdp.generators import complete, cycle, heawood, k33, moebius_ladder, petersen, prism, random_cubic, truncate
from tdp.motif import (
    LWitness, PieceKind, automorphisms, c4_through, c4s_through, check_embedding,
    check_templates, find_l_witness, template_of, triangle_through,
)
from tdp.oracle import find_l_embedding

from conftest import relabel


def test_six_kinds():
    assert [k.value for k in PieceKind] == ["C3", "C4", "K23", "X", "Y", "Z"]


def test_templates_self_consistent():
    check_templates()


@pytest.mark.parametrize(
    "kind,order,size,deg2",
    [
        ("C3", 3, 3, {"t0", "t1", "t2"}),
        ("C4", 4, 4, {"c0", "c1", "c2", "c3"}),
        ("K23", 5, 6, {"q0", "q1", "q2"}),
        ("X", 5, 6, {"a", "b", "w"}),
        ("Y", 6, 7, {"a", "c", "d", "f"}),
        ("Z", 7, 9, {"z", "d", "f"}),
    ],
)
def test_template_shapes(kind, order, size, deg2):
    t = template_of(kind)
    assert t.order == order and len(t.edges) == size and t.degree2 == deg2


def test_automorphism_group_orders():
    sizes = {k.value: len(automorphisms(k)) for k in PieceKind}
    assert sizes == {"C3": 6, "C4": 8, "K23": 12, "X": 2, "Y": 4, "Z": 6}


class TestTriangle:
    def test_k4(self):
        assert triangle_through(complete(4), 0) == (0, 1, 2)

    def test_heawood_none(self):
        g = heawood()
        assert all(triangle_through(g, v) is None for v in range(g.n))

    def test_prism3(self):
        assert triangle_through(prism(3), 0) == (0, 1, 2)
        assert triangle_through(prism(3), 4) == (4, 3, 5)


class TestC4:
    def test_k33(self):
        v, u1, u2, u3 = c4_through(k33(), 0)
        assert v == 0 and {u1, u3} <= {3, 4, 5} and u2 in {1, 2}
        assert (v, u1, u2, u3) == (0, 3, 1, 4)

    def test_heawood_none(self):
        g = heawood()
        assert all(c4_through(g, v) is None for v in range(g.n))

    def test_cycle4(self):
        assert c4_through(cycle(4), 0) == (0, 1, 2, 3)

    def test_shape_of_all_cycles(self):
        g = moebius_ladder(6)
        for v in range(g.n):
            for cyc in c4s_through(g, v):
                _, u1, u2, u3 = cyc
                assert len(set(cyc)) == 4 and u1 < u3
                assert g.has_edge(v, u1) and g.has_edge(u1, u2) and g.has_edge(u2, u3) and g.has_edge(u3, v)


class TestLWitness:
    def test_heawood(self):
        w = find_l_witness(heawood())
        assert w is not None and w.center == 0
        assert w.is_valid_in(heawood())
        assert len(w.edges()) == 9

    def test_truncated_k4_free(self):
        assert find_l_witness(truncate(complete(4))) is None

    @pytest.mark.parametrize("k", [3, 4, 5, 9])
    def test_prisms_free(self, k):
        assert find_l_witness(prism(k)) is None

    def test_petersen(self):
        assert find_l_witness(petersen()) is not None

    def test_json_round_trip(self):
        w = find_l_witness(heawood())
        assert LWitness.from_json(w.to_json()) == w

    def test_forbidden_lemma_on_l_free(self, random_l_free):
        for g in random_l_free:
            for v in range(g.n):
                assert triangle_through(g, v) or c4_through(g, v)

    def test_criterion_matches_embedding_search(self):
        # independent explicit 10-vertex search over a corpus with both outcomes
        graphs = [heawood(), petersen(), complete(4), k33(), prism(5), truncate(k33())]
        graphs += [random_cubic(n, s) for n in range(4, 21, 2) for s in range(25)]
        outcomes = set()
        for g in graphs:
            fast = find_l_witness(g)
            slow = find_l_embedding(g)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert fast.is_valid_in(g)
            outcomes.add(fast is None)
        assert outcomes == {True, False}

    def test_invalid_witness_detected(self):
        g = heawood()
        w = find_l_witness(g)
        broken = LWitness(w.center, w.neighbors, (w.leaves[0], w.leaves[0], w.leaves[2]))
        assert not broken.is_valid_in(g)


class TestCheckEmbedding:
    def test_c4_in_k4_with_chords(self):
        assert check_embedding(complete(4), PieceKind.C4, (0, 1, 2, 3))

    def test_k23_in_k33(self):
        g = k33()
        for ps in itertools.combinations(range(3), 2):
            assert check_embedding(g, "K23", (*ps, 3, 4, 5))
            assert check_embedding(g, "K23", (3, 5, 0, 1, 2))

    def test_no_triangle_in_c4(self):
        for trio in itertools.permutations(range(4), 3):
            assert not check_embedding(cycle(4), "C3", trio)

    def test_arity(self):
        with pytest.raises(ValueError):
            check_embedding(cycle(4), "C4", (0, 1, 2))

    def test_non_injective(self):
        assert not check_embedding(complete(4), "C3", (0, 1, 1))

    def test_relabel_invariance(self):
        rng = np.random.default_rng(0)
        g = prism(4)
        perm = rng.permutation(g.n)
        h = relabel(g, perm)
        assert check_embedding(h, "C4", tuple(int(perm[x]) for x in (0, 1, 5, 4)))
