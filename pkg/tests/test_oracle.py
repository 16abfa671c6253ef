import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from pauli_dla.classifier import SO_N, Summand, classify
from pauli_dla.gf2 import QuadraticForm
from pauli_dla.graphs import Graph, frustration_graph, iso_small, recognize_root
from pauli_dla.instances import qaoa_cycle, qaoa_path, random_generators
from pauli_dla.oracle import (
    ClosureCapExceeded,
    cartan_split,
    catalog_forbidden,
    catalog_realizations,
    closure,
    commutator_graph,
    enumerate_T,
    model_to_pauli,
    verify_classification,
)
from pauli_dla.pauli import generator_vectors, parse_many

F1 = QuadraticForm.pauli(1)


def vectors(ps):
    return generator_vectors(ps)[0]


def vec(token):
    return vectors(parse_many([token]))[0]


class TestClosure:
    def test_elliptic_line(self):
        pts = closure([vec("iX"), vec("iZ")], F1)
        assert sorted(pts.points) == sorted([vec("iX"), vec("iZ"), vec("iY")])

    def test_qaoa_path(self):
        assert len(closure(vectors(qaoa_path(3)), QuadraticForm.pauli(3))) == 15

    def test_sp4(self):
        sextuple = parse_many(["iXII", "iZZI", "iIXI", "iIZZ", "iIIX", "iIZI"])
        assert len(closure(vectors(sextuple), QuadraticForm.pauli(3))) == 2**5 + 2**2

    def test_cap(self):
        with pytest.raises(ClosureCapExceeded):
            closure(vectors(qaoa_path(3)), QuadraticForm.pauli(3), cap=10)

    def test_invalid_point(self):
        with pytest.raises(ValueError):
            closure([0b100], F1)
        with pytest.raises(ValueError):
            closure([0b001], F1)

    def test_wide_space_matches(self):
        # n = 40 takes the pure Python path
        ps = qaoa_path(4)
        wide = [p.__class__(40, p.a, p.b, p.c) for p in ps]
        assert len(closure(vectors(wide), QuadraticForm.pauli(40))) == 28

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32))
    def test_idempotent_and_order_free(self, seed):
        rnd = random.Random(seed)
        n = rnd.randint(1, 4)
        vecs = vectors(random_generators(n, rnd.randint(1, 6), rnd))
        form = QuadraticForm.pauli(n)
        pts = closure(vecs, form)
        assert closure(list(pts.points), form).as_set() == pts.as_set()
        shuffled = list(vecs)
        rnd.shuffle(shuffled)
        assert closure(shuffled, form).as_set() == pts.as_set()
        for u in pts.points:
            for v in pts.points:
                if form.f(u, v):
                    assert u ^ v in pts


class TestVerify:
    def test_cycle_passes(self):
        ps = qaoa_cycle(3)
        rep = verify_classification(vectors(ps), classify(ps), QuadraticForm.pauli(3))
        assert rep.passed and rep.closure_size == 30

    def test_corrupted_fails(self):
        ps = qaoa_cycle(3)
        c = classify(ps)
        c.components[0].summand = Summand(SO_N, 6)
        bad = replace(c, total_dim=15)
        rep = verify_classification(vectors(ps), bad, QuadraticForm.pauli(3))
        assert not rep.passed and rep.status == "mismatch"
        assert "15 != closure 30" in rep.details[0]

    def test_single(self):
        ps = parse_many(["iX"])
        rep = verify_classification(vectors(ps), classify(ps), F1)
        assert rep.passed and rep.closure_size == 1

    def test_unverified(self):
        ps = qaoa_path(3)
        rep = verify_classification(vectors(ps), classify(ps), QuadraticForm.pauli(3), cap=5)
        assert rep.status == "unverified"


class TestEnumerateT:
    def _tree(self, n_path):
        # QAOA path generators form a path tree of the root on 2n vertices
        return vectors(qaoa_path(n_path))

    def test_sizes(self):
        assert len(enumerate_T(vectors(parse_many(["iX", "iZ"])), 3, F1)) == 3
        assert len(enumerate_T(self._tree(3), 6, QuadraticForm.pauli(3))) == 15

    def test_star(self):
        # three pairwise anticommuting strings: the line graph of a star K_{1,3}
        form = QuadraticForm.pauli(2)
        star = vectors(parse_many(["iXI", "iZI", "iYX"]))
        assert len(enumerate_T(star, 4, form)) == 6
        assert enumerate_T(star, 4, form).as_set() == closure(star, form).as_set()

    def test_not_a_tree(self):
        # connected but dependent: a triangle of points spans only 3, not C(4, 2)
        with pytest.raises(AssertionError):
            enumerate_T(vectors(parse_many(["iX", "iY", "iZ"])), 4, F1)
        with pytest.raises(ValueError):
            enumerate_T(vectors(parse_many(["iXI", "iIX"])), 3, QuadraticForm.pauli(2))


class TestCommutatorGraph:
    def test_single_qubit(self):
        comps = commutator_graph([vec("iX")], 1)
        assert comps == sorted([[vec("iX")], sorted([vec("iY"), vec("iZ")])])

    def test_connected_component_is_closure(self):
        ps = qaoa_path(3)
        vecs = vectors(ps)
        comps = commutator_graph(vecs, 3)
        home = [c for c in comps if vecs[0] in c]
        assert set(home[0]) == closure(vecs, QuadraticForm.pauli(3)).as_set()
        assert all(any(v in c for v in vecs) == (c is home[0]) for c in comps)

    def test_commuting_outsider_is_singleton(self):
        vecs = vectors(qaoa_path(3))
        outsider = vec("iXXX")
        assert all(QuadraticForm.pauli(3).f(outsider, v) == 0 for v in vecs)
        assert [outsider] in commutator_graph(vecs, 3)

    def test_too_large(self):
        with pytest.raises(ValueError):
            commutator_graph([], 7)


class TestCartan:
    def test_single_qubit(self):
        pts = closure([vec("iX"), vec("iZ")], F1).points
        split = cartan_split(pts, 0b001, F1)
        assert split.l_part == [vec("iZ")]
        assert sorted(split.m_part) == sorted([vec("iX"), vec("iY")])
        assert split.valid

    def test_trivial_functional(self):
        pts = closure([vec("iX"), vec("iZ")], F1).points
        split = cartan_split(pts, 0, F1)
        assert split.valid and split.m_part == []

    def test_empty_l_warns(self):
        with pytest.warns(UserWarning):
            cartan_split([vec("iX")], 0b001, F1)

    def test_detects_bad_set(self):
        # {iX, iZ} is not closed; the bracket iY is missing
        split = cartan_split([vec("iX"), vec("iZ")], 0b001, F1)
        assert not split.valid

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2**32))
    def test_random_hyperplanes(self, seed):
        rnd = random.Random(seed)
        form = QuadraticForm.pauli(3)
        pts = closure(vectors(qaoa_path(3)), form).points
        assert cartan_split(pts, rnd.getrandbits(7) | 1, form).valid


class TestCatalog:
    def test_count_and_shape(self):
        graphs = catalog_forbidden()
        assert len(graphs) == 32
        assert all(g.m == 6 and g.is_connected() for g in graphs)
        for i, g in enumerate(graphs):
            assert not any(iso_small(g, h) for h in graphs[i + 1 :])

    def test_e6_present(self):
        e6 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
        assert any(iso_small(e6, g) for g in catalog_forbidden())

    def test_none_is_a_line_graph(self):
        assert all(recognize_root(g) is None for g in catalog_forbidden())

    def test_realizations(self):
        form = QuadraticForm.pauli(3)
        for fg in catalog_realizations():
            vecs = [model_to_pauli(v) for v in fg.basis]
            assert frustration_graph(vecs, form).rows == fg.graph.rows
            assert len(closure(vecs, form)) == 36

    def test_model_map_is_isometry(self):
        model = QuadraticForm.elliptic_sum(3)
        form = QuadraticForm.pauli(3)
        for u in range(64):
            assert model.q(u) == form.q(model_to_pauli(u))
