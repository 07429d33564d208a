import pytest

from biserial_hh import Named, virasoro_subquotient
from biserial_hh.field import QQ
from biserial_hh.lie import (commutant_certificate, hh0_dependency, large_summand_structure,
                             trivial_summands, weight_lattice_check)

from conftest import engine


def nm(kind, n, *idx):
    return Named(kind, n, tuple(idx))


def E(j, s):
    return nm("E", 1, j, s)


def one():
    return QQ(1)


def test_structure_constants():
    L = engine(4, 3).L
    P = L.hh1_presentation()
    assert P.bracket({"E0": one()}, {E(1, 2): one()}) == {E(1, 2): 2}
    assert P.bracket({E(0, 1): one()}, {E(1, 1): one()}) == {}
    assert P.bracket({E(2, 1): one()}, {E(2, 2): one()}) == {}  # truncated past N - 1
    for lab in P.labels:
        assert P.bracket({"C": one()}, {lab: one()}) == {}
    P = engine(3, 4).L.hh1_presentation()
    assert P.bracket({E(0, 1): one()}, {E(0, 2): one()}) == {E(0, 3): 1}


def test_presentation_axioms():
    for m, N in [(3, 3), (4, 2)]:
        P = engine(m, N).L.hh1_presentation()
        assert P.check_antisymmetry() is None
        assert P.check_jacobi() is None


def test_center():
    c = engine(4, 3).L.lie_center()
    assert len(c) == 1 and set(c[0]) == {"C"}
    assert len(engine(3, 1).L.lie_center()) == 2


def test_derived_series():
    assert engine(3, 1).L.derived_series() == [2, 0]
    s = engine(3, 3).L.derived_series()
    assert s[-1] == 0 and len(s) - 1 <= 2


def test_virasoro():
    a1 = virasoro_subquotient(1, QQ)
    assert a1.bracket({("L", 0): one()}, {("L", 1): one()}) == {("L", 1): 1}
    a2 = virasoro_subquotient(2, QQ)
    assert a2.bracket({("L", 1): one()}, {("L", 2): one()}) == {}
    assert a2.bracket({("L", 1): one()}, {("L", 1): one()}) == {}
    assert a2.check_jacobi() is None


def test_embedding():
    rep = engine(3, 3).L.verify_embedding()
    assert rep["homomorphism"] and rep["injective"] and rep["copies_commute"]
    rep = engine(4, 1).L.verify_embedding()
    assert rep["ok"]
    assert engine(4, 1).L.labels() == ["C", "E0"]


def test_virasoro_copies():
    L = engine(4, 3).L
    for j in range(4):
        copy = L.virasoro_copy(j)
        ref = virasoro_subquotient(2, QQ)
        for a in ref.labels:
            for b in ref.labels:
                assert copy.bracket({a: one()}, {b: one()}) == ref.bracket({a: one()}, {b: one()})


def test_module_action_examples():
    L = engine(4, 1).L
    M = L.module_action(4)
    assert M.act["E0"][nm("chi", 4, 0)] == {nm("chi", 4, 0): -2}
    for m, N in [(4, 2), (5, 2)]:
        M = engine(m, N).L.module_action(2 * m)
        for el in M.basis:
            if el.kind == "chi" and el.idx[0]:
                assert M.act["C"][el] == {el: QQ(-el.idx[0] * m) / 2}
    M = engine(4, 2).L.module_action(2)
    for lab in M.labels:
        assert M.act[lab][nm("pi", 2, 0)] == {}


@pytest.mark.parametrize("m,N", [(3, 2), (4, 2), (5, 3)])
def test_representation_property(m, N):
    L = engine(m, N).L
    for n in range(10):
        assert L.module_action(n).check_representation() is None


def test_decompose_m4_n4():
    rep = engine(4, 1).L.decompose(4)
    names = [S.name for S in rep["summands"]]
    assert len(names) == 6
    assert sum(n.startswith("<chi") for n in names) == 3
    assert sum(n.startswith("<pi") for n in names) == 3
    assert rep["ok"]


def test_decompose_hh0():
    rep = engine(4, 2).L.decompose(0)
    assert [S.name for S in rep["summands"]] == ["<1>", "<eps_0>", "<f_i^s, eps_i+eps_(i+1)>"]
    assert rep["ok"] and not rep["refined"]
    rep = engine(3, 2).L.decompose(0)
    assert len(rep["summands"]) == 1 + 3 and rep["ok"]
    assert all(len(S.vectors) == 2 for S in rep["summands"][1:])


def test_hh0_n1_m_even_refined():
    rep = engine(4, 1).L.decompose(0)
    assert rep["refined"] and rep["ok"]
    assert len(rep["summands"]) == 2 + 3


def test_hh0_dependency():
    for m, N in [(4, 1), (6, 3)]:
        assert hh0_dependency(engine(m, N).alg)


@pytest.mark.parametrize("m,N", [(3, 2), (4, 3), (5, 1), (6, 2)])
def test_decompositions(m, N):
    L = engine(m, N).L
    for n in range(0, 2 * m + 3):
        rep = L.decompose(n)
        assert rep["ok"], n
        assert sum(len(S.vectors) for S in rep["summands"]) == rep["dimension"]
        for S in rep["summands"]:
            assert S.certificate["local"]
            if len(S.vectors) == 1:
                assert S.weights[0] is not None


def test_trivial_summands():
    L = engine(4, 2).L
    triv = [S.name for S in trivial_summands(L.decompose(2))]
    assert triv == ["<pi_{2,0}>"]
    for n in range(3, 11):
        assert trivial_summands(L.decompose(n)) == []


def test_large_summand():
    L = engine(4, 3).L
    for n in (1, 2, 5, 6):
        info = large_summand_structure(L, n)
        assert info["cyclic"] and info["lower_invariant"] and info["complement_free"]
        assert info["raises_weight"]
    # for m odd the top element only exists in some degrees
    assert large_summand_structure(engine(5, 2).L, 2) is None


def test_certificate_detects_split():
    # two copies of the same one-dimensional module: End is 2x2 matrices
    z = QQ(0)
    mats = {"X": [{0: QQ(1)}, {1: QQ(1)}]}
    cert = commutant_certificate(mats, 2, QQ)
    assert cert["endomorphism_dim"] == 4 and not cert["local"]
    # a Jordan block is indecomposable
    mats = {"X": [{}, {0: QQ(1)}]}
    cert = commutant_certificate(mats, 2, QQ)
    assert cert["local"] and cert["endomorphism_dim"] == 2
    assert z == 0


def test_weight_lattice_fallback():
    mats = {"X": [{}, {}]}
    assert weight_lattice_check(mats, [0, 1])["splitting_found"]
    mats = {"X": [{}, {0: 1}]}
    assert not weight_lattice_check(mats, [0, 1])["splitting_found"]


def test_positive_characteristic():
    e = engine(4, 3, 5)
    rep = e.L.decompose(2)
    for S in rep["summands"]:
        assert S.certificate["method"] == "not certified"
        assert not S.certificate["weight_lattice"]["splitting_found"]
    assert rep["ok"]
