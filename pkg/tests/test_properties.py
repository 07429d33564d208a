"""Randomised checks that do not depend on any tabulated values."""

from hypothesis import given, settings, strategies as st

from biserial_hh import HClass
from biserial_hh.cohomology import unit

from conftest import engine

configs = st.sampled_from([(3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (6, 2)])
small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=40, deadline=None)
@given(configs, st.data())
def test_multiplication_associative(cfg, data):
    alg = engine(*cfg).alg
    basis = alg.basis
    idx = st.integers(min_value=0, max_value=len(basis) - 1)

    def elem():
        out = alg.zero()
        for _ in range(3):
            out = out + alg.from_path(basis[data.draw(idx)], data.draw(small))
        return out

    x, y, z = elem(), elem(), elem()
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=30, deadline=None)
@given(configs, st.integers(min_value=1, max_value=8), st.data())
def test_reduce_is_linear_and_kills_coboundaries(cfg, n, data):
    H = engine(*cfg).H
    names = H.index_set(n)
    coeffs = [data.draw(small) for _ in names]
    f = {}
    want = HClass(n)
    for el, c in zip(names, coeffs):
        for k, v in H.named_cocycle(el).items():
            f[k] = f.get(k, 0) + c * v
        want = want + unit(el) * c
    basis = H.cochain_basis(n - 1)
    if basis:
        b = basis[data.draw(st.integers(min_value=0, max_value=len(basis) - 1))]
        t = data.draw(small)
        for k, v in H.coboundary_of_basis(n, b).items():
            f[k] = f.get(k, 0) + t * v
    f = {k: v for k, v in f.items() if v}
    assert H.reduce_to_basis(f, n) == want


@settings(max_examples=25, deadline=None)
@given(configs, st.integers(min_value=0, max_value=7), st.data())
def test_lifting_independent_of_pivots(cfg, n, data):
    G = engine(*cfg).G
    x = data.draw(st.sampled_from(G.H.index_set(1)))
    names = G.H.index_set(n)
    y = data.draw(st.sampled_from(names))
    assert G.bracket_deg1(unit(x), unit(y)) == G.bracket_deg1(unit(x), unit(y), reverse=True)


@settings(max_examples=25, deadline=None)
@given(configs, st.data())
def test_jacobi_with_two_degree_one_entries(cfg, data):
    G = engine(*cfg).G
    h1 = G.H.index_set(1)
    x = unit(data.draw(st.sampled_from(h1)))
    y = unit(data.draw(st.sampled_from(h1)))
    n = data.draw(st.integers(min_value=0, max_value=6))
    z = unit(data.draw(st.sampled_from(G.H.index_set(n))))
    lhs = G.bracket_deg1(G.bracket_deg1(x, y), z)
    rhs = G.bracket_deg1(x, G.bracket_deg1(y, z)) - G.bracket_deg1(y, G.bracket_deg1(x, z))
    assert lhs == rhs
    # antisymmetry in degree one
    assert G.bracket_deg1(x, y) == G.bracket_deg1(y, x) * -1


@settings(max_examples=25, deadline=None)
@given(configs, st.data())
def test_cup_graded_commutative(cfg, data):
    G = engine(*cfg).G
    n1 = data.draw(st.integers(min_value=1, max_value=4))
    n2 = data.draw(st.integers(min_value=1, max_value=4))
    x = data.draw(st.sampled_from(G.H.index_set(n1)))
    y = data.draw(st.sampled_from(G.H.index_set(n2)))
    assert G.cup(x, y) == G.cup(y, x) * ((-1) ** (n1 * n2))


@settings(max_examples=25, deadline=None)
@given(configs, st.data())
def test_poisson_with_degree_one(cfg, data):
    # [x, y z] = [x, y] z + y [x, z] for x in HH^1
    G = engine(*cfg).G
    x = unit(data.draw(st.sampled_from(G.H.index_set(1))))
    n1 = data.draw(st.integers(min_value=0, max_value=3))
    n2 = data.draw(st.integers(min_value=1, max_value=3))
    y = unit(data.draw(st.sampled_from(G.H.index_set(n1))))
    z = unit(data.draw(st.sampled_from(G.H.index_set(n2))))
    lhs = G.bracket_deg1(x, G.cup(y, z))
    rhs = G.cup(G.bracket_deg1(x, y), z) + G.cup(y, G.bracket_deg1(x, z))
    assert lhs == rhs
