import pytest

from biserial_hh import Algebra, Cohomology, HClass, Named, index_set
from biserial_hh.algebra import A, Path
from biserial_hh.cohomology import unit
from biserial_hh.linalg import rank
from biserial_hh.resolution import Gen


def nm(kind, n, *idx):
    return Named(kind, n, tuple(idx))


def test_parallel_paths():
    H = Cohomology(Algebra(4, 2))
    paths = H.parallel_paths(Gen(1, 0, 0))
    assert sorted(p.length for p in paths) == [1, 3]
    for N in (1, 2, 3):
        H = Cohomology(Algebra(4, N))
        # loops: e_i, (a abar)^k for k <= N and (abar a)^k for k < N
        assert len(H.parallel_paths(Gen(2, 1, 0))) == 2 * N


def test_no_parallel_paths():
    # g^3_{0,0} runs from 0 to 3; no basis path of A(6, 1) does that
    H = Cohomology(Algebra(6, 1))
    assert H.parallel_paths(Gen(3, 0, 0)) == []


def test_center_is_kernel_of_d1():
    for m, N in [(3, 2), (4, 1), (4, 3)]:
        H = Cohomology(Algebra(m, N))
        assert H.hh_dimension(0) == 1 + m + m * (N - 1)


def _full_rank(H, n):
    cols = [H.coboundary_of_basis(n, b) for b in H.cochain_basis(n - 1)]
    return rank(cols)


@pytest.mark.parametrize("m,N", [(3, 1), (4, 2), (5, 2)])
def test_dimension_without_weights(m, N):
    # rank oracle on the whole cochain space, ignoring the weight blocks
    H = Cohomology(Algebra(m, N))
    for n in range(0, 6):
        n_cochains = len(H.cochain_basis(n))
        r_in = _full_rank(H, n) if n else 0
        r_out = _full_rank(H, n + 1)
        assert n_cochains - r_out - r_in == H.hh_dimension(n) == len(index_set(m, N, n))


def test_d_squared():
    H = Cohomology(Algebra(4, 2))
    for n in range(1, 10):
        for b in H.cochain_basis(n - 1):
            assert not H.coboundary(H.coboundary_of_basis(n, b), n + 1)


def test_examples():
    assert Cohomology(Algebra(4, 2)).hh_dimension(1) == 6
    assert Cohomology(Algebra(4, 1)).hh_dimension(0) == 5
    H = Cohomology(Algebra(3, 1))
    assert H.hh_dimension(1) == 2
    assert H.hh_dimension(2) == len(index_set(3, 1, 2))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_named_bases(m, N):
    H = Cohomology(Algebra(m, N))
    for n in range(max(2 * m + 2, 14) + 1):
        rep = H.verify_named_basis(n)
        assert rep["ok"], rep


def test_index_set_regimes():
    # m odd: chi_{n,0} only for n = 0 mod 4, phi_{n,0} only for n = 1 mod 4
    for n in range(1, 15):
        names = set(index_set(5, 2, n))
        assert (nm("chi", n, 0) in names) == (n % 4 == 0)
        assert (nm("phi", n, 0) in names) == (n % 4 == 1)
    # t = m - 1 edge case for m odd includes the generators in degree m - 1
    names = index_set(3, 1, 2)
    assert nm("phi", 2, -1) in names and nm("psi", 2, 1) in names


def test_named_cocycle_literals():
    H = Cohomology(Algebra(4, 2))
    alg = H.alg
    phi = H.named_cocycle(nm("phi", 1, 0))
    assert phi == {(Gen(1, 0, i), alg.path(i, "a")): 1 for i in range(4)}
    chi = H.named_cocycle(nm("chi", 2, 0))
    assert chi == {(Gen(2, 1, i), alg.path(i, "")): (-1) ** i for i in range(4)}


def test_invalid_named():
    H = Cohomology(Algebra(3, 2))
    with pytest.raises(ValueError):
        H.named_cocycle(nm("chi", 2, 0))


def test_parallelism_of_named():
    H = Cohomology(Algebra(5, 3))
    res = H.res
    for n in range(8):
        for el in H.index_set(n):
            for (g, p) in H.named_cocycle(el):
                assert p.src == res.source(g)
                assert H.alg.target(p) == res.target(g)


def test_reduce_idempotent_and_coboundary_invariant():
    H = Cohomology(Algebra(4, 2))
    for n in range(1, 7):
        basis = H.cochain_basis(n - 1)
        for k, el in enumerate(H.index_set(n)):
            f = dict(H.named_cocycle(el))
            assert H.reduce_to_basis(f, n) == unit(el)
            # add the coboundary of a basis cochain
            g = H.coboundary_of_basis(n, basis[(7 * k) % len(basis)])
            for key, c in g.items():
                f[key] = f.get(key, 0) + 3 * c
            assert H.reduce_to_basis(f, n) == unit(el)


def test_reduce_rejects_non_cocycle():
    H = Cohomology(Algebra(4, 2))
    g = Gen(1, 0, 0)
    with pytest.raises(ValueError):
        H.reduce_to_basis({(g, H.alg.path(0, "a")): 1}, 1)


def test_socle_on_loops_gives_pi():
    for m, N in [(4, 1), (4, 2), (6, 2)]:
        H = Cohomology(Algebra(m, N))
        total = {}
        for i in range(m):
            f = {(Gen(2, 1, i), Path(i, A, 2 * N)): H.alg.field((-1) ** i)}
            assert H.reduce_to_basis(f, 2) == unit(nm("pi", 2, 0)) * ((-1) ** i)
            total.update(f)
        # the alternating sum over all vertices cancels
        assert H.reduce_to_basis(total, 2) == HClass(2)


def test_hclass_json():
    H = Cohomology(Algebra(4, 2))
    x = unit(nm("phi", 1, 0)) * H.alg.field("2/3") - unit(nm("psi", 1, 0))
    assert x.to_json(H.alg.field) == {"phi_{1,0}": "2/3", "psi_{1,0}": "-1"}
