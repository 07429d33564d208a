"""The minimal projective bimodule resolution ``P_n = A (x)_E kG^n (x)_E A``.

Generators are ``Gen(n, r, i)`` with ``0 <= r <= n``; the generator starts
at vertex ``i`` and ends at ``i + n - 2r``.  A bimodule element is a dict
``{(left, gen, right): coeff}`` with ``left``/``right`` normal-form paths.
"""

from typing import NamedTuple

from .algebra import A, B, Path
from .linalg import axpy


class Gen(NamedTuple):
    n: int
    r: int
    i: int


def g_degree(n, r, N, which="d"):
    """Closed-form bidegree component of ``g^n_{r,i}`` (independent of ``i``)."""
    if which == "d":
        return r * N + n - 2 * r if n - 2 * r >= 0 else (n - r) * N
    return -r * N if n - 2 * r >= 0 else -(n - r) * N + n - 2 * r


def g_expand(m, N, n, r, i):
    """Expansion of ``g^n_{r,i}`` in the path algebra kQ (no relations applied).

    Returns ``{(src, word): coeff}`` with integer coefficients; ``word`` is a
    string over ``'a'`` (clockwise) and ``'b'`` (counterclockwise).
    """
    if r < 0 or r > n:
        return {}
    if n == 0:
        return {(i % m, ""): 1}
    ab = "ab" * N
    ba = "ba" * N
    if n - 2 * r > 0:
        first, second, sign = "a", ba[: 2 * N - 1], (-1) ** n
    elif n - 2 * r < 0:
        first, second, sign = ab[: 2 * N - 1], "b", (-1) ** n
    else:
        first, second, sign = ab[: 2 * N - 1], ba[: 2 * N - 1], 1
    out = {}
    for (src, w), c in g_expand(m, N, n - 1, r, i).items():
        key = (src, w + first)
        out[key] = out.get(key, 0) + c
    for (src, w), c in g_expand(m, N, n - 1, r - 1, i).items():
        key = (src, w + second)
        out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def word_target(m, src, word):
    return (src + word.count("a") - word.count("b")) % m


def word_degree(word):
    return word.count("a"), -word.count("b")


class Resolution:
    """Differentials and bookkeeping for the resolution of one algebra."""

    def __init__(self, alg):
        self.alg = alg
        self.m = alg.m
        self.N = alg.N
        self._d = {}
        self._by_degree = None

    def gens(self, n):
        return [Gen(n, r, i) for r in range(n + 1) for i in range(self.m)]

    def source(self, g):
        return g.i % self.m

    def target(self, g):
        return (g.i + g.n - 2 * g.r) % self.m

    def degree(self, g):
        return g_degree(g.n, g.r, self.N, "d"), g_degree(g.n, g.r, self.N, "dbar")

    def unit(self, g, coeff=1):
        alg = self.alg
        return {(Path(g.i % self.m, A, 0), g, Path(self.target(g), A, 0)): alg.field(coeff)}

    def differential(self, g):
        """Image of ``1 (x) g (x) 1`` under ``d_n`` as a bimodule element of ``P_{n-1}``."""
        g = Gen(g.n, g.r, g.i % self.m)
        cached = self._d.get(g)
        if cached is not None:
            return cached
        n, r, i = g
        if n < 1:
            raise ValueError("d_n is defined for n >= 1")
        alg = self.alg
        m, N = self.m, self.N
        tgt = self.target(g)
        out = {}

        def add(left, inner, right, c):
            if inner.r < 0 or inner.r > inner.n:
                return
            inner = Gen(inner.n, inner.r, inner.i % m)
            u = alg._normal(i, *left)
            v = alg._normal(self.target(inner), *right)
            if u is None or v is None:
                return
            assert alg.target(u) == inner.i and alg.target(v) == tgt, (g, left, inner, right)
            key = (u, inner, v)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)

        e = (A, 0)
        if n - 2 * r > 0:
            sg = (-1) ** (n + r)
            add(e, Gen(n - 1, r, i), (A, 1), 1)
            add((A, 1), Gen(n - 1, r, i + 1), e, sg)
            add((B, 2 * N - 1), Gen(n - 1, r - 1, i - 1), e, sg)
            add(e, Gen(n - 1, r - 1, i), (B, 2 * N - 1), (-1) ** n)
        elif n - 2 * r < 0:
            sg = (-1) ** (n + r)
            add(e, Gen(n - 1, r, i), (A, 2 * N - 1), 1)
            add((A, 2 * N - 1), Gen(n - 1, r, i + 1), e, sg)
            add((B, 1), Gen(n - 1, r - 1, i - 1), e, sg)
            add(e, Gen(n - 1, r - 1, i), (B, 1), (-1) ** n)
        else:
            sg = (-1) ** (n // 2)
            for k in range(N):
                rest = N - 1 - k
                add((B, 2 * k), Gen(n - 1, r, i), (A, 2 * rest + 1), 1)
                add((A, 2 * k + 1), Gen(n - 1, r, i + 1), (A, 2 * rest), sg)
                add((B, 2 * k + 1), Gen(n - 1, r - 1, i - 1), (B, 2 * rest), sg)
                add((A, 2 * k), Gen(n - 1, r - 1, i), (B, 2 * rest + 1), 1)
        field = alg.field
        out = {k: field(c) for k, c in out.items()}
        self._d[g] = out
        return out

    # -- bimodule arithmetic ----------------------------------------------

    def sandwich(self, u, x, v, coeff=1, into=None):
        """``coeff * u . x . v`` for paths ``u``, ``v`` and a bimodule element ``x``."""
        mul = self.alg.mul_paths
        out = {} if into is None else into
        for (l, g, r), c in x.items():
            l2 = mul(u, l)
            if l2 is None:
                continue
            r2 = mul(r, v)
            if r2 is None:
                continue
            key = (l2, g, r2)
            s = out.get(key, 0) + coeff * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return out

    def apply_d(self, x):
        """``d_n`` applied to a bimodule element of ``P_n``."""
        out = {}
        for (u, g, v), c in x.items():
            self.sandwich(u, self.differential(g), v, c, into=out)
        return out

    def augment(self, x):
        """Multiplication map ``P_0 -> A``."""
        out = self.alg.zero()
        mul = self.alg.mul_paths
        terms = {}
        for (u, g, v), c in x.items():
            p = mul(u, v)
            if p is not None:
                terms[p] = terms.get(p, 0) + c
        return out + self.alg.element(terms)

    def total_degree(self, key):
        u, g, v = key
        du, dv, dg = self.alg.degree(u), self.alg.degree(v), self.degree(g)
        return du[0] + dv[0] + dg[0], du[1] + dv[1] + dg[1]

    def _paths_by_degree(self):
        if self._by_degree is None:
            table = {}
            alg = self.alg
            for p in alg.basis:
                table.setdefault((p.src, alg.target(p)), {}).setdefault(alg.degree(p), []).append(p)
            self._by_degree = table
        return self._by_degree

    def block_basis(self, n, src, tgt, bidegree):
        """Basis triples of ``e_src P_n e_tgt`` with the given total bidegree."""
        table = self._paths_by_degree()
        out = []
        for g in self.gens(n):
            dg = self.degree(g)
            lefts = table.get((src, g.i), {})
            rights = table.get((self.target(g), tgt), {})
            for du, us in lefts.items():
                need = (bidegree[0] - dg[0] - du[0], bidegree[1] - dg[1] - du[1])
                vs = rights.get(need)
                if not vs:
                    continue
                for u in us:
                    for v in vs:
                        out.append((u, g, v))
        return out

    # -- checks -------------------------------------------------------------

    def verify_complex(self, n_max):
        """Check ``d_{n-1} d_n = 0`` for ``2 <= n <= n_max`` and ``eps d_1 = 0``.

        Returns None on success, otherwise the first failing generator.
        """
        for g in self.gens(1):
            if self.augment(self.differential(g)):
                return g
        for n in range(2, n_max + 1):
            for g in self.gens(n):
                if self.apply_d(self.differential(g)):
                    return g
        return None

    def four_term_differential(self, g):
        """Four-term differential for N = 1, written directly from its closed form."""
        assert self.N == 1
        alg = self.alg
        n, r, i = g
        m = self.m
        out = {}

        def add(u, inner, v, c):
            if inner.r < 0 or inner.r > inner.n:
                return
            inner = Gen(inner.n, inner.r, inner.i % m)
            key = (u, inner, v)
            out[key] = out.get(key, 0) + c

        e_i = Path(i % m, A, 0)
        add(e_i, Gen(n - 1, r, i), alg.path(i + n - 2 * r - 1, "a"), 1)
        add(alg.path(i, "a"), Gen(n - 1, r, i + 1), Path(self.target(g), A, 0), (-1) ** (n + r))
        add(alg.path(i, "b"), Gen(n - 1, r - 1, i - 1), Path(self.target(g), A, 0), (-1) ** (n + r))
        add(e_i, Gen(n - 1, r - 1, i), alg.path(i + n - 2 * r + 1, "b"), (-1) ** n)
        return {k: alg.field(c) for k, c in out.items() if c}


def bimodule_add(x, y, coeff=1):
    return axpy(dict(x), coeff, y)
