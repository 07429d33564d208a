"""Hochschild cochains on the minimal resolution and the named bases of HH^n.

A cochain of degree ``n`` is a dict ``{(gen, path): coeff}``: the map sending
``1 (x) gen (x) 1`` to the sum of ``coeff * path`` over its entries, where
every ``path`` is parallel to ``gen``.  The complex splits by the weight
``(d(path) - d(gen), dbar(path) - dbar(gen))``, and all linear algebra is
done one weight block at a time.
"""

from typing import NamedTuple

from .algebra import A, B, Path
from .linalg import ColumnSpace, axpy
from .resolution import Gen, Resolution


class Named(NamedTuple):
    """Named basis element ``kind_{n, idx}`` of HH^n.

    kinds: ``one``, ``eps`` (i,), ``f`` (i, s) in degree 0; ``chi``, ``pi``,
    ``phi``, ``psi`` (index,); ``F``, ``E`` (j, s).
    """

    kind: str
    n: int
    idx: tuple

    def __str__(self):
        sym = {"one": "1", "eps": "eps", "f": "f", "chi": "chi", "pi": "pi",
               "phi": "phi", "psi": "psi", "F": "F", "E": "E"}[self.kind]
        if self.kind == "one":
            return "1"
        if self.kind == "eps":
            return f"eps_{self.idx[0]}"
        if self.kind == "f":
            return f"f_{self.idx[0]}^{self.idx[1]}"
        return f"{sym}_{{{','.join(str(x) for x in (self.n,) + tuple(self.idx))}}}"


def split_n(n, m):
    return divmod(n, m)


def index_set(m, N, n):
    """All named basis elements of HH^n(A(m, N)), in table order."""
    out = []
    if n == 0:
        out.append(Named("one", 0, ()))
        out += [Named("eps", 0, (i,)) for i in range(m)]
        out += [Named("f", 0, (i, s)) for i in range(m) for s in range(1, N)]
        return out
    p, t = divmod(n, m)
    js = [(j, s) for j in range(m) for s in range(1, N)]
    if m % 2 == 0 and n % 2 == 0:
        out += [Named("chi", n, (a,)) for a in range(-p, p + 1)]
        out += [Named("pi", n, (a,)) for a in range(-p, p + 1)]
        out += [Named("F", n, js_) for js_ in js]
    elif m % 2 == 0:
        gammas = list(range(-p, p + 1))
        betas = list(range(-p, p + 1))
        if t == m - 1:
            gammas = [-(p + 1)] + gammas
            betas = betas + [p + 1]
        out += [Named("phi", n, (g,)) for g in gammas]
        out += [Named("psi", n, (b,)) for b in betas]
        out += [Named("E", n, js_) for js_ in js]
    elif n % 2 == 0:
        chis, pis = [], []
        if t % 2 == 1:
            for al in range(0, p):
                (chis if (al + (m - t) // 2) % 2 == 1 else pis).append(p - 2 * al - 1)
        else:
            for al in range(0, p + 1):
                (chis if (al + t // 2) % 2 == 0 else pis).append(p - 2 * al)
        out += [Named("chi", n, (d,)) for d in sorted(chis)]
        out += [Named("pi", n, (d,)) for d in sorted(pis)]
        out += [Named("F", n, js_) for js_ in js]
        if t == m - 1:
            out += [Named("phi", n, (-(p + 1),)), Named("psi", n, (p + 1,))]
    else:
        sigmas, taus = set(), set()
        # long-valued phi and psi
        for g in range(0, p + 2):
            if t % 2 == 1 and g <= p < 2 * g and (g + (t - 1) // 2) % 2 == 0:
                sigmas.add(p - 2 * g)
            if t % 2 == 0 and t != m - 1 and g < p <= 2 * g and (g + (m + t - 1) // 2) % 2 == 0:
                sigmas.add(p - 2 * g - 1)
            if t == m - 1 and g <= p <= 2 * g and g % 2 == 0:
                sigmas.add(p - 2 * g - 1)
        for b in range(-1, p + 2):
            if t % 2 == 1 and 0 <= 2 * b < p and (b + (t - 1) // 2) % 2 == 0:
                taus.add(p - 2 * b)
            if t % 2 == 0 and t != m - 1 and 0 <= 2 * b < p - 1 and (b + (m + t - 1) // 2) % 2 == 0:
                taus.add(p - 2 * b - 1)
            if t == m - 1 and -2 <= 2 * b < p - 1 and b % 2 == 0:
                taus.add(p - 2 * b - 1)
        # short-valued phi and psi
        for g in range(0, p + 1):
            if t % 2 == 1 and 0 <= 2 * g <= p and (g + (t - 1) // 2) % 2 == 0:
                sigmas.add(p - 2 * g)
            if t % 2 == 0 and 0 <= 2 * g < p and (g + (m + t - 1) // 2) % 2 == 0:
                sigmas.add(p - 2 * g - 1)
        for b in range(0, p + 2):
            if t % 2 == 1 and b <= p <= 2 * b and (b + (t - 1) // 2) % 2 == 0:
                taus.add(p - 2 * b)
            if t % 2 == 0 and b <= p - 1 <= 2 * b and (b + (m + t - 1) // 2) % 2 == 0:
                taus.add(p - 2 * b - 1)
        out += [Named("phi", n, (s,)) for s in sorted(sigmas)]
        out += [Named("psi", n, (s,)) for s in sorted(taus)]
        out += [Named("E", n, js_) for js_ in js]
        if t == 0:
            out += [Named("pi", n, (-p,)), Named("pi", n, (p,))]
    return out


def is_valid(m, N, elem):
    return elem in index_set(m, N, elem.n)


class HClass:
    """A cohomology class: coordinates in the named basis of HH^n."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {k: v for k, v in (coords or {}).items() if v}

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return HClass(self.n, axpy(dict(self.coords), 1, other.coords))

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        return HClass(self.n, {k: v * c for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coords
        return isinstance(other, HClass) and self.n == other.n and self.coords == other.coords

    def __bool__(self):
        return bool(self.coords)

    def __repr__(self):
        if not self.coords:
            return f"0 (HH^{self.n})"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.coords.items()))

    def to_json(self, field):
        return {str(k): field.to_str(v) for k, v in sorted(self.coords.items())}


def unit(elem):
    return HClass(elem.n, {elem: 1})


class Cohomology:
    """Cochain complex ``Hom_{A^e}(P_n, A)`` and HH^n for one algebra."""

    def __init__(self, alg):
        self.alg = alg
        self.res = Resolution(alg)
        self.m, self.N = alg.m, alg.N
        self._blocks = {}
        self._inv = {}
        self._quot = {}
        self._cocycle_space = {}
        self._named = {}

    # -- cochains ---------------------------------------------------------

    def parallel_paths(self, g):
        return list(self.alg.paths_between(self.res.source(g), self.res.target(g)))

    def weight(self, key):
        g, p = key
        dp = self.alg.degree(p)
        dg = self.res.degree(g)
        return dp[0] - dg[0], dp[1] - dg[1]

    def cochain_basis(self, n):
        return [(g, p) for g in self.res.gens(n) for p in self.parallel_paths(g)]

    def blocks(self, n):
        """Cochain basis of degree ``n`` grouped by weight."""
        if n < 0:
            return {}
        if n not in self._blocks:
            out = {}
            for key in self.cochain_basis(n):
                out.setdefault(self.weight(key), []).append(key)
            self._blocks[n] = out
        return self._blocks[n]

    def cochain(self, g, x, coeff=1):
        """The cochain ``(g || x)`` for an algebra element ``x`` parallel to ``g``."""
        g = Gen(g.n, g.r, g.i % self.m)
        src, tgt = self.res.source(g), self.res.target(g)
        out = {}
        for p, c in x.terms.items():
            if p.src != src or self.alg.target(p) != tgt:
                raise ValueError(f"{p} is not parallel to {g}")
            out[(g, p)] = c * coeff
        return out

    def evaluate(self, f, x):
        """Apply the cochain ``f`` (extended bimodule-linearly) to ``x`` in P_n."""
        mul = self.alg.mul_paths
        by_gen = {}
        for (g, p), c in f.items():
            by_gen.setdefault(g, []).append((p, c))
        terms = {}
        for (u, g, v), c in x.items():
            for p, d in by_gen.get(g, ()):
                q = mul(u, p)
                if q is None:
                    continue
                q = mul(q, v)
                if q is None:
                    continue
                s = terms.get(q, 0) + c * d
                if s:
                    terms[q] = s
                else:
                    terms.pop(q)
        return self.alg.element(terms)

    def _inverse_d(self, n):
        """For ``g'`` in G^{n-1}: the terms ``(g, u, v, c)`` of ``d_n(g)`` through ``g'``."""
        if n not in self._inv:
            inv = {}
            for g in self.res.gens(n):
                for (u, h, v), c in self.res.differential(g).items():
                    inv.setdefault(h, []).append((g, u, v, c))
            self._inv[n] = inv
        return self._inv[n]

    def coboundary_of_basis(self, n, key):
        """``d_n^*`` of the basis cochain ``key`` in degree ``n - 1``."""
        h, p = key
        mul = self.alg.mul_paths
        out = {}
        for g, u, v, c in self._inverse_d(n).get(h, ()):
            q = mul(u, p)
            if q is None:
                continue
            q = mul(q, v)
            if q is None:
                continue
            k = (g, q)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k)
        return out

    def coboundary(self, f, n):
        """``d_n^* f`` for a cochain ``f`` of degree ``n - 1``."""
        out = {}
        for key, c in f.items():
            axpy(out, c, self.coboundary_of_basis(n, key))
        return out

    def is_cocycle(self, f, n):
        return not self.coboundary(f, n + 1)

    # -- dimensions -------------------------------------------------------

    def _cocycle_dim(self, n, w):
        key = (n, w)
        if key not in self._cocycle_space:
            space = ColumnSpace()
            for b in self.blocks(n).get(w, ()):
                space.add(b, self.coboundary_of_basis(n + 1, b))
            self._cocycle_space[key] = space
        space = self._cocycle_space[key]
        return len(space.labels) - space.rank

    def _coboundary_space(self, n, w):
        """Echelon data of ``image(d_n^*)`` in weight ``w`` (columns labelled ``('d', b)``)."""
        key = (n, w)
        if key not in self._quot:
            space = ColumnSpace()
            for b in self.blocks(n - 1).get(w, ()):
                space.add(("d", b), self.coboundary_of_basis(n, b))
            self._quot[key] = {"space": space, "named": None, "boundary_rank": space.rank}
        return self._quot[key]

    def hh_dimension(self, n, weight=None):
        total = 0
        for w in self.blocks(n):
            if weight is not None and w != weight:
                continue
            total += self._cocycle_dim(n, w) - self._coboundary_space(n, w)["boundary_rank"]
        return total

    def hh_weights(self, n):
        """Weights carrying nonzero cohomology with their dimensions."""
        out = {}
        for w in self.blocks(n):
            d = self.hh_dimension(n, w)
            if d:
                out[w] = d
        return out

    # -- named basis ------------------------------------------------------

    def index_set(self, n):
        return index_set(self.m, self.N, n)

    def named_cocycle(self, elem):
        if elem in self._named:
            return self._named[elem]
        if not is_valid(self.m, self.N, elem):
            raise ValueError(f"{elem} is not a basis element for m={self.m}, N={self.N}")
        f = self._build_named(elem)
        self._named[elem] = f
        return f

    def _build_named(self, el):
        alg, m, N = self.alg, self.m, self.N
        n = el.n
        field = alg.field
        out = {}

        def put(g, path, c=1):
            g = Gen(g.n, g.r, g.i % m)
            assert path.src == self.res.source(g) and alg.target(path) == self.res.target(g), (el, g, path)
            out[(g, path)] = out.get((g, path), 0) + field(c)

        sgn = (lambda k, i: (-1) ** (k * i)) if m % 2 == 0 else (lambda k, i: 1)
        kind = el.kind
        if kind == "one":
            for i in range(m):
                put(Gen(0, 0, i), Path(i, A, 0))
        elif kind == "eps":
            i = el.idx[0]
            put(Gen(0, 0, i), Path(i, A, 2 * N))
        elif kind == "f":
            i, s = el.idx
            for p, c in (alg.f(i) ** s).terms.items():
                put(Gen(0, 0, p.src), p, c)
        elif kind == "chi":
            a = el.idx[0]
            r = (n - a * m) // 2
            for i in range(m):
                put(Gen(n, r, i), Path(i, A, 0), sgn(r, i))
        elif kind == "pi":
            a = el.idx[0]
            r = (n - a * m) // 2
            put(Gen(n, r, 0), Path(0, A, 2 * N))
        elif kind == "F":
            j, s = el.idx
            put(Gen(n, n // 2, j), Path(j, A, 2 * s))
            put(Gen(n, n // 2, j + 1), Path((j + 1) % m, B, 2 * s), (-1) ** (n // 2))
        elif kind == "E":
            j, s = el.idx
            put(Gen(n, (n - 1) // 2, j), Path(j, A, 2 * s + 1))
        elif kind == "phi":
            g = el.idx[0]
            r = (n - g * m - 1) // 2
            length = 2 * N - 1 if g < 0 else 1
            for i in range(m):
                put(Gen(n, r, i), Path(i, A, length), sgn(r, i))
        elif kind == "psi":
            b = el.idx[0]
            r = (n - b * m + 1) // 2
            length = 2 * N - 1 if b > 0 else 1
            for i in range(m):
                put(Gen(n, r, i), alg._normal(i, B, length), sgn(r - 1, i))
        else:
            raise ValueError(kind)
        return {k: v for k, v in out.items() if v}

    def named_weight(self, elem):
        f = self.named_cocycle(elem)
        ws = {self.weight(k) for k in f}
        if len(ws) != 1:
            raise ValueError(f"{elem} is not homogeneous")
        return ws.pop()

    def _quotient(self, n, w):
        """Coboundary echelon in weight ``w`` extended by the named cocycles of that weight."""
        data = self._coboundary_space(n, w)
        if data["named"] is None:
            space = data["space"]
            named = [el for el in self.index_set(n) if self.named_weight(el) == w]
            dependent = []
            for el in named:
                if space.add(("named", el), self.named_cocycle(el)) is not None:
                    dependent.append(el)
            data["named"] = named
            data["dependent"] = dependent
        return data

    def verify_named_basis(self, n):
        """Cocycle, independence and spanning checks for the named basis of HH^n."""
        report = {"degree": n, "not_cocycles": [], "dependent": [], "dimension": None,
                  "named_count": 0, "ok": False}
        named = self.index_set(n)
        report["named_count"] = len(named)
        for el in named:
            if not self.is_cocycle(self.named_cocycle(el), n):
                report["not_cocycles"].append(str(el))
        for w in {self.named_weight(el) for el in named}:
            report["dependent"] += [str(el) for el in self._quotient(n, w)["dependent"]]
        report["dimension"] = self.hh_dimension(n)
        report["ok"] = (not report["not_cocycles"] and not report["dependent"]
                        and report["dimension"] == len(named))
        return report

    def reduce_to_basis(self, f, n, check=True):
        """Coordinates of the class of the cocycle ``f`` in the named basis."""
        if check and not self.is_cocycle(f, n):
            raise ValueError("not a cocycle")
        parts = {}
        for key, c in f.items():
            parts.setdefault(self.weight(key), {})[key] = c
        coords = {}
        for w, part in parts.items():
            sol = self._quotient(n, w)["space"].solve(part)
            if sol is None:
                raise ValueError(f"cocycle of weight {w} is not in the span of the named basis")
            for label, c in sol.items():
                if label[0] == "named":
                    coords[label[1]] = coords.get(label[1], 0) + c
        return HClass(n, coords)

    def representative(self, cls):
        """A cocycle representing the class ``cls``."""
        out = {}
        for el, c in cls.coords.items():
            axpy(out, c, self.named_cocycle(el))
        return out

    def central_to_cochain(self, z):
        """Degree-0 cochain of a central element."""
        out = {}
        for p, c in z.terms.items():
            if p.src != self.alg.target(p):
                raise ValueError("not central")
            out[(Gen(0, 0, p.src), p)] = c
        return out

    def cochain_to_element(self, f):
        """Degree-0 cochain back to an algebra element."""
        terms = {}
        for (g, p), c in f.items():
            terms[p] = terms.get(p, 0) + c
        return self.alg.element(terms)
