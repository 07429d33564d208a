"""Gerstenhaber brackets and cup products on HH*(A(m, N)).

Brackets with degree-one classes are computed by lifting the associated
derivation to a delta-operator on the resolution.  Cup products come from
Yoneda liftings of cocycles to chain maps.  Brackets between higher degree
classes are pinned down by the weight filter plus Poisson and Jacobi
constraints.
"""

from itertools import product

from .algebra import A, B, Derivation, Path
from .cohomology import HClass, Named, unit
from .linalg import ColumnSpace, axpy
from .resolution import Gen


class LiftingError(RuntimeError):
    pass


class InconsistentSystem(RuntimeError):
    pass


def _gsign(p, q):
    return -1 if (p * q) % 2 else 1


class Gerstenhaber:
    """Bracket and cup machinery attached to a :class:`Cohomology` object."""

    def __init__(self, H):
        self.H = H
        self.res = H.res
        self.alg = H.alg
        self.field = H.alg.field
        self._spaces = {}
        self._lifts = {}
        self._yoneda = {}
        self._cups = {}
        self._brackets = {}
        self._dpath = {}

    # -- Eulerian brackets ---------------------------------------------------

    def euler_bracket(self, which, f):
        """[phi_{1,0}, f] (``which='phi'``) or [psi_{1,0}, f] on a cochain."""
        k = 0 if which in ("phi", "d") else 1
        out = {}
        for key, c in f.items():
            w = self.H.weight(key)[k]
            if w:
                out[key] = c * w
        return out

    def eigenvalues(self, elem):
        """Eigenvalues of [phi], [psi], [phi+psi], [phi-psi] on a named element."""
        f = self.H.named_cocycle(elem)
        vals = []
        for which in ("phi", "psi"):
            g = self.euler_bracket(which, f)
            lam = None
            for key, c in f.items():
                ratio = g.get(key, 0) / c
                if lam is None:
                    lam = ratio
                elif lam != ratio:
                    raise ValueError(f"{elem} is not an eigenvector")
            vals.append(lam)
        a, b = vals
        return (a, b, a + b, a - b)

    def eigenvalue_table(self, n):
        """Rows ``(elem, eigenvalues)`` for the named basis of HH^n.

        Each eigenvalue is read off from the reduced class of the bracket, so
        the diagonal action is checked on cohomology and not just on cochains.
        """
        rows = []
        H = self.H
        for el in H.index_set(n):
            f = H.named_cocycle(el)
            lams = []
            for which in ("phi", "psi"):
                cls = H.reduce_to_basis(self.euler_bracket(which, f), n)
                extra = {k: v for k, v in cls.coords.items() if k != el}
                if extra:
                    raise ValueError(f"[{which}, {el}] is not a multiple of {el}")
                lams.append(cls.coords.get(el, self.field(0)))
            a, b = lams
            rows.append((el, (a, b, a + b, a - b)))
        return rows

    # -- derivations and delta-liftings ------------------------------------

    def derivation(self, x):
        """Derivation attached to a degree-one class or cochain."""
        f = self.H.representative(x) if isinstance(x, HClass) else x
        alg = self.alg
        m = alg.m
        vals = {}
        for (g, p), c in f.items():
            if g.n != 1:
                raise ValueError("not a degree one cochain")
            if g.r == 0:
                label = (A, g.i)
            else:
                label = (B, (g.i - 1) % m)
                c = -c
            vals.setdefault(label, {})
            vals[label][p] = vals[label].get(p, 0) + c
        return Derivation(alg, {k: alg.element(v) for k, v in vals.items()})

    def _apply_deriv_path(self, D, key, p):
        ck = (key, p)
        if ck not in self._dpath:
            self._dpath[ck] = D.apply_path(p).terms if p.length else {}
        return self._dpath[ck]

    def _space(self, k, src, tgt, bideg, reverse):
        key = (k, src, tgt, bideg, reverse)
        sp = self._spaces.get(key)
        if sp is None:
            basis = self.res.block_basis(k, src, tgt, bideg)
            if reverse:
                basis = basis[::-1]
            sp = ColumnSpace()
            one = self.field(1)
            for b in basis:
                sp.add(b, self.res.apply_d({b: one}))
            self._spaces[key] = sp
        return sp

    def lift_derivation(self, D, n_max, key=None, reverse=False):
        """Delta-lifting of the derivation ``D`` up to degree ``n_max``.

        Returns a list ``F`` with ``F[n][g] = f_n(1 (x) g (x) 1)``.  ``reverse``
        flips the column order of every linear solve, which changes the pivot
        choices and hence the particular solution.
        """
        if key is None:
            key = ("anon", id(D))
        cache = self._lifts.get((key, reverse))
        if cache is not None and len(cache) > n_max:
            return cache
        comps = D.weight_components()
        if len(comps) > 1:
            total = [dict() for _ in range(n_max + 1)]
            for w, Dw in sorted(comps.items()):
                Fw = self.lift_derivation(Dw, n_max, key=(key, w), reverse=reverse)
                for n in range(n_max + 1):
                    for g, x in Fw[n].items():
                        total[n].setdefault(g, {})
                        axpy(total[n][g], 1, x)
            self._lifts[(key, reverse)] = total
            return total
        w = next(iter(comps)) if comps else (0, 0)
        res = self.res
        F = cache if cache is not None else [{g: {} for g in res.gens(0)}]
        for n in range(len(F), n_max + 1):
            Fn = {}
            for g in res.gens(n):
                rhs = self._delta_apply(D, key, F[n - 1], res.differential(g))
                dg = res.degree(g)
                sp = self._space(n, res.source(g), res.target(g), (dg[0] + w[0], dg[1] + w[1]), reverse)
                sol = sp.solve(rhs)
                if sol is None:
                    raise LiftingError(f"no delta-lifting at {g}")
                Fn[g] = sol
            F.append(Fn)
        self._lifts[(key, reverse)] = F
        return F

    def _delta_apply(self, D, key, Fprev, x):
        """The delta-operator extension of ``Fprev`` applied to ``x``."""
        out = {}
        for (u, h, v), c in x.items():
            for p, c2 in self._apply_deriv_path(D, key, u).items():
                k = (p, h, v)
                axpy(out, 1, {k: c * c2})
            self.res.sandwich(u, Fprev[h], v, c, into=out)
            for p, c2 in self._apply_deriv_path(D, key, v).items():
                k = (u, h, p)
                axpy(out, 1, {k: c * c2})
        return out

    def check_lifting(self, D, F, key=None):
        """Verify ``d f_n = f_{n-1} d`` for a lifting; returns the first failure or None."""
        if key is None:
            key = ("check", id(D))
        for n in range(1, len(F)):
            for g, x in F[n].items():
                lhs = self.res.apply_d(x)
                rhs = self._delta_apply(D, key, F[n - 1], self.res.differential(g))
                if axpy(dict(lhs), -1, rhs):
                    return g
        return None

    def diagonal_lifting(self, which, n_max):
        """Closed-form liftings of the Eulerian derivations: scale by the degree of g."""
        k = 0 if which in ("phi", "d") else 1
        F = []
        for n in range(n_max + 1):
            F.append({g: self.res.unit(g, self.res.degree(g)[k]) for g in self.res.gens(n)})
        for Fn in F:
            for g in list(Fn):
                Fn[g] = {key: c for key, c in Fn[g].items() if c}
        return F

    def apply_lifting(self, D, F, f, n, key=None):
        """The cochain ``g -> D(f(g)) - f(F_n(g))``."""
        if key is None:
            key = ("apply", id(D))
        out = {}
        values = {}
        for (g, p), c in f.items():
            values.setdefault(g, {})[p] = c
        mul = self.alg.mul_paths
        for g in self.res.gens(n):
            terms = {}
            for p, c in values.get(g, {}).items():
                for q, c2 in self._apply_deriv_path(D, key, p).items():
                    terms[q] = terms.get(q, 0) + c * c2
            for (u, h, v), c in F[n][g].items():
                for p, c2 in values.get(h, {}).items():
                    q = mul(u, p)
                    if q is None:
                        continue
                    q = mul(q, v)
                    if q is None:
                        continue
                    terms[q] = terms.get(q, 0) - c * c2
            for q, c in terms.items():
                if c:
                    out[(g, q)] = c
        return out

    def bracket_deg1_cochain(self, x, f, n, reverse=False, key=None):
        """Cochain representing [x, f] for a degree one class ``x``."""
        D = self.derivation(x)
        if key is None:
            key = ("cls", repr(x))
        F = self.lift_derivation(D, n, key=key, reverse=reverse)
        return self.apply_lifting(D, F, f, n, key=key)

    def bracket_deg1(self, x, y, reverse=False):
        """[x, y] for ``x`` in HH^1, computed through a delta-lifting."""
        if x.n != 1:
            raise ValueError("first argument must have degree one")
        out = HClass(y.n)
        for ex, cx in x.coords.items():
            for ey, cy in y.coords.items():
                out = out + self._bracket1_named(ex, ey, reverse) * (cx * cy)
        return out

    def _bracket1_named(self, ex, ey, reverse=False):
        key = ("b1", ex, ey, reverse)
        if key not in self._brackets:
            f = self.H.named_cocycle(ey)
            D = self.derivation(unit(ex))
            F = self.lift_derivation(D, ey.n, key=ex, reverse=reverse)
            g = self.apply_lifting(D, F, f, ey.n, key=ex)
            self._brackets[key] = self.H.reduce_to_basis(g, ey.n)
        return self._brackets[key]

    def bracket(self, x, y):
        """Bracket of two classes when one of them has degree at most one."""
        if x.n == 1:
            return self.bracket_deg1(x, y)
        if y.n == 1:
            return self.bracket_deg1(y, x) * -1
        if x.n == 0 and y.n == 0:
            return None
        raise NotImplementedError("use poisson_solve for brackets of higher degree classes")

    # -- Yoneda lifting and cup products -----------------------------------

    def yoneda_lift(self, elem, k_max, reverse=False):
        """Chain map ``Phi_k: P_{q+k} -> P_k`` lifting the named cocycle ``elem``.

        Returns a list with ``Phi[k][g]`` the image of ``1 (x) g (x) 1``.
        """
        key = (elem, reverse)
        Phi = self._yoneda.get(key)
        if Phi is not None and len(Phi) > k_max:
            return Phi
        H, res = self.H, self.res
        q = elem.n
        w = H.named_weight(elem)
        if Phi is None:
            f = H.named_cocycle(elem)
            Phi0 = {g: {} for g in res.gens(q)}
            for (g, p), c in f.items():
                src = res.source(g)
                Phi0[g][(Path(src, A, 0), Gen(0, 0, src), p)] = c
            Phi = [Phi0]
        for k in range(len(Phi), k_max + 1):
            prev = Phi[k - 1]
            Phik = {}
            for g in res.gens(q + k):
                rhs = {}
                for (u, h, v), c in res.differential(g).items():
                    res.sandwich(u, prev[h], v, c, into=rhs)
                dg = res.degree(g)
                sp = self._space(k, res.source(g), res.target(g), (dg[0] + w[0], dg[1] + w[1]), reverse)
                sol = sp.solve(rhs)
                if sol is None:
                    raise LiftingError(f"no Yoneda lifting of {elem} at {g}")
                Phik[g] = sol
            Phi.append(Phik)
        self._yoneda[key] = Phi
        return Phi

    def check_yoneda(self, elem, Phi):
        """Verify ``d Phi_k = Phi_{k-1} d`` and the augmentation condition."""
        res, H = self.res, self.H
        f = H.named_cocycle(elem)
        for g, x in Phi[0].items():
            want = {p: c for (gg, p), c in f.items() if gg == g}
            if res.augment(x) != self.alg.element(want):
                return g
        for k in range(1, len(Phi)):
            for g, x in Phi[k].items():
                rhs = {}
                for (u, h, v), c in res.differential(g).items():
                    res.sandwich(u, Phi[k - 1][h], v, c, into=rhs)
                if axpy(dict(res.apply_d(x)), -1, rhs):
                    return g
        return None

    def compose(self, f, Phi_k, n):
        """Cochain ``f o Phi_k`` on the generators of degree ``n``."""
        out = {}
        for g in self.res.gens(n):
            val = self.H.evaluate(f, Phi_k[g])
            for p, c in val.terms.items():
                out[(g, p)] = c
        return out

    def _cup_named(self, ex, ey, route):
        key = (ex, ey, route)
        if key not in self._cups:
            H = self.H
            n = ex.n + ey.n
            if route == "right":
                Phi = self.yoneda_lift(ey, ex.n)
                f = self.compose(H.named_cocycle(ex), Phi[ex.n], n)
            else:
                Phi = self.yoneda_lift(ex, ey.n)
                f = self.compose(H.named_cocycle(ey), Phi[ey.n], n)
                if (ex.n * ey.n) % 2:
                    f = {k: -c for k, c in f.items()}
            self._cups[key] = H.reduce_to_basis(f, n)
        return self._cups[key]

    def cup(self, x, y, route="right"):
        """Cup product ``x y``.

        The default route composes ``x`` with the Yoneda lifting of ``y``;
        ``route='left'`` lifts ``x`` instead and applies the Koszul sign, which
        gives an independent computation of the same class.
        """
        if isinstance(x, Named):
            x = unit(x)
        if isinstance(y, Named):
            y = unit(y)
        out = HClass(x.n + y.n)
        if x.n == 0 or y.n == 0:
            return self._cup_central(x, y)
        for ex, cx in x.coords.items():
            for ey, cy in y.coords.items():
                out = out + self._cup_named(ex, ey, route) * (cx * cy)
        return out

    def _cup_central(self, x, y):
        """Cup product with a degree zero factor: pointwise multiplication."""
        H = self.H
        z, other = (x, y) if x.n == 0 else (y, x)
        zel = H.cochain_to_element(H.representative(z))
        f = H.representative(other)
        out = {}
        for (g, p), c in f.items():
            prod = zel * self.alg.from_path(p, c)
            for q, d in prod.terms.items():
                if q.src == p.src:
                    axpy(out, 1, {(g, q): d})
        return H.reduce_to_basis(out, other.n)

    # -- weight filter and Poisson solver ----------------------------------

    def eigen_filter(self, x, y):
        """Named elements of degree |x|+|y|-1 with the eigenvalues forced on [x, y]."""
        n = x.n + y.n - 1
        if n < 0:
            return []
        ex, ey = self.eigenvalues(x), self.eigenvalues(y)
        a, a2 = ex[0] + ey[0], ex[2] + ey[2]
        out = []
        for el in self.H.index_set(n):
            ev = self.eigenvalues(el)
            if ev[0] == a and ev[2] == a2:
                out.append(el)
        return out

    def poisson_solve(self, generators, known_deg1=True, max_degree=None, jacobi=True):
        """Solve for the brackets among ``generators`` using Poisson and Jacobi identities.

        Brackets with degree one classes are known (computed by lifting) when
        ``known_deg1`` is set; otherwise only [phi_{1,0}, -] and [psi_{1,0}, -]
        are treated as known.  Returns a :class:`PoissonResult`.
        """
        return PoissonSystem(self, generators, known_deg1, max_degree, jacobi).solve()


def hh1_basis(H):
    return H.index_set(1)


class PoissonResult:
    def __init__(self, values, undetermined, n_equations, n_instances):
        self.values = values
        self.undetermined = undetermined
        self.n_equations = n_equations
        self.n_instances = n_instances

    def __getitem__(self, pair):
        return self.values[pair]


class PoissonSystem:
    """Linear system whose unknowns are bracket coordinates on filtered candidates."""

    def __init__(self, G, generators, known_deg1, max_degree, jacobi):
        self.G = G
        self.H = G.H
        self.gens = list(dict.fromkeys(generators))
        self.hh1 = self.H.index_set(1)
        self.known_deg1 = known_deg1
        self.max_degree = max_degree
        self.jacobi = jacobi
        self.euler = {Named("phi", 1, (0,)), Named("psi", 1, (0,))}
        self.unknowns = {}
        everything = list(dict.fromkeys(self.gens + self.hh1))
        for x, z in product(everything, self.gens):
            if self._is_known(x, z):
                continue
            pair = self._norm(x, z)[0]
            if pair not in self.unknowns:
                self.unknowns[pair] = self.G.eigen_filter(*pair)

    def _order(self, x):
        return (x.n, x.kind, x.idx)

    def _norm(self, x, z):
        """Canonical ordering of a pair and the sign relating [x, z] to it."""
        if self._order(x) <= self._order(z):
            return (x, z), 1
        return (z, x), -_gsign(x.n - 1, z.n - 1)

    def _is_known(self, x, z):
        if x.n == 0 and z.n == 0:
            return True
        if x in self.euler or z in self.euler:
            return True
        if self.known_deg1 and (x.n == 1 or z.n == 1):
            return True
        return False

    def _known_value(self, x, z):
        if x.n == 0 and z.n == 0:
            return HClass(-1)
        return self.G.bracket(unit(x), unit(z))

    def form(self, x, z):
        """Linear form for [x, z]: dict var -> HClass plus key None for the constant."""
        if self._is_known(x, z):
            return {None: self._known_value(x, z)}
        pair, sgn = self._norm(x, z)
        if pair not in self.unknowns:
            return None
        n = x.n + z.n - 1
        return {(pair, c): unit(c) * sgn for c in self.unknowns[pair]} or {None: HClass(n)}

    def form_of_class(self, cls, z, left=True):
        """Form for [cls, z] (``left``) or [z, cls] when ``cls`` is a combination."""
        out = {}
        for el, c in cls.coords.items():
            f = self.form(el, z) if left else self.form(z, el)
            if f is None:
                return None
            _add_form(out, f, c)
        return out

    def _cup_form(self, form, y, right=True):
        out = {}
        for k, v in form.items():
            if not v:
                continue
            out[k] = self.G.cup(v, unit(y)) if right else self.G.cup(unit(y), v)
        return out

    def instances(self):
        G = self.G
        factors = list(dict.fromkeys(self.gens + self.hh1))
        maxd = self.max_degree
        for x, y, z in product(factors, factors, self.gens):
            deg = x.n + y.n + z.n - 1
            if maxd is not None and deg > maxd:
                continue
            if deg < 0 or (maxd is not None and x.n + y.n > maxd):
                continue
            xy = G.cup(unit(x), unit(y))
            lhs = self.form_of_class(xy, z)
            if lhs is None:
                continue
            t1 = self.form(x, z)
            t2 = self.form(y, z)
            if t1 is None or t2 is None:
                continue
            if all(k is None for k in list(lhs) + list(t1) + list(t2)):
                continue
            rhs = self._cup_form(t1, y, right=True)
            _add_form(rhs, self._cup_form(t2, x, right=False), _gsign(x.n, z.n - 1))
            eq = dict(lhs)
            _add_form(eq, rhs, -1)
            yield ("poisson", x, y, z), eq
        if not self.jacobi:
            return
        for x in self.hh1:
            if x in self.euler:
                continue
            for pair, cands in self.unknowns.items():
                y, z = pair
                if y.n == 1:
                    continue
                lhs = {}
                for c in cands:
                    lhs[(pair, c)] = G.bracket_deg1(unit(x), unit(c))
                xy = G.bracket_deg1(unit(x), unit(y))
                xz = G.bracket_deg1(unit(x), unit(z))
                f1 = self.form_of_class(xy, z)
                f2 = self.form_of_class(xz, y, left=False)
                if f1 is None or f2 is None:
                    continue
                eq = dict(lhs)
                _add_form(eq, f1, -1)
                _add_form(eq, f2, -1)
                yield ("jacobi", x, y, z), eq

    def solve(self):
        rows = {}
        columns = {}
        const = {}
        n_inst = 0
        row_instance = {}
        for inst, eq in self.instances():
            n_inst += 1
            for var, cls in eq.items():
                if not cls:
                    continue
                for el, c in cls.coords.items():
                    row = (inst, el)
                    row_instance[row] = inst
                    if var is None:
                        const[row] = const.get(row, 0) + c
                    else:
                        columns.setdefault(var, {})
                        axpy(columns[var], 1, {row: c})
        variables = [(pair, c) for pair, cands in self.unknowns.items() for c in cands]
        space = ColumnSpace()
        for var in variables:
            space.add(var, columns.get(var, {}))
        target = {k: -v for k, v in const.items() if v}
        sol = space.solve(target)
        if sol is None:
            raise InconsistentSystem(self._first_violation(variables, columns, target, row_instance))
        free = set()
        for rel in space.kernel:
            free.update(rel)
        values, undetermined = {}, []
        for pair, cands in self.unknowns.items():
            if any((pair, c) in free for c in cands):
                undetermined.append(pair)
                continue
            n = pair[0].n + pair[1].n - 1
            values[pair] = HClass(n, {c: sol.get((pair, c), 0) for c in cands})
        return PoissonResult(values, undetermined, len(set(row_instance)), n_inst)

    def _first_violation(self, variables, columns, target, row_instance):
        insts = list(dict.fromkeys(row_instance.values()))
        for k in range(1, len(insts) + 1):
            keep = set(insts[:k])
            space = ColumnSpace()
            for var in variables:
                space.add(var, {r: c for r, c in columns.get(var, {}).items() if row_instance[r] in keep})
            t = {r: c for r, c in target.items() if row_instance[r] in keep}
            if space.solve(t) is None:
                kind, x, y, z = insts[k - 1]
                return f"{kind} identity violated at ({x}, {y}, {z})"
        return "inconsistent system"


def _add_form(target, form, coeff=1):
    for k, v in form.items():
        if k in target:
            target[k] = target[k] + v * coeff
        else:
            target[k] = v * coeff
    return target
