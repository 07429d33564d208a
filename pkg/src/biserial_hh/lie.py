"""Lie structure of HH^1 and the HH^1-module structure of HH^n."""

from .cohomology import HClass, Named, unit
from .linalg import ColumnSpace, axpy, clean


# -- abstract Lie algebras given by structure constants ----------------------

class LiePresentation:
    """Finite-dimensional Lie algebra with basis ``labels`` and structure constants.

    ``table[(a, b)]`` is the bracket of two basis labels as a dict label -> coeff;
    missing pairs are zero.
    """

    def __init__(self, labels, table, field):
        self.labels = list(labels)
        self.table = {k: clean(v) for k, v in table.items()}
        self.field = field

    def bracket_basis(self, a, b):
        if (a, b) in self.table:
            return self.table[(a, b)]
        if (b, a) in self.table:
            return {k: -v for k, v in self.table[(b, a)].items()}
        return {}

    def bracket(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                axpy(out, ca * cb, self.bracket_basis(a, b))
        return out

    def check_antisymmetry(self):
        for a in self.labels:
            if self.bracket_basis(a, a):
                return (a, a)
            for b in self.labels:
                if axpy(dict(self.bracket_basis(a, b)), 1, self.bracket_basis(b, a)):
                    return (a, b)
        return None

    def check_jacobi(self):
        one = self.field(1)
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    x, y, z = {a: one}, {b: one}, {c: one}
                    tot = self.bracket(x, self.bracket(y, z))
                    axpy(tot, 1, self.bracket(y, self.bracket(z, x)))
                    axpy(tot, 1, self.bracket(z, self.bracket(x, y)))
                    if tot:
                        return (a, b, c)
        return None

    def center(self):
        """Basis of the center, as vectors over the labels."""
        space = ColumnSpace()
        for a in self.labels:
            col = {}
            for b in self.labels:
                for k, v in self.bracket_basis(a, b).items():
                    col[(b, k)] = v
            space.add(a, col)
        return space.kernel

    def derived_series(self, max_steps=64):
        """Dimensions of L, [L, L], [[L, L], [L, L]], ... until stable."""
        one = self.field(1)
        current = [{a: one} for a in self.labels]
        dims = [len(current)]
        for _ in range(max_steps):
            space = ColumnSpace()
            nxt = []
            for i, x in enumerate(current):
                for y in current[i + 1 :]:
                    v = self.bracket(x, y)
                    if v and space.add(len(nxt), v) is None:
                        nxt.append(v)
            if len(nxt) == dims[-1]:
                break
            dims.append(len(nxt))
            current = nxt
            if not nxt:
                break
        return dims


def virasoro_subquotient(q, field, prefix=None):
    """The truncation a_q of the positive Virasoro algebra: L_0, ..., L_q."""
    def lab(s):
        return ("L", s) if prefix is None else ("L", prefix, s)

    labels = [lab(s) for s in range(q + 1)]
    table = {}
    for s in range(q + 1):
        for r in range(s + 1, q + 1):
            if s + r <= q:
                table[(lab(s), lab(r))] = {lab(s + r): field(r - s)}
    return LiePresentation(labels, table, field)


# -- HH^1 -------------------------------------------------------------------

PHI = Named("phi", 1, (0,))
PSI = Named("psi", 1, (0,))


class LieStructure:
    """HH^1 as a Lie algebra and its action on HH^n."""

    def __init__(self, G):
        self.G = G
        self.H = G.H
        self.alg = G.alg
        self.field = G.field
        self.m, self.N = self.alg.m, self.alg.N
        self._actions = {}

    # basis change between {phi, psi, E} and {C, E0, E}
    def labels(self):
        return ["C", "E0"] + [Named("E", 1, (j, s)) for j in range(self.m) for s in range(1, self.N)]

    def to_class(self, label):
        half = self.field(1) / 2
        if label == "C":
            return HClass(1, {PHI: half, PSI: half})
        if label == "E0":
            return HClass(1, {PHI: half, PSI: -half})
        return unit(label)

    def from_class(self, cls):
        a = cls.coords.get(PHI, 0)
        b = cls.coords.get(PSI, 0)
        out = {"C": a + b, "E0": a - b}
        for k, v in cls.coords.items():
            if k.kind == "E":
                out[k] = v
        return clean(out)

    def hh1_presentation(self):
        labels = self.labels()
        table = {}
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                val = self.G.bracket_deg1(self.to_class(a), self.to_class(b))
                table[(a, b)] = self.from_class(val)
        return LiePresentation(labels, table, self.field)

    def lie_center(self):
        return self.hh1_presentation().center()

    def derived_series(self):
        return self.hh1_presentation().derived_series()

    def embedding_target(self):
        """<c> + a_{N-1}(0) + ... + a_{N-1}(m-1)."""
        labels = ["c"]
        table = {}
        for j in range(self.m):
            a = virasoro_subquotient(self.N - 1, self.field, prefix=j)
            labels += a.labels
            table.update(a.table)
        return LiePresentation(labels, table, self.field)

    def embedding_map(self):
        one = self.field(1)
        out = {"C": {"c": one}, "E0": {("L", j, 0): one for j in range(self.m)}}
        for j in range(self.m):
            for s in range(1, self.N):
                out[Named("E", 1, (j, s))] = {("L", j, s): one}
        return out

    def verify_embedding(self):
        """Check the map to <c> + sum_j a_{N-1}(j) is an injective Lie homomorphism."""
        src = self.hh1_presentation()
        tgt = self.embedding_target()
        phi = self.embedding_map()

        def image(vec):
            out = {}
            for k, v in vec.items():
                axpy(out, v, phi[k])
            return out

        failures = []
        one = self.field(1)
        for a in src.labels:
            for b in src.labels:
                lhs = image(src.bracket({a: one}, {b: one}))
                rhs = tgt.bracket(phi[a], phi[b])
                if axpy(dict(lhs), -1, rhs):
                    failures.append((a, b))
        space = ColumnSpace()
        for a in src.labels:
            space.add(a, phi[a])
        report = {
            "homomorphism": not failures,
            "injective": space.rank == len(src.labels),
            "failures": [(str(a), str(b)) for a, b in failures],
            "copies_commute": True,
        }
        for j in range(self.m):
            for k in range(self.m):
                if j == k:
                    continue
                for s in range(1, self.N):
                    for r in range(1, self.N):
                        if tgt.bracket({("L", j, s): one}, {("L", k, r): one}):
                            report["copies_commute"] = False
        report["ok"] = report["homomorphism"] and report["injective"] and report["copies_commute"]
        return report

    def virasoro_copy(self, j):
        """<E0, E_{1,j,s}> as a presentation, relabelled E0 -> L_0, E_{1,j,s} -> L_s."""
        pres = self.hh1_presentation()
        rename = {"E0": ("L", 0)}
        for s in range(1, self.N):
            rename[Named("E", 1, (j, s))] = ("L", s)
        table = {}
        one = self.field(1)
        keys = list(rename)
        for i, a in enumerate(keys):
            for b in keys[i + 1 :]:
                val = pres.bracket({a: one}, {b: one})
                if any(k not in rename for k in val):
                    raise ValueError("not a subalgebra")
                table[(rename[a], rename[b])] = {rename[k]: v for k, v in val.items()}
        return LiePresentation([rename[k] for k in keys], table, self.field)

    # -- modules ---------------------------------------------------------------

    def module_action(self, n):
        if n not in self._actions:
            self._actions[n] = LieModule(self, n)
        return self._actions[n]

    def decompose(self, n, certify=True):
        return decompose(self, n, certify)


class LieModule:
    """HH^n with the action of the basis {C, E0, E_{1,j,s}} of HH^1."""

    def __init__(self, L, n):
        self.L = L
        self.n = n
        self.basis = L.H.index_set(n)
        self.labels = L.labels()
        G = L.G
        half = L.field(1) / 2
        self.act = {lab: {} for lab in self.labels}
        for el, ev in G.eigenvalue_table(n):
            self.act["C"][el] = clean({el: (ev[0] + ev[1]) * half})
            self.act["E0"][el] = clean({el: (ev[0] - ev[1]) * half})
        for lab in self.labels[2:]:
            for el in self.basis:
                self.act[lab][el] = dict(G.bracket_deg1(unit(lab), unit(el)).coords)

    @property
    def dim(self):
        return len(self.basis)

    def apply(self, label, vec):
        out = {}
        for el, c in vec.items():
            axpy(out, c, self.act[label][el])
        return out

    def check_representation(self, pres=None):
        """[X, Y] v = X(Y v) - Y(X v) on every basis vector; returns a failure or None."""
        pres = pres or self.L.hh1_presentation()
        one = self.L.field(1)
        for a in self.labels:
            for b in self.labels:
                br = pres.bracket({a: one}, {b: one})
                for el in self.basis:
                    v = {el: one}
                    lhs = {}
                    for k, c in br.items():
                        axpy(lhs, c, self.apply(k, v))
                    rhs = self.apply(a, self.apply(b, v))
                    axpy(rhs, -1, self.apply(b, self.apply(a, v)))
                    if axpy(lhs, -1, rhs):
                        return (a, b, el)
        return None

    def submodule_generated(self, vectors):
        """Basis of the smallest invariant subspace containing ``vectors``."""
        space = ColumnSpace()
        basis = []
        queue = list(vectors)
        while queue:
            v = clean(queue.pop())
            if not v:
                continue
            if space.add(len(basis), v) is not None:
                continue
            basis.append(v)
            for lab in self.labels:
                queue.append(self.apply(lab, v))
        return basis


class Summand:
    def __init__(self, name, vectors):
        self.name = name
        self.vectors = vectors
        self.weights = []
        self.central_character = None
        self.invariant = None
        self.certificate = None
        self.expected_central = None

    def to_json(self, field):
        return {
            "name": self.name,
            "span": [{str(k): field.to_str(v) for k, v in sorted(vec.items())} for vec in self.vectors],
            "weights": [field.to_str(w) for w in self.weights],
            "central_character": None if self.central_character is None else field.to_str(self.central_character),
            "invariant": self.invariant,
            "certificate": self.certificate,
        }


def _nm(kind, n, *idx):
    return Named(kind, n, tuple(idx))


def summand_list(m, N, n, field):
    """The listed decomposition of HH^n into (name, spanning vectors, central index) triples.

    The central index is the alpha-like index whose -alpha m / 2 is the central
    character, or 0.
    """
    from .cohomology import index_set

    one = field(1)
    out = []
    basis = index_set(m, N, n)
    Es = lambda j: [el for el in basis if el.kind in ("E", "F") and el.idx[0] == j]
    EF = [el for el in basis if el.kind in ("E", "F")]
    if n == 0:
        out.append(("<1>", [{_nm("one", 0): one}], 0))
        if m % 2 == 0:
            out.append(("<eps_0>", [{_nm("eps", 0, 0): one}], 0))
            vecs = [{_nm("f", 0, i, s): one} for i in range(m) for s in range(1, N)]
            vecs += [{_nm("eps", 0, i): one, _nm("eps", 0, (i + 1) % m): one} for i in range(m)]
            out.append(("<f_i^s, eps_i+eps_(i+1)>", vecs, 0))
        else:
            for i in range(m):
                vecs = [{_nm("f", 0, i, s): one} for s in range(1, N)]
                vecs.append({_nm("eps", 0, i): one, _nm("eps", 0, (i + 1) % m): one})
                out.append((f"<f_{i}^s, eps_{i}+eps_{(i + 1) % m}>", vecs, 0))
        return out
    for el in basis:
        if el.kind in ("chi", "pi", "phi", "psi"):
            a = el.idx[0]
            if a == 0 and el.kind != "pi":
                continue
            out.append((f"<{el}>", [{el: one}], a))
    top = None
    for kind in ("chi", "phi"):
        if _nm(kind, n, 0) in basis:
            top = _nm(kind, n, 0)
    if top is not None and top.kind == "phi":
        out.append((f"<phi_{{{n},0}} + psi_{{{n},0}}>", [{top: one, _nm("psi", n, 0): one}], 0))
    if top is not None:
        out.append((f"<{top}, {'F' if n % 2 == 0 else 'E'}_{{{n},j,s}}>", [{top: one}] + [{el: one} for el in EF], 0))
    else:
        for j in range(m):
            if Es(j):
                out.append((f"<{'F' if n % 2 == 0 else 'E'}_{{{n},{j},s}}>", [{el: one} for el in Es(j)], 0))
    return out


def _restrict(M, vectors, labels):
    """Matrices of the action on the span of independent ``vectors`` (or None if not invariant)."""
    space = ColumnSpace()
    for i, v in enumerate(vectors):
        space.add(i, v)
    mats = {}
    for lab in labels:
        cols = []
        for v in vectors:
            w = M.apply(lab, v)
            sol = space.solve(w)
            if sol is None:
                return None
            cols.append(sol)
        mats[lab] = cols
    return mats


def commutant_certificate(mats, d, field):
    """Locality test for the endomorphism algebra of a module given by action matrices.

    ``mats[label][col]`` is a dict row -> coeff.  Returns a dict with the
    commutant dimension, the rank of the trace form and the verdict.
    """
    unknowns = [(r, c) for r in range(d) for c in range(d)]
    space = ColumnSpace()
    for (r, c) in unknowns:
        # T = e_{rc}; equation T X - X T = 0 for all X
        col = {}
        for lab, X in enumerate(mats.values()):
            # (T X)[r, k] = X[c, k]
            for k in range(d):
                v = X[k].get(c)
                if v:
                    col[(lab, r, k)] = col.get((lab, r, k), 0) + v
            # (X T)[i, c] = X[i, r]
            for i, v in X[r].items():
                col[(lab, i, c)] = col.get((lab, i, c), 0) - v
        space.add((r, c), clean(col))
    comm = space.kernel

    def mat(T):
        out = [[field(0)] * d for _ in range(d)]
        for (r, c), v in T.items():
            out[r][c] = v
        return out

    Ts = [mat(T) for T in comm]

    def trace_prod(A, B):
        tot = field(0)
        for i in range(d):
            for k in range(d):
                if A[i][k] and B[k][i]:
                    tot += A[i][k] * B[k][i]
        return tot

    gram = ColumnSpace()
    for a, A in enumerate(Ts):
        gram.add(a, clean({b: trace_prod(A, B) for b, B in enumerate(Ts)}))
    rank = gram.rank
    if field.char == 0:
        return {"endomorphism_dim": len(Ts), "trace_form_rank": rank,
                "local": rank == 1, "method": "trace-form radical"}
    return {"endomorphism_dim": len(Ts), "trace_form_rank": rank,
            "local": None, "method": "not certified"}


def weight_lattice_check(mats, weights):
    """Positive characteristic fallback: look for a splitting along E0-weight spaces.

    Weight spaces are linked when some basis action moves one into the other;
    more than one linked component is an invariant splitting.
    """
    d = len(weights)
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(d):
        for j in range(i + 1, d):
            if weights[i] is not None and weights[i] == weights[j]:
                parent[find(i)] = find(j)
    for X in mats.values():
        for c in range(d):
            for r in X[c]:
                parent[find(r)] = find(c)
    comps = len({find(i) for i in range(d)})
    return {"splitting_found": comps > 1, "components": comps,
            "method": "no invariant splitting found under the weight-space lattice" if comps == 1
            else "weight-space splitting"}


def decompose(L, n, certify=True):
    """Listed decomposition of HH^n, with invariance, weights, central characters and certificates."""
    M = L.module_action(n)
    field = L.field
    m, N = L.m, L.N
    raw = summand_list(m, N, n, field)
    summands = []
    refined = False
    for name, vecs, alpha in raw:
        sp = ColumnSpace()
        indep = [v for i, v in enumerate(vecs) if sp.add(i, v) is None]
        S = Summand(name, indep)
        S.expected_central = field(-alpha * m) / 2
        summands.append(S)
    # one-dimensional pieces of a scalar-acting summand are split off
    out = []
    for S in summands:
        mats = _restrict(M, S.vectors, M.labels)
        S.invariant = mats is not None
        if mats is not None and len(S.vectors) > 1 and _all_scalar(mats, len(S.vectors)):
            refined = True
            for k, v in enumerate(S.vectors):
                T = Summand("<" + " + ".join(str(el) for el in sorted(v)) + ">", [v])
                T.expected_central = S.expected_central
                T.invariant = True
                out.append(T)
        else:
            out.append(S)
    for S in out:
        mats = _restrict(M, S.vectors, M.labels)
        S.invariant = mats is not None
        if mats is None:
            continue
        d = len(S.vectors)
        C = mats["C"]
        lam = C[0].get(0, field(0))
        scalar = all(C[k] == ({k: lam} if lam else {}) for k in range(d))
        S.central_character = lam if scalar else None
        S.weights = []
        for k, v in enumerate(S.vectors):
            col = mats["E0"][k]
            S.weights.append(col.get(k, field(0)) if set(col) <= {k} else None)
        if certify:
            S.certificate = commutant_certificate(mats, d, field)
            if field.char != 0:
                S.certificate["weight_lattice"] = weight_lattice_check(mats, S.weights)
    sp = ColumnSpace()
    total = 0
    for S in out:
        for v in S.vectors:
            sp.add(total, v)
            total += 1
    report = {
        "degree": n,
        "dimension": M.dim,
        "summands": out,
        "direct": sp.rank == total,
        "spans": sp.rank == M.dim,
        "refined": refined,
    }
    report["ok"] = (report["direct"] and report["spans"]
                    and all(S.invariant for S in out)
                    and all(S.central_character == S.expected_central for S in out)
                    and (not certify or all(_certified(S.certificate, field) for S in out)))
    return report


def _certified(cert, field):
    if field.char == 0:
        return cert["local"]
    return not cert["weight_lattice"]["splitting_found"]


def trivial_summands(report):
    """Names of summands on which every basis element of HH^1 acts by zero."""
    out = []
    for S in report["summands"]:
        if S.central_character == 0 and all(w == 0 for w in S.weights) and len(S.vectors) == 1:
            out.append(S)
    return out


def large_summand_structure(L, n):
    """For the summand <phi_{n,0}, E_{n,j,s}> (or <chi_{n,0}, F_{n,j,s}>).

    Returns None when the degree has no such summand; otherwise reports whether
    the top element generates it, whether the E/F span is an invariant
    hyperplane with no invariant complement, and whether E_{1,j,1} raises weights
    by one.
    """
    M = L.module_action(n)
    field = L.field
    one = field(1)
    top = None
    for kind in ("chi", "phi"):
        el = Named(kind, n, (0,))
        if el in M.basis:
            top = el
    if top is None:
        return None
    lower = [el for el in M.basis if el.kind in ("E", "F")]
    gen = M.submodule_generated([{top: one}])
    span = ColumnSpace()
    for i, el in enumerate([top] + lower):
        span.add(i, {el: one})
    cyclic = len(gen) == 1 + len(lower) and all(span.contains(v) for v in gen)
    low = ColumnSpace()
    for el in lower:
        low.add(el, {el: one})
    invariant = all(low.contains(M.apply(lab, {el: one})) for lab in M.labels for el in lower)
    wt = lambda el: M.act["E0"][el].get(el, field(0))
    # an invariant complement is an E0-eigenline top + (lower part); when no
    # lower vector shares the weight of top, that line is <top> itself
    if not lower:
        complement_free = True
    elif all(wt(el) != wt(top) for el in lower):
        line = ColumnSpace()
        line.add(0, {top: one})
        complement_free = any(not line.contains(M.apply(lab, {top: one})) for lab in M.labels)
    else:
        complement_free = None
    raises = True
    for lab in M.labels[2:]:
        if lab.idx[1] != 1:
            continue
        for el in [top] + lower:
            img = M.apply(lab, {el: one})
            if any(wt(k) != wt(el) + 1 for k in img):
                raises = False
    return {"degree": n, "top": str(top), "dim": 1 + len(lower), "cyclic": cyclic,
            "lower_invariant": invariant, "complement_free": complement_free,
            "raises_weight": raises}


def _all_scalar(mats, d):
    for X in mats.values():
        lam = X[0].get(0, 0)
        for k in range(d):
            if X[k] != ({k: lam} if lam else {}):
                return False
    return True


def hh0_dependency(alg):
    """Check sum_j (-1)^j (eps_j + eps_{j+1}) = 0 (m even) as central elements."""
    tot = alg.zero()
    for j in range(alg.m):
        tot = tot + (alg.eps(j) + alg.eps((j + 1) % alg.m)) * ((-1) ** j)
    return not tot
