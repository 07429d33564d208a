"""JSON reports, table emission/diffing and the verification suite."""

import json

from .algebra import Algebra
from .cohomology import Cohomology, HClass, Named, unit
from .gerstenhaber import Gerstenhaber, InconsistentSystem, LiftingError
from .lie import LieStructure, hh0_dependency, large_summand_structure, trivial_summands
from .linalg import axpy
from .resolution import g_degree, g_expand, word_degree, word_target
from . import tables

SCHEMA = 1
EIGEN_COLUMNS = ["phi", "psi", "phi+psi", "phi-psi"]


class SchemaMismatch(ValueError):
    pass


def emit(report):
    """Deterministic JSON text for a report."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text):
    return json.loads(text)


class Engine:
    """All computational handles for one (m, N, char)."""

    def __init__(self, m, N, char=0):
        self.alg = Algebra(m, N, char)
        self.H = Cohomology(self.alg)
        self.G = Gerstenhaber(self.H)
        self.L = LieStructure(self.G)
        self.field = self.alg.field
        self.m, self.N, self.char = m, N, self.field.char

    def s(self, x):
        return self.field.to_str(x)

    def header(self, kind, n_max=None):
        out = {"schema": SCHEMA, "kind": kind, "m": self.m, "N": self.N, "char": self.char}
        if n_max is not None:
            out["n_max"] = n_max
        return out

    def coords(self, cls):
        return cls.to_json(self.field) if cls is not None else {}


def default_n_max(m):
    return max(2 * m + 2, 14)


# -- tables ------------------------------------------------------------------

def eigen_table(E, n_max, expected=False):
    """Table 1 (m even) or Table 2 (m odd): the four eigenvalue columns."""
    out = E.header("table", n_max)
    out["table"] = 1 if E.m % 2 == 0 else 2
    out["columns"] = list(EIGEN_COLUMNS)
    out["source"] = "formulas" if expected else "computed"
    rows = []
    for n in range(n_max + 1):
        if expected:
            pairs = [(el, tables.expected_eigenvalues(E.m, E.N, el)) for el in E.H.index_set(n)]
        else:
            pairs = E.G.eigenvalue_table(n)
        for el, ev in pairs:
            rows.append({"row": str(el), "degree": n,
                         "cells": {c: E.s(E.field(v)) for c, v in zip(EIGEN_COLUMNS, ev)}})
    out["rows"] = rows
    return out


def E_table(E, n_max, expected=False, reverse=False):
    """Table 3: [E_{1,j,s}, x] for every named basis element x of degree <= n_max."""
    out = E.header("table", n_max)
    out["table"] = 3
    out["columns"] = None
    out["source"] = "formulas" if expected else "computed"
    rows = []
    for j in range(E.m):
        for s in range(1, E.N):
            Ejs = Named("E", 1, (j, s))
            for n in range(n_max + 1):
                for el in E.H.index_set(n):
                    if expected:
                        val = HClass(n, tables.expected_E_bracket(E.m, E.N, j, s, el))
                    else:
                        val = E.G.bracket_deg1(unit(Ejs), unit(el), reverse=reverse)
                    rows.append({"row": f"[{Ejs}, {el}]", "degree": n, "cells": E.coords(val)})
    out["rows"] = rows
    return out


def diff_tables(computed, expected):
    """Exact cell-by-cell comparison.  Missing cells count as ``"0"`` for bracket tables."""
    for key in ("schema", "table", "columns"):
        if computed.get(key) != expected.get(key):
            raise SchemaMismatch(f"field {key!r} differs: {computed.get(key)!r} vs {expected.get(key)!r}")
    sparse = computed.get("columns") is None
    crow = {r["row"]: r["cells"] for r in computed["rows"]}
    erow = {r["row"]: r["cells"] for r in expected["rows"]}
    out = []
    for name in list(crow) + [r for r in erow if r not in crow]:
        if name not in erow or name not in crow:
            out.append({"row": name, "column": None,
                        "computed": "present" if name in crow else "missing",
                        "expected": "present" if name in erow else "missing"})
            continue
        a, b = crow[name], erow[name]
        cols = sorted(set(a) | set(b)) if sparse else computed["columns"]
        for c in cols:
            x, y = a.get(c, "0" if sparse else None), b.get(c, "0" if sparse else None)
            if x != y:
                out.append({"row": name, "column": c, "computed": x, "expected": y})
    return out


# -- individual reports ----------------------------------------------------------

def _check(name, ok, detail=None):
    return {"name": name, "ok": bool(ok), "detail": detail}


def algebra_report(E):
    alg = E.alg
    basis = alg.basis
    center = alg.center_basis()
    out = E.header("algebra")
    out["dimension"] = len(basis)
    out["basis"] = [{"source": p.src, "word": p.word} for p in basis]
    out["center"] = [{"name": name + (str(idx) if idx else ""), "element": z.to_json()}
                     for name, idx, z in center]
    noncentral = [name + str(idx) for name, idx, z in center if not alg.is_central(z)]
    out["checks"] = [
        _check("dimension is 4mN", len(basis) == 4 * E.m * E.N, len(basis)),
        _check("center basis elements are central", not noncentral, noncentral or None),
        _check("center count is 1 + m + m(N-1)", len(center) == 1 + E.m + E.m * (E.N - 1), len(center)),
    ]
    return out


def resolution_checks(E, n_max):
    res = E.H.res
    bad = res.verify_complex(n_max)
    checks = [_check("d d = 0", bad is None, None if bad is None else str(bad))]
    wrong = []
    for n in range(min(n_max, 8) + 1):
        for r in range(n + 1):
            for i in range(E.m):
                g = (n, r, i)
                want = (g_degree(n, r, E.N, "d"), g_degree(n, r, E.N, "dbar"))
                for (src, w), _ in g_expand(E.m, E.N, n, r, i).items():
                    if word_degree(w) != want or word_target(E.m, src, w) != (i + n - 2 * r) % E.m:
                        wrong.append(str(g))
                        break
    checks.append(_check("closed-form degrees match expansions (n <= 8)", not wrong, wrong[:1] or None))
    if E.N == 1:
        gens = [g for n in range(1, min(n_max, 8) + 1) for g in res.gens(n)]
        diff = [str(g) for g in gens if res.differential(g) != res.four_term_differential(g)]
        checks.append(_check("N = 1 four-term differential", not diff, diff[:1] or None))
    return checks


def cohomology_report(E, n_max):
    H = E.H
    out = E.header("cohomology", n_max)
    degrees = []
    checks = []
    for n in range(n_max + 1):
        rep = H.verify_named_basis(n)
        degrees.append({"degree": n, "dimension": rep["dimension"],
                        "basis": [str(el) for el in H.index_set(n)]})
        checks.append(_check(f"named basis of HH^{n}", rep["ok"],
                             None if rep["ok"] else {k: rep[k] for k in ("not_cocycles", "dependent", "dimension", "named_count")}))
    out["degrees"] = degrees
    hh0 = H.hh_dimension(0)
    checks.append(_check("dim HH^0 = 1 + m + m(N-1)", hh0 == 1 + E.m + E.m * (E.N - 1), hh0))
    out["checks"] = checks
    return out


def table_checks(E, n_max):
    checks = []
    t = diff_tables(eigen_table(E, n_max), eigen_table(E, n_max, expected=True))
    checks.append(_check(f"table {1 if E.m % 2 == 0 else 2} eigenvalues", not t, t[:1] or None))
    t3 = diff_tables(E_table(E, n_max), E_table(E, n_max, expected=True))
    checks.append(_check("table 3 brackets with E_(1,j,s)", not t3, t3[:1] or None))
    bad = []
    for n in range(n_max + 1):
        ev = dict(E.G.eigenvalue_table(n))
        for el in E.H.index_set(n):
            for k, which in ((0, "phi"), (1, "psi")):
                direct = E.G.bracket_deg1(unit(Named(which, 1, (0,))), unit(el))
                if direct != unit(el) * ev[el][k]:
                    bad.append(f"[{which}_(1,0), {el}]")
    checks.append(_check("lifting route agrees with the Euler route", not bad, bad[:1] or None))
    return checks


def cup_report(E, n_max):
    out = E.header("cup", n_max)
    rows = []
    for label, x, y, expected in tables.cup_identities(E.m, E.N, n_max):
        got = E.G.cup(x, y)
        want = HClass(got.n, expected)
        rows.append({"identity": label, "x": str(x), "y": str(y),
                     "computed": E.coords(got), "expected": E.coords(want), "ok": got == want})
    out["identities"] = rows
    bad = [r["identity"] for r in rows if not r["ok"]]
    out["checks"] = [_check("cup identities", not bad, bad[:1] or None)]
    # graded commutativity through the two lifting routes
    gens = tables.bracket_generators(E.m, E.N) + [Named("phi", 1, (0,)), Named("psi", 1, (0,))]
    comm = []
    for x in gens:
        for y in gens:
            if x.n + y.n > n_max or x.n == 0 or y.n == 0:
                continue
            a = E.G.cup(x, y)
            b = E.G.cup(x, y, route="left")
            c = E.G.cup(y, x) * ((-1) ** ((x.n * y.n) % 2))
            if a != b or a != c:
                comm.append(f"{x} {y}")
    out["checks"].append(_check("graded commutativity of cup products", not comm, comm[:1] or None))
    return out


def brackets_report(E, n_max=None):
    out = E.header("brackets", n_max)
    gens = tables.bracket_generators(E.m, E.N)
    checks = []
    rows = []
    try:
        R = E.G.poisson_solve(gens)
    except InconsistentSystem as exc:
        out["brackets"] = []
        out["checks"] = [_check("Poisson and Jacobi system consistent", False, str(exc))]
        return out
    for (x, y), val in sorted(R.values.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
        want = HClass(val.n, tables.expected_generator_bracket(E.m, E.N, x, y))
        rows.append({"x": str(x), "y": str(y), "computed": E.coords(val),
                     "expected": E.coords(want), "ok": val == want})
    out["brackets"] = rows
    out["undetermined"] = [f"[{x}, {y}]" for x, y in R.undetermined]
    checks.append(_check("Poisson and Jacobi system consistent", True, R.n_instances))
    checks.append(_check("every generator bracket determined", not R.undetermined, out["undetermined"][:1] or None))
    bad = [f"[{r['x']}, {r['y']}]" for r in rows if not r["ok"]]
    checks.append(_check("generator brackets match the listed values", not bad, bad[:1] or None))
    # second route: degree one brackets become unknowns and must come out as lifted
    try:
        R2 = E.G.poisson_solve(gens, known_deg1=False)
        incons = [f"[{x}, {y}]" for (x, y), v in R2.values.items()
                  if (x.n == 1 or y.n == 1) and E.G.bracket(unit(x), unit(y)) != v]
        incons += [f"[{x}, {y}]" for (x, y), v in R2.values.items() if (x, y) in R.values and R[(x, y)] != v]
        checks.append(_check("solver agrees with direct liftings", not incons, incons[:1] or None))
    except InconsistentSystem as exc:
        checks.append(_check("solver agrees with direct liftings", False, str(exc)))
    out["checks"] = checks
    return out


def axiom_checks(E, n_max):
    """Antisymmetry and Jacobi on HH^1 acting on HH^n, plus antisymmetry inside HH^1."""
    L = E.L
    pres = L.hh1_presentation()
    checks = [_check("antisymmetry on HH^1", pres.check_antisymmetry() is None),
              _check("Jacobi on HH^1", pres.check_jacobi() is None)]
    bad = None
    for n in range(n_max + 1):
        M = L.module_action(n)
        fail = M.check_representation(pres)
        if fail:
            bad = (n, [str(x) for x in fail])
            break
    checks.append(_check("Jacobi with two degree one entries (representation property)", bad is None, bad))
    # Poisson: [x, yz] = [x, y] z + y [x, z] for x in HH^1 and generators y, z
    G = E.G
    gens = [g for g in tables.bracket_generators(E.m, E.N) if g.n > 0]
    gens += [Named("phi", 1, (0,)), Named("psi", 1, (0,))]
    bad = []
    for x in E.H.index_set(1):
        ux = unit(x)
        for y in gens:
            for z in gens:
                if y.n + z.n > n_max:
                    continue
                lhs = G.bracket_deg1(ux, G.cup(y, z))
                rhs = G.cup(G.bracket_deg1(ux, unit(y)), unit(z)) + G.cup(unit(y), G.bracket_deg1(ux, unit(z)))
                if lhs != rhs:
                    bad.append(f"[{x}, {y} {z}]")
    checks.append(_check("Poisson with a degree one entry", not bad, bad[:1] or None))
    return checks


def lie_report(E, n_max, certify=True):
    L = E.L
    out = E.header("lie", n_max)
    pres = L.hh1_presentation()
    out["basis"] = [str(x) for x in pres.labels]
    out["structure_constants"] = [
        {"x": str(a), "y": str(b), "value": {str(k): E.s(v) for k, v in val.items()}}
        for (a, b), val in pres.table.items() if val
    ]
    center = pres.center()
    out["center"] = [{str(k): E.s(v) for k, v in vec.items()} for vec in center]
    series = pres.derived_series()
    out["derived_series"] = series
    emb = L.verify_embedding()
    out["embedding"] = emb
    checks = []
    # expected structure constants
    wrong = []
    one = E.field(1)
    for a in pres.labels:
        for b in pres.labels:
            got = pres.bracket({a: one}, {b: one})
            want = _expected_hh1_bracket(E.N, a, b)
            if axpy(dict(got), -1, want):
                wrong.append(f"[{a}, {b}]")
    checks.append(_check("structure constants", not wrong, wrong[:1] or None))
    want_center = 1 if E.N >= 2 else 2
    has_C = any(set(v) == {"C"} for v in center) or E.N == 1
    checks.append(_check("center", len(center) == want_center and has_C, len(center)))
    steps = len(series) - 1
    checks.append(_check("solvable with derived length at most floor(N/2) + 1",
                         series[-1] == 0 and steps <= E.N // 2 + 1, series))
    first = _derived_excludes_C(pres)
    checks.append(_check("first derived subalgebra excludes C", first))
    checks.append(_check("embedding into <c> + a_(N-1)^m", emb["ok"], emb["failures"][:1] or None))
    if E.m % 2 == 0:
        checks.append(_check("HH^0 dependency sum (-1)^j (eps_j + eps_(j+1)) = 0", hh0_dependency(E.alg)))
    decs = []
    for n in range(n_max + 1):
        rep = L.decompose(n, certify=certify)
        decs.append({"degree": n, "dimension": rep["dimension"], "refined": rep["refined"],
                     "summands": [S.to_json(E.field) for S in rep["summands"]]})
        detail = None
        if not rep["ok"]:
            bad = [S.name for S in rep["summands"]
                   if not S.invariant or S.central_character != S.expected_central
                   or (S.certificate and S.certificate.get("local") is False)]
            detail = {"direct": rep["direct"], "spans": rep["spans"], "summands": bad}
        checks.append(_check(f"decomposition of HH^{n}", rep["ok"], detail))
        if n >= 1:
            triv = [S.name for S in trivial_summands(rep)]
            allowed = {"<pi_{2,0}>", "<phi_{1,0} + psi_{1,0}>"}
            if E.N == 1:
                # HH^1 is abelian, so it is a trivial module over itself
                allowed.add("<phi_{1,0}, E_{1,j,s}>")
            checks.append(_check(f"trivial one-dimensional summands of HH^{n}",
                                 set(triv) <= allowed and (n != 2 or "<pi_{2,0}>" in triv), triv or None))
        big = large_summand_structure(L, n)
        if big is not None:
            ok = big["cyclic"] and big["lower_invariant"] and big["raises_weight"]
            # equal weights: leave complement-freeness to the locality certificate
            ok = ok and big["complement_free"] is not False
            checks.append(_check(f"large summand of HH^{n}", ok, None if ok else big))
    out["decompositions"] = decs
    out["checks"] = checks
    return out


def _expected_hh1_bracket(N, a, b):
    """[a, b] in the basis {C, E0, E_{1,j,s}} from the closed form."""
    if a == "C" or b == "C" or a == b:
        return {}
    if a == "E0":
        return {b: b.idx[1]}
    if b == "E0":
        return {a: -a.idx[1]}
    (j, s), (i, r) = a.idx, b.idx
    if i != j or s + r > N - 1:
        return {}
    return {Named("E", 1, (j, s + r)): r - s} if r != s else {}


def _derived_excludes_C(pres):
    one = pres.field(1)
    for a in pres.labels:
        for b in pres.labels:
            if pres.bracket({a: one}, {b: one}).get("C"):
                return False
    return True


def independence_checks(E, n_top=6):
    """Two pivot orders give the same induced maps on HH^n, n <= n_top."""
    bad = []
    ders = [Named("phi", 1, (0,)), Named("psi", 1, (0,))]
    ders += [Named("E", 1, (j, s)) for j in range(E.m) for s in range(1, E.N)]
    for x in ders:
        for n in range(n_top + 1):
            for el in E.H.index_set(n):
                a = E.G.bracket_deg1(unit(x), unit(el))
                b = E.G.bracket_deg1(unit(x), unit(el), reverse=True)
                if a != b:
                    bad.append(f"[{x}, {el}]")
    return [_check(f"lifting independence of pivot order (n <= {n_top})", not bad, bad[:1] or None)]


def verify_all(E, n_max):
    out = E.header("verify-all", n_max)
    sections = {}
    sections["algebra"] = algebra_report(E)["checks"]
    sections["resolution"] = resolution_checks(E, n_max)
    sections["cohomology"] = cohomology_report(E, n_max)["checks"]
    sections["tables"] = table_checks(E, n_max)
    sections["cup"] = cup_report(E, n_max)["checks"]
    sections["brackets"] = brackets_report(E, n_max)["checks"]
    sections["axioms"] = axiom_checks(E, n_max)
    sections["lie"] = lie_report(E, n_max)["checks"]
    sections["independence"] = independence_checks(E, min(6, n_max))
    out["sections"] = sections
    out["ok"] = all(c["ok"] for cs in sections.values() for c in cs)
    return out


def first_failure(report):
    """First failing check of a report (``checks`` or ``sections``), or None."""
    groups = report.get("sections") or {"": report.get("checks", [])}
    for sec, checks in groups.items():
        for c in checks:
            if not c["ok"]:
                return (sec, c)
    return None


__all__ = [
    "Engine", "SCHEMA", "emit", "parse", "eigen_table", "E_table", "diff_tables", "SchemaMismatch",
    "algebra_report", "cohomology_report", "cup_report", "brackets_report", "lie_report",
    "verify_all", "first_failure", "default_n_max", "LiftingError",
]
