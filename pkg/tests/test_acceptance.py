"""Acceptance criteria at desk scale.

Every (m, N) with m in 3..6 and N in 1..3 runs the full verify-all report once,
in characteristic 0 with n up to max(2m + 2, 14). Each criterion picks out its
checks from that report. A PASS/FAIL line per criterion is printed in the
terminal summary.
"""

from functools import lru_cache

import pytest

from biserial_hh.report import default_n_max, verify_all

from conftest import ACCEPTANCE, engine

DESK = [(m, N) for m in (3, 4, 5, 6) for N in (1, 2, 3)]

# criterion -> (title, [(section, check-name prefix), ...])
CRITERIA = {
    1: ("resolution exactness", [("resolution", "d d = 0")]),
    2: ("degree formulas vs expansions", [("resolution", "closed-form degrees")]),
    3: ("HH dimensions", [("cohomology", "named basis"), ("cohomology", "dim HH^0"),
                          ("algebra", "center count")]),
    4: ("eigenvalue tables", [("tables", "table 1 eigenvalues"), ("tables", "table 2 eigenvalues")]),
    5: ("brackets with E_(1,j,s)", [("tables", "table 3")]),
    6: ("two-route consistency", [("tables", "lifting route agrees")]),
    7: ("cup table", [("cup", "")]),
    8: ("generator brackets", [("brackets", "")]),
    9: ("Gerstenhaber axioms", [("axioms", ""), ("brackets", "Poisson and Jacobi")]),
    10: ("Lie structure", [("lie", "structure constants"), ("lie", "center"), ("lie", "solvable"),
                           ("lie", "first derived"), ("lie", "embedding")]),
    11: ("decompositions", [("lie", "decomposition"), ("lie", "trivial"), ("lie", "large summand"),
                            ("lie", "HH^0 dependency")]),
    12: ("pivot-order independence", [("independence", "")]),
}

# N = 1, m even: three cup products and three generator brackets differ from the
# published lists (the long factors have length one, so products reach the socle).
# The checks run unchanged and are expected to fail here.
GAPS = {7: {(4, 1), (6, 1)}, 8: {(4, 1), (6, 1)}}


@lru_cache(maxsize=None)
def report(m, N):
    return verify_all(engine(m, N), default_n_max(m))


def selected(rep, k):
    out = []
    for sec, prefix in CRITERIA[k][1]:
        out += [c for c in rep["sections"][sec] if c["name"].startswith(prefix)]
    return out


def cases():
    for k in CRITERIA:
        for m, N in DESK:
            marks = []
            if (m, N) in GAPS.get(k, ()):
                marks.append(pytest.mark.xfail(strict=True, reason="N = 1, m even differs from the published list"))
            yield pytest.param(k, m, N, marks=marks, id=f"c{k}-m{m}-N{N}")


@pytest.mark.parametrize("k,m,N", list(cases()))
def test_criterion(k, m, N):
    checks = selected(report(m, N), k)
    assert checks, "no checks selected"
    failed = [f"{c['name']}: {c['detail']}" for c in checks if not c["ok"]]
    ACCEPTANCE.setdefault(k, {})[(m, N)] = (not failed, "; ".join(failed))
    assert not failed, failed


def test_every_check_is_assigned():
    # no check in verify-all escapes the criteria
    rep = report(4, 2)
    assigned = {id(c) for k in CRITERIA for c in selected(rep, k)}
    loose = [f"{sec}: {c['name']}" for sec, cs in rep["sections"].items() for c in cs
             if id(c) not in assigned]
    assert set(loose) <= {"cup: graded commutativity of cup products", "lie: derived series",
                          "algebra: dimension is 4mN", "algebra: center basis elements are central",
                          "resolution: N = 1 four-term differential"}
