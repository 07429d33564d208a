from functools import lru_cache

import pytest

from biserial_hh.report import Engine


@lru_cache(maxsize=None)
def engine(m, N, char=0):
    return Engine(m, N, char)


@pytest.fixture
def get_engine():
    return engine


# acceptance results: criterion number -> {config: (ok, detail)}
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        runs = ACCEPTANCE[k]
        failed = [f"A({cfg[0]},{cfg[1]}): {detail}" for cfg, (ok, detail) in sorted(runs.items()) if not ok]
        tag = "FAIL" if failed else "PASS"
        line = f"{tag} criterion {k:2d} {CRITERIA[k][0]} ({len(runs) - len(failed)}/{len(runs)} configs)"
        terminalreporter.write_line(line)
        for f in failed:
            terminalreporter.write_line(f"       {f}")
