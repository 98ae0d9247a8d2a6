import random
import re

import pytest
from hypothesis import settings

from glweight.diagrams import chord_to_perm, make_kn
from glweight.engine import WeightSystem

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ws():
    """One evaluator shared by the whole run so K_n values are computed once."""
    return WeightSystem()


@pytest.fixture(scope="session")
def kn_values(ws):
    return {n: ws(chord_to_perm(make_kn(n))) for n in range(1, 8)}


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240611)


# -- acceptance summary: one line per criterion ------------------------------

CRITERIA = {
    1: "w_GL(K_n) C-basis table, n = 2..7, with runtime targets",
    2: "w_GL(K_n) p-basis table, n = 2..7",
    3: "wbar(K_n) C- and p-basis tables, n = 2..7",
    4: "phi(C_1..C_4) list",
    5: "worked examples via the recursion",
    6: "oracle equivalence, S_m m <= 5, N = 2, 3, plus 50 random S_6",
    7: "centrality of direct sums, m <= 4, N = 2, 3",
    8: "Harish-Chandra consistency at random weights",
    9: "property suites",
    10: "Hopf structure: EGF vs partitions, primitivity",
}
_criterion_results: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if not m:
        return
    crit = int(m.group(1))
    ok = _criterion_results.setdefault(crit, {"failed": [], "ran": 0})
    if report.when == "call":
        ok["ran"] += 1
    if report.failed:
        ok["failed"].append(report.nodeid.split("::", 1)[1])


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(CRITERIA):
        res = _criterion_results.get(crit)
        if res is None:
            continue
        status = "PASS" if not res["failed"] and res["ran"] else "FAIL"
        line = f"criterion {crit:2d}: {status}  {CRITERIA[crit]}"
        if res["failed"]:
            line += "  [failed: " + ", ".join(res["failed"]) + "]"
        tr.write_line(line)
