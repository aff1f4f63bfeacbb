import time

import pytest

from findual.cli import run
from findual.suites import run_suite

# (criterion, suite, overrides, time limit in seconds)
CRITERIA = [
    (1, "ultrafilters", dict(max_atoms=4), 1),
    (2, "axioms", dict(max_atoms=4), 5),
    (3, "atom-determinacy", dict(max_atoms=3), 30),
    (4, "clusters", dict(max_atoms=4), 5),
    (5, "transform", dict(max_atoms=2), 10),
    (6, "omega", dict(max_atoms=3), 10),
    (7, "rc-calculus", dict(max_points=3), 60),
    (8, "t4-lemma", dict(max_points=3), 60),
    (9, "framework", dict(), 10),
    (10, "pipelines", dict(max_atoms=2, max_points=3), 30),
]


def _verdict(capsys, number, name, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    with capsys.disabled():
        print(f"\n{status} criterion {number} {name}: {elapsed:.2f}s (limit {limit}s){detail}")
    return status


@pytest.mark.parametrize("number,suite,kw,limit", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(capsys, number, suite, kw, limit):
    start = time.perf_counter()
    rep = run_suite(suite, seed=0, **kw)
    elapsed = time.perf_counter() - start
    failures = rep.failures()
    detail = f", {len(rep.findings)} checks, {len(failures)} failed"
    if failures:
        detail += f", first: {failures[0].line()}"
    status = _verdict(capsys, number, suite, rep.ok, elapsed, limit, detail)
    assert rep.findings
    assert status == "PASS", detail


def test_criterion_11_survey(capsys):
    start = time.perf_counter()
    code, out = run("survey-normal", ["4"])
    elapsed = time.perf_counter() - start
    lines = out.splitlines()
    # table rows: relation, C1..C6, verdict; then one report line per relation
    rows = [r for r in (line.split("\t") for line in lines[1:]) if len(r) == 8]
    consistent = all((r[7] == "normal") == all(v == "y" for v in r[1:7]) for r in rows)
    normal = [r[0] for r in rows if r[7] == "normal"]
    fails = [line for line in lines if "\tFAIL" in line]
    ok = code == 0 and consistent and not fails and normal == ["4at[]"] and len(rows) == 64
    detail = f", {len(rows)} relations, normal: {' '.join(normal)}"
    status = _verdict(capsys, 11, "survey-normal", ok, elapsed, 10, detail)
    assert status == "PASS", out
