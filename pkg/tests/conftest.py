from collections import defaultdict

import pytest

CRITERIA = {
    1: "I(S_n) equals the closed form, n <= 10 (exact)",
    2: "B(S_n) and H(S_n) equal the closed form, n <= 8 (exact)",
    3: "I(A_n) equals the closed form, n <= 9 (exact)",
    4: "B(A_n), H(A_n) in range and exact where known, n <= 8; (8,3) resolved",
    5: "enumerated stabilizer orders equal partition orders (zero discrepancies)",
    6: "every construction passes its claim over the swept ranges",
    7: "b <= B <= H <= I and I(S_n) <= longest subgroup chain",
    8: "one-part-per-step chains keep parts divisible by gcd(n, k)",
    9: "independent power-set families with sizes in [2, n-2] have size <= n-2",
    10: "independent 2-uniform families are forests, n <= 7",
    11: "brute force agrees with the pruned engine on small instances",
}

_outcomes = defaultdict(list)


def _criterion(item):
    mark = item.get_closest_marker("criterion")
    return mark.args[0] if mark else None


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    c = _criterion(item)
    if c is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[c].append((item.name, rep.passed, rep.skipped))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for c in sorted(CRITERIA):
        runs = _outcomes.get(c)
        if not runs:
            tr.write_line(f"criterion {c:2d}: NOT RUN  {CRITERIA[c]}")
            continue
        failed = [name for name, ok, skipped in runs if not ok and not skipped]
        verdict = "FAIL" if failed else "PASS"
        tr.write_line(f"criterion {c:2d}: {verdict}  {CRITERIA[c]} [{len(runs) - len(failed)}/{len(runs)} checks]")
        for name in failed:
            tr.write_line(f"               failed: {name}")
