import pytest

ACCEPTANCE = {
    1: "Frobenius form unique on every model",
    2: "radical bases vanish in the row models",
    3: "M2+ multiplication table reproduced",
    4: "H(M3) multiplication table reproduced",
    5: "M2+ generator trace equations",
    6: "derived axis switch",
    7: "axis identities on every ordered pair",
    8: "Miyamoto involutions",
    9: "generic simplicity",
    10: "quotient form invariance",
}

_outcomes: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): test belongs to acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n:2d} NOT RUN  {ACCEPTANCE[n]}")
            continue
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n:2d} {status}  {ACCEPTANCE[n]} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
