from __future__ import annotations

import shared


def pytest_terminal_summary(terminalreporter):
    if not shared.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(shared.RESULTS, key=lambda k: int(k[2:])):
        terminalreporter.write_line(shared.RESULTS[key])
