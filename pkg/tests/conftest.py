import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.EVALUATED:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.EVALUATED):
        terminalreporter.write_line(mod.summary_line(k, mod.EVALUATED[k]))
