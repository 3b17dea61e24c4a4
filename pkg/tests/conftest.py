from pathlib import Path

from hypothesis import settings

# exact big-integer oracles are slow on large v; timing is checked by the acceptance suite instead
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

GOLDEN = Path(__file__).parent / "golden" / "eliminate.jsonl"
_LINES: list[str] = []


def report(n: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    _LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)
