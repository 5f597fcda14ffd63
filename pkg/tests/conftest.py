import random

import pytest

from chordex.chord import ChordDiagram, random_diagram

# Filled by tests/test_acceptance.py; printed at the end of the run.
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split(".")[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def c2():
    return ChordDiagram(4, [(1, 3), (2, 4)])


def random_diagrams(seed, count, max_chords, max_isolated=2):
    rng = random.Random(seed)
    return [random_diagram(rng, rng.randint(1, max_chords), rng.randint(0, max_isolated)) for _ in range(count)]
