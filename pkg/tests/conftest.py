from __future__ import annotations

from hypothesis import settings, strategies as st

from twistrep.rings import Cyclotomic, Laurent, LaurentPoly

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

L = Laurent()
C10 = Cyclotomic(10)

laurent_polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
cyc10 = st.lists(st.integers(-4, 4), min_size=4, max_size=4).map(lambda c: C10(LaurentPoly(dict(enumerate(c)))))


def free_words(rank: int, max_len: int = 8):
    letters = st.sampled_from([i for i in range(-rank, rank + 1) if i])
    return st.lists(letters, max_size=max_len).map(tuple)


def braid_letters(strands: int, max_len: int = 6):
    letters = st.sampled_from([i for i in range(1 - strands, strands) if i])
    return st.lists(letters, max_size=max_len).map(tuple)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
