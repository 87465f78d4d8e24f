import itertools
import sys

import pytest

from srdpoly.core import Element, Mode, SignedSeq


def naive_signed(n, mode=Mode.CLASSICAL):
    """All signed arrangements by itertools, independent of the pruned walker."""
    values = range(1, n + 1)
    for perm in itertools.permutations(values):
        for bars in itertools.product((False, True), repeat=n):
            entries = tuple(Element(v, b) for v, b in zip(perm, bars))
            if mode is Mode.GAMMA:
                entries = (Element(0),) + entries
            yield SignedSeq(entries, mode)


def seq(text, mode=Mode.CLASSICAL):
    return SignedSeq.parse(text, mode)


@pytest.fixture
def parse():
    return seq


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.LINES:
            terminalreporter.write_line(line)
