import random

import pytest

from leavitt_lab import ZZ, Zmod, canonicalize

Z2 = Zmod(2)


def z2_example():
    """The coefficient-free unitary over Z/2 that is not a table unitary."""
    rows = {"aa": ("ab", "ba", "bb"), "ab": ("aa", "ba", "bb"), "ba": ("aa", "ab", "bb"), "bb": ("aa", "ab", "ba")}
    return canonicalize(Z2, [(1, alpha, beta) for beta, alphas in rows.items() for alpha in alphas])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def u_z2():
    return z2_example()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
