import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(num=20, den=12, nonzero=False):
    s = st.builds(Fraction, st.integers(-num, num), st.integers(1, den))
    return s.filter(bool) if nonzero else s


def q_values(den=8):
    return st.integers(2, den).flatmap(lambda d: st.builds(Fraction, st.integers(1, d - 1), st.just(d)))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
