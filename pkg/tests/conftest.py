import random

import pytest
from hypothesis import settings, strategies as st

from e8bracket import _matrix as mx
from e8bracket.analysis import build_structure_table
from e8bracket.octonion import Octonion

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(mx.Rational, st.integers(-12, 12), st.integers(1, 6))
octonions = st.lists(rationals, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


def random_rationals(rng: random.Random, n: int) -> list:
    return [mx.Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]


@pytest.fixture(scope="session")
def tables():
    """Structure tables, built once per session (lru-cached underneath)."""
    return build_structure_table


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
