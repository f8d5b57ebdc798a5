import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wiremonoids.chips import Chip, Matching  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def matchings(n):
    def build(perm):
        return Matching.from_blocks(n, [(perm[2 * j], perm[2 * j + 1]) for j in range(n)])

    return st.permutations(range(2 * n)).map(build)


def chips(n, max_circles=5):
    return st.builds(Chip, matchings(n), st.integers(0, max_circles))


def chip_tuples(k, min_degree=1, max_degree=6):
    """k chips sharing one random degree."""
    return st.integers(min_degree, max_degree).flatmap(lambda n: st.tuples(*[chips(n)] * k))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
