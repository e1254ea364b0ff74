from fractions import Fraction

from hypothesis import strategies as st

positive_rationals = st.builds(Fraction, st.integers(1, 40), st.integers(1, 9))
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 9))


def distinct_positive(k):
    return st.lists(positive_rationals, min_size=k, max_size=k, unique=True).map(tuple)


def positive_tuple(k):
    return st.lists(positive_rationals, min_size=k, max_size=k).map(tuple)


# criterion lines recorded by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
