from fractions import Fraction

from hypothesis import strategies as st

from avgiv.alphabet import make_alphabet
from avgiv.exact import make_exact

RADICANDS = (2, 3, 5, 6, 7, 10)


def fractions(max_num=50, max_den=20):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


@st.composite
def field_values(draw, rad=None, n=1):
    """n values from one field Q(sqrt(rad)); rad drawn if not given."""
    if rad is None:
        rad = draw(st.sampled_from((0,) + RADICANDS))
    out = []
    for _ in range(n):
        coef = draw(fractions()) if rad else Fraction(0)
        out.append(make_exact(draw(fractions()), coef, rad))
    return out


@st.composite
def rational_alphabets(draw, max_len=4, max_den=9):
    vals = draw(
        st.sets(
            st.builds(Fraction, st.integers(-12, 12), st.integers(1, max_den)),
            min_size=2,
            max_size=max_len,
        )
    )
    return make_alphabet(sorted(vals))


# -- acceptance summary -------------------------------------------------

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}")
