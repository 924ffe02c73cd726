from fractions import Fraction

from hypothesis import settings, strategies as st

from vff import I, Scalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_int = st.integers(min_value=-6, max_value=6)
monomial_exp = st.tuples(st.integers(0, 2), st.integers(0, 2))


def _poly(min_size=0):
    return st.dictionaries(monomial_exp, small_int.filter(bool), min_size=min_size, max_size=3)


@st.composite
def scalars(draw, complex_=True):
    re_num = draw(_poly())
    den = draw(_poly(min_size=1))
    x = Scalar.from_terms(re_num, den)
    if complex_ and draw(st.booleans()):
        im = Scalar.from_terms(draw(_poly()), draw(_poly(min_size=1)))
        x = x + I * im
    if draw(st.booleans()):
        x = x * Fraction(draw(st.integers(1, 9)), draw(st.integers(1, 9)))
    return x


nonzero_scalars = scalars().filter(lambda x: not x.is_zero())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.REPORT:
        terminalreporter.write_line(line)
