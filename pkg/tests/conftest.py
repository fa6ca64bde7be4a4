import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from moment_forge.counterexample import laurent_L, reference_basis
from moment_forge.laurent import LaurentPoly, Polynomial
from moment_forge.moments import PowerTable
from moment_forge.numfield import FieldElem

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fraction = st.builds(
    Fraction, st.integers(-12, 12), st.integers(1, 7)
)
field_elems = st.builds(FieldElem, small_fraction, small_fraction)
nonzero_field_elems = field_elems.filter(bool)


@st.composite
def laurent_polys(draw, lo=-4, hi=4, max_terms=5):
    degs = draw(st.lists(st.integers(lo, hi), max_size=max_terms, unique=True))
    return LaurentPoly({k: draw(field_elems) for k in degs})


@st.composite
def polynomials(draw, max_degree=3):
    return Polynomial(draw(st.lists(field_elems, max_size=max_degree + 1)))


@pytest.fixture(scope="session")
def L():
    return laurent_L()


@pytest.fixture(scope="session")
def basis():
    return reference_basis()


@pytest.fixture(scope="session")
def table(L):
    return PowerTable(L)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n].line())
