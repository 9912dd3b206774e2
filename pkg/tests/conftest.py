import pytest

from synorres import (Monomial, RationalField, build_lcm_lattice,
                      ideal_example62)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def QQ():
    return RationalField()


@pytest.fixture(scope="session")
def cycle_lattice():
    """lcm lattice of (xy, xz, yz): five elements, top a 1-synor twice."""
    gens = [Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))]
    return build_lcm_lattice(gens, ("x", "y", "z"))


@pytest.fixture(scope="session")
def example62_lattice():
    spec = ideal_example62()
    return build_lcm_lattice(list(spec.generators), spec.variables)
