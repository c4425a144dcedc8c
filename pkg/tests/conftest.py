import pytest

from gbmachine import Basis, Ordering, Ring, parse_polynomial


@pytest.fixture
def ring_xy():
    return Ring(["x", "y"])


@pytest.fixture
def grlex_xy(ring_xy):
    return Ordering("grlex", ring_xy)


@pytest.fixture
def f1(ring_xy):
    return parse_polynomial("x^2 + x - y", ring_xy)


@pytest.fixture
def f2(ring_xy):
    return parse_polynomial("x - 2", ring_xy)


@pytest.fixture
def basis_xy(f1, f2, grlex_xy):
    return Basis([f1, f2], grlex_xy)


@pytest.fixture
def g_cubic(ring_xy):
    # x^3 + x^2*y + 2*y: reduces to y^2 + y + 2 in four steps
    return parse_polynomial("x^3 + x^2*y + 2*y", ring_xy)


@pytest.fixture
def g_quad_coeffs(ring_xy):
    # 4*x^3 + 2*x^2*y + 7*x*y + 2*y: classic depth 5, machine depth 3/7
    return parse_polynomial("4*x^3 + 2*x^2*y + 7*x*y + 2*y", ring_xy)
