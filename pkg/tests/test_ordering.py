import random

import pytest

from gbmachine import (
    Monomial,
    NotAdmissibleError,
    OrderKind,
    Ordering,
    Ring,
    UnknownOrderingError,
    ZeroPolynomialError,
    parse_polynomial,
)

from helpers import ADMISSIBLE, check_ordering_laws, random_pp


@pytest.fixture
def xyz():
    return Ring(["x", "y", "z"])


def test_kind_parsing():
    assert OrderKind.from_name("GRLEX") is OrderKind.GRLEX
    assert OrderKind.from_name(" lex ") is OrderKind.LEX
    with pytest.raises(UnknownOrderingError):
        OrderKind.from_name("deglex")


def test_grlex_examples(ring_xy, grlex_xy):
    x2 = ring_xy.power_product((2, 0))
    x = ring_xy.power_product((1, 0))
    y2 = ring_xy.power_product((0, 2))
    assert grlex_xy.compare(x2, x) > 0
    # equal degree falls back to lex on the declared variable order
    assert grlex_xy.compare(x2, y2) > 0


def test_unit_is_minimal_for_admissible_kinds(ring_xy):
    unit = ring_xy.unit
    t = ring_xy.power_product((1, 2))
    for kind in ADMISSIBLE:
        assert Ordering(kind, ring_xy).compare(unit, t) < 0


def test_lex_vs_grevlex_disagree(xyz):
    # x*z^2 vs y^3: lex prefers the x term, graded orders prefer... both
    # have degree 3, so grevlex looks at the last variable.
    lex = Ordering("lex", xyz)
    grevlex = Ordering("grevlex", xyz)
    xzz = xyz.power_product((1, 0, 2))
    yyy = xyz.power_product((0, 3, 0))
    assert lex.compare(xzz, yyy) > 0
    assert grevlex.compare(xzz, yyy) < 0


def test_revlex_comparator_exists_but_is_not_admissible(ring_xy):
    revlex = Ordering("revlex", ring_xy)
    assert not revlex.admissible
    # 1 is not minimal under pure reverse lexicographic order
    assert revlex.compare(ring_xy.unit, ring_xy.variable("x")) > 0
    with pytest.raises(NotAdmissibleError):
        revlex.decompose(parse_polynomial("x + 1", ring_xy))
    with pytest.raises(NotAdmissibleError):
        revlex.require_admissible()


def test_decompose_example(f1, grlex_xy, ring_xy):
    dec = grlex_xy.decompose(f1)
    assert dec.lpp == ring_xy.power_product((2, 0))
    assert dec.lc == 1
    assert dec.lm == Monomial(dec.lc, dec.lpp)
    assert dec.rest == parse_polynomial("x - y", ring_xy)


def test_decompose_constant(ring_xy, grlex_xy):
    dec = grlex_xy.decompose(ring_xy.constant(5))
    assert dec.lpp == ring_xy.unit
    assert dec.rest.is_zero


def test_decompose_linear(f2, grlex_xy, ring_xy):
    dec = grlex_xy.decompose(f2)
    assert dec.lpp == ring_xy.variable("x")
    assert dec.lc == 1
    assert dec.rest == ring_xy.constant(-2)


def test_decompose_zero_rejected(grlex_xy):
    from gbmachine import Polynomial

    with pytest.raises(ZeroPolynomialError):
        grlex_xy.decompose(Polynomial.zero())


def test_sorted_terms(ring_xy, grlex_xy, g_cubic):
    p = parse_polynomial("2*y + x^3", ring_xy)
    assert [m.pp for m in grlex_xy.sorted_terms(p)] == [
        ring_xy.power_product((3, 0)),
        ring_xy.power_product((0, 1)),
    ]
    from gbmachine import Polynomial

    assert grlex_xy.sorted_terms(Polynomial.zero()) == []
    # x^3 and x^2*y tie on degree; lex tiebreak puts x^3 first
    assert [m.pp for m in grlex_xy.sorted_terms(g_cubic)] == [
        ring_xy.power_product((3, 0)),
        ring_xy.power_product((2, 1)),
        ring_xy.power_product((0, 1)),
    ]


def test_sorted_terms_reconstructs(ring_xy, grlex_xy, g_cubic):
    from gbmachine import Polynomial

    total = Polynomial.zero()
    previous = None
    for coeff, pp in grlex_xy.sorted_terms(g_cubic):
        if previous is not None:
            assert grlex_xy.compare(previous, pp) > 0
        previous = pp
        total = total + Polynomial({pp: coeff})
    assert total == g_cubic


def test_decompose_invariants_random(ring_xy):
    rng = random.Random(23)
    from helpers import random_poly

    for _ in range(200):
        ordering = Ordering(rng.choice(ADMISSIBLE), ring_xy)
        p = random_poly(rng, ring_xy, nonzero=True)
        dec = ordering.decompose(p)
        from gbmachine import Polynomial

        assert Polynomial({dec.lpp: dec.lc}) + dec.rest == p
        for pp in dec.rest.support:
            assert ordering.compare(pp, dec.lpp) < 0


def test_ordering_laws_smoke():
    rng = random.Random(29)
    for nvars in (1, 2, 3):
        ring = Ring(["x", "y", "z"][:nvars])
        for kind in ADMISSIBLE:
            assert check_ordering_laws(Ordering(kind, ring), rng, rounds=100) > 0


def test_compare_is_total_order():
    rng = random.Random(31)
    ring = Ring(["x", "y", "z"])
    for kind in OrderKind:
        ordering = Ordering(kind, ring)
        for _ in range(200):
            t, u, v = (random_pp(rng, ring, 4) for _ in range(3))
            assert (ordering.compare(t, u) == 0) == (t == u)
            if ordering.compare(t, u) <= 0 and ordering.compare(u, v) <= 0:
                assert ordering.compare(t, v) <= 0


def test_monic(ring_xy, grlex_xy):
    p = parse_polynomial("2*x^2 - 4*y", ring_xy)
    assert grlex_xy.monic(p) == parse_polynomial("x^2 - 2*y", ring_xy)
