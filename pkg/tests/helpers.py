"""Shared random generators and law checks for the test suite.

Everything is driven by an explicit random.Random so failures reproduce.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gbmachine import Basis, OrderKind, Ordering, Polynomial, PowerProduct, Ring

COEFF_POOL = [
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(3),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(2, 3),
    Fraction(-5),
]

ADMISSIBLE = (OrderKind.LEX, OrderKind.GRLEX, OrderKind.GREVLEX)

VAR_NAMES = ("x", "y", "z", "w")


def random_ring(rng: random.Random, max_vars: int = 3) -> Ring:
    return Ring(VAR_NAMES[: rng.randint(1, max_vars)])


def random_pp(rng: random.Random, ring: Ring, max_degree: int = 3) -> PowerProduct:
    # Total degree capped at max_degree.
    exps = [0] * ring.nvars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(ring.nvars)] += 1
    return ring.power_product(exps)


def random_poly(
    rng: random.Random,
    ring: Ring,
    max_terms: int = 3,
    max_degree: int = 3,
    nonzero: bool = False,
) -> Polynomial:
    n_terms = rng.randint(1 if nonzero else 0, max_terms)
    terms = {}
    while len(terms) < n_terms:
        terms[random_pp(rng, ring, max_degree)] = rng.choice(COEFF_POOL)
    return Polynomial(terms)


def random_ordering(rng: random.Random, ring: Ring) -> Ordering:
    return Ordering(rng.choice(ADMISSIBLE), ring)


def random_basis(
    rng: random.Random,
    ordering: Ordering,
    max_polys: int = 3,
    max_terms: int = 3,
    max_degree: int = 3,
) -> Basis:
    polys = [
        random_poly(rng, ordering.ring, max_terms, max_degree, nonzero=True)
        for _ in range(rng.randint(1, max_polys))
    ]
    return Basis(polys, ordering)


def random_instance(rng: random.Random, max_vars: int = 3):
    """A random (polynomial, basis) pair for cross-engine checks."""
    ring = random_ring(rng, max_vars)
    ordering = random_ordering(rng, ring)
    basis = random_basis(rng, ordering)
    g = random_poly(rng, ring, max_terms=3, max_degree=3)
    return g, basis


def check_ordering_laws(ordering: Ordering, rng: random.Random, rounds: int) -> int:
    """Check admissibility axioms and divisibility monotonicity.

    Returns the number of individual assertions made; raises
    AssertionError on the first violation.
    """
    ring = ordering.ring
    unit = ring.unit
    checks = 0
    for _ in range(rounds):
        t = random_pp(rng, ring, 4)
        u = random_pp(rng, ring, 4)
        v = random_pp(rng, ring, 4)
        # 1 is minimal
        if t != unit:
            assert ordering.compare(unit, t) < 0, f"1 is not below {t} for {ordering.kind}"
            checks += 1
        # compatibility with multiplication
        if ordering.compare(t, u) < 0:
            assert ordering.compare(t * v, u * v) < 0, (
                f"{t} < {u} but not {t}*{v} < {u}*{v} for {ordering.kind}"
            )
            checks += 1
        # divisibility monotonicity
        if t.divides(u):
            assert ordering.compare(t, u) <= 0, f"{t} | {u} but {t} > {u}"
            checks += 1
        # total order sanity
        cmp_tu = ordering.compare(t, u)
        assert (cmp_tu == 0) == (t == u)
        assert cmp_tu == -ordering.compare(u, t)
        checks += 2
    return checks
