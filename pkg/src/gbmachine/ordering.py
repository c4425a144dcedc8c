"""Monomial orderings and leading-term decomposition.

Four orderings are provided: lexicographic (lex), pure reverse
lexicographic (revlex), graded lexicographic (grlex, ties broken by lex)
and graded reverse lexicographic (grevlex).  Revlex is exposed as a
comparator for completeness but it is not admissible (1 is not minimal),
so every computation that relies on termination rejects it.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .poly import Fraction, Monomial, Polynomial, PowerProduct, Ring, RingMismatchError


class UnknownOrderingError(ValueError):
    """The ordering name is not one of lex, revlex, grlex, grevlex."""


class NotAdmissibleError(ValueError):
    """The operation requires an admissible ordering."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no leading term."""


class OrderKind(str, Enum):
    LEX = "lex"
    REVLEX = "revlex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    @classmethod
    def from_name(cls, name: str) -> "OrderKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise UnknownOrderingError(
                f"unknown ordering {name!r}; expected one of "
                f"{', '.join(k.value for k in cls)}"
            ) from None


def _lex_key(t: PowerProduct):
    return tuple(t)


def _revlex_key(t: PowerProduct):
    return tuple(-e for e in reversed(t))


def _grlex_key(t: PowerProduct):
    return (sum(t), tuple(t))


def _grevlex_key(t: PowerProduct):
    return (sum(t), tuple(-e for e in reversed(t)))


_KEYS = {
    OrderKind.LEX: _lex_key,
    OrderKind.REVLEX: _revlex_key,
    OrderKind.GRLEX: _grlex_key,
    OrderKind.GREVLEX: _grevlex_key,
}

ADMISSIBLE_KINDS = frozenset({OrderKind.LEX, OrderKind.GRLEX, OrderKind.GREVLEX})


class Decomposition(NamedTuple):
    """Leading power product, leading coefficient, leading monomial, rest."""

    lpp: PowerProduct
    lc: Fraction
    lm: Monomial
    rest: Polynomial


class Ordering:
    """A monomial ordering bound to a ring.

    Comparisons are exposed both as a three-way ``compare`` and as a
    ``sort_key`` suitable for ``max``/``sorted`` (larger key means larger
    power product).
    """

    __slots__ = ("kind", "ring", "_key")

    def __init__(self, kind: OrderKind | str, ring: Ring):
        if isinstance(kind, str):
            kind = OrderKind.from_name(kind)
        self.kind = kind
        self.ring = ring
        self._key = _KEYS[kind]

    @property
    def admissible(self) -> bool:
        return self.kind in ADMISSIBLE_KINDS

    def require_admissible(self) -> None:
        if not self.admissible:
            raise NotAdmissibleError(
                f"{self.kind.value} is not an admissible ordering; "
                "use lex, grlex or grevlex"
            )

    def sort_key(self, t: PowerProduct):
        return self._key(t)

    def compare(self, t: PowerProduct, u: PowerProduct) -> int:
        """Return -1, 0 or 1 as t precedes, equals or succeeds u."""
        n = self.ring.nvars
        if len(t) != n or len(u) != n:
            raise RingMismatchError(
                f"expected {n}-variable power products, got {len(t)} and {len(u)}"
            )
        a, b = self._key(t), self._key(u)
        return (a > b) - (a < b)

    def max_pp(self, pps) -> PowerProduct:
        return max(pps, key=self._key)

    def lpp(self, p: Polynomial) -> PowerProduct:
        """Leading power product of a nonzero polynomial."""
        self.require_admissible()
        if p.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no leading power product")
        return max(p.terms, key=self._key)

    def lc(self, p: Polynomial) -> Fraction:
        return p.terms[self.lpp(p)]

    def lm(self, p: Polynomial) -> Monomial:
        lpp = self.lpp(p)
        return Monomial(p.terms[lpp], lpp)

    def rest(self, p: Polynomial) -> Polynomial:
        return self.decompose(p).rest

    def decompose(self, p: Polynomial) -> Decomposition:
        """Split a nonzero p into leading monomial and strictly smaller rest."""
        lpp = self.lpp(p)
        lc = p.terms[lpp]
        rest_terms = dict(p.terms)
        del rest_terms[lpp]
        return Decomposition(lpp, lc, Monomial(lc, lpp), Polynomial._from_clean(rest_terms))

    def sorted_terms(self, p: Polynomial) -> list[Monomial]:
        """Terms of p as monomials with strictly descending power products."""
        key = self._key
        return [
            Monomial(p.terms[pp], pp)
            for pp in sorted(p.terms, key=key, reverse=True)
        ]

    def monic(self, p: Polynomial) -> Polynomial:
        """Scale a nonzero p so its leading coefficient is 1."""
        lc = self.lc(p)
        return p if lc == 1 else p.scale(1 / lc)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ordering)
            and self.kind is other.kind
            and self.ring == other.ring
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.ring))

    def __repr__(self) -> str:
        return f"Ordering({self.kind.value!r}, {self.ring!r})"
