"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a finite map from power products (dense exponent vectors,
one entry per ring variable) to nonzero ``Fraction`` coefficients.  The
representation is canonical: zero coefficients are never stored, so two
polynomials are equal iff their term maps are equal.

All values in this module are immutable after construction and safe to
share between concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

_ZERO = Fraction(0)

CoefficientLike = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Operands have different variable counts and cannot be combined."""


class NotDivisibleError(ValueError):
    """Exact division of power products is not possible."""


class PowerProduct(tuple):
    """A product of ring variables, stored as a dense exponent vector.

    Entry ``i`` is the exponent of the ring's ``i``-th variable; the
    all-zeros vector is the unit power product 1.  Exponents are plain
    Python integers, so they never overflow.
    """

    __slots__ = ()

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def is_unit(self) -> bool:
        return not any(self)

    def _check_arity(self, other: "PowerProduct") -> None:
        if len(self) != len(other):
            raise RingMismatchError(
                f"power products have {len(self)} and {len(other)} variables"
            )

    def divides(self, other: "PowerProduct") -> bool:
        """True iff every exponent of self is <= the matching one of other."""
        self._check_arity(other)
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other: "PowerProduct") -> "PowerProduct":
        self._check_arity(other)
        return PowerProduct(a + b for a, b in zip(self, other))

    def __truediv__(self, other: "PowerProduct") -> "PowerProduct":
        """Componentwise exponent subtraction; requires other | self."""
        self._check_arity(other)
        if not all(b <= a for a, b in zip(self, other)):
            raise NotDivisibleError(f"{tuple(other)} does not divide {tuple(self)}")
        return PowerProduct(a - b for a, b in zip(self, other))

    def lcm(self, other: "PowerProduct") -> "PowerProduct":
        self._check_arity(other)
        return PowerProduct(max(a, b) for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"PowerProduct{tuple.__repr__(self)}"


class Monomial(NamedTuple):
    coefficient: Fraction
    pp: PowerProduct


class Ring:
    """A polynomial ring, fixed by an ordered tuple of variable names."""

    __slots__ = ("variables",)

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.variables = names

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def unit(self) -> PowerProduct:
        return PowerProduct((0,) * self.nvars)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in ring {self.variables}") from None

    def power_product(self, exponents: Iterable[int]) -> PowerProduct:
        exps = tuple(exponents)
        if len(exps) != self.nvars:
            raise RingMismatchError(
                f"expected {self.nvars} exponents, got {len(exps)}"
            )
        if any(not isinstance(e, int) or e < 0 for e in exps):
            raise ValueError(f"exponents must be natural numbers, got {exps}")
        return PowerProduct(exps)

    def variable(self, name: str) -> PowerProduct:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return PowerProduct(exps)

    def constant(self, value: CoefficientLike) -> "Polynomial":
        return Polynomial({self.unit: Fraction(value)})

    def polynomial(self, terms: Mapping[Iterable[int], CoefficientLike]) -> "Polynomial":
        return Polynomial({self.power_product(e): c for e, c in terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"Ring({list(self.variables)!r})"


class Polynomial:
    """A canonical polynomial: term map with no zero coefficients stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[PowerProduct, Fraction] = {}
        for pp, c in items:
            if not isinstance(pp, PowerProduct):
                pp = PowerProduct(pp)
            c = c if isinstance(c, Fraction) else Fraction(c)
            acc = data.get(pp, _ZERO) + c
            if acc:
                data[pp] = acc
            else:
                data.pop(pp, None)
        self._terms = data
        self._hash = None

    @classmethod
    def _from_clean(cls, data: dict) -> "Polynomial":
        # Caller guarantees: fresh dict, Fraction values, no zeros.
        p = cls.__new__(cls)
        p._terms = data
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._from_clean({})

    @property
    def terms(self) -> dict[PowerProduct, Fraction]:
        """The term map.  Treat as read-only."""
        return self._terms

    @property
    def support(self):
        """The set of power products with nonzero coefficient."""
        return self._terms.keys()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, pp: PowerProduct) -> Fraction:
        return self._terms.get(pp, _ZERO)

    def monomials(self) -> Iterator[Monomial]:
        """Iterate the terms in unspecified order (see the ordering module)."""
        for pp, c in self._terms.items():
            yield Monomial(c, pp)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean({pp: -c for pp, c in self._terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for pp, c in other._terms.items():
            acc = out.get(pp, _ZERO) + c
            if acc:
                out[pp] = acc
            else:
                out.pop(pp, None)
        return Polynomial._from_clean(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for pp, c in other._terms.items():
            acc = out.get(pp, _ZERO) - c
            if acc:
                out[pp] = acc
            else:
                out.pop(pp, None)
        return Polynomial._from_clean(out)

    def scale(self, c: CoefficientLike) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._from_clean({pp: c * v for pp, v in self._terms.items()})

    def mul_term(self, c: CoefficientLike, pp: PowerProduct) -> "Polynomial":
        """Multiply by the monomial c*pp."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._from_clean({q * pp: c * v for q, v in self._terms.items()})

    def mul_monomial(self, m: Monomial) -> "Polynomial":
        return self.mul_term(m.coefficient, m.pp)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[PowerProduct, Fraction] = {}
        for pa, ca in self._terms.items():
            for pb, cb in other._terms.items():
                pp = pa * pb
                acc = out.get(pp, _ZERO) + ca * cb
                if acc:
                    out[pp] = acc
                else:
                    out.pop(pp, None)
        return Polynomial._from_clean(out)

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        inner = ", ".join(f"{tuple(pp)}: {c}" for pp, c in self._terms.items())
        return f"Polynomial({{{inner}}})"
