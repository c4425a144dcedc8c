"""Single-step reduction, the classic normal-form algorithm and a
branch explorer that enumerates every possible reduction order.

A reduction step at power product t replaces the monomial of g at t using
a reducer f whose leading power product divides t:

    h = g - (M(g, t) / LM(f)) * f

Every power product introduced by a step strictly precedes t, which is
what makes repeated reduction terminate under an admissible ordering.

Which reducer handles a given power product is fixed by a selection
strategy: a deterministic function of the power product and the basis
only.  With the strategy fixed, the normal form is independent of the
order in which monomials are picked; the branch explorer below checks
exactly that by walking every choice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence, Union

from .ordering import Ordering, ZeroPolynomialError
from .poly import Polynomial, PowerProduct

_ZERO = Fraction(0)


class UnknownStrategyError(ValueError):
    """The strategy name is not registered."""


class NodeBudgetExceeded(RuntimeError):
    """The branch explorer visited more nodes than its budget allows."""


class Basis(Sequence):
    """An ordered list of nonzero reducers with cached decompositions.

    The ordering must be admissible.  Leading power products, leading
    coefficients and the descending-sorted rest terms of every generator
    are precomputed because reduction consults them constantly.
    """

    __slots__ = ("polys", "ordering", "lpps", "lcs", "rests", "rest_items")

    def __init__(self, polys, ordering: Ordering):
        ordering.require_admissible()
        self.polys = tuple(polys)
        self.ordering = ordering
        lpps = []
        lcs = []
        rests = []
        rest_items = []
        for p in self.polys:
            if p.is_zero:
                raise ZeroPolynomialError("a basis cannot contain the zero polynomial")
            dec = ordering.decompose(p)
            lpps.append(dec.lpp)
            lcs.append(dec.lc)
            rests.append(dec.rest)
            rest_items.append(
                tuple(
                    (pp, dec.rest.terms[pp])
                    for pp in sorted(dec.rest.terms, key=ordering.sort_key, reverse=True)
                )
            )
        self.lpps = tuple(lpps)
        self.lcs = tuple(lcs)
        self.rests = tuple(rests)
        self.rest_items = tuple(rest_items)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polys)

    def __repr__(self) -> str:
        return f"Basis({len(self.polys)} polynomials, {self.ordering.kind.value})"


def _first_divisor(t: PowerProduct, basis: Basis) -> Optional[int]:
    for i, lpp in enumerate(basis.lpps):
        if lpp.divides(t):
            return i
    return None


def _max_lpp(t: PowerProduct, basis: Basis) -> Optional[int]:
    key = basis.ordering.sort_key
    best = None
    best_key = None
    for i, lpp in enumerate(basis.lpps):
        if lpp.divides(t):
            k = key(lpp)
            if best is None or k > best_key:
                best, best_key = i, k
    return best


@dataclass(frozen=True)
class SelectionStrategy:
    """Deterministic reducer choice, a function of (power product, basis) only.

    Restricting the rule to the power product and the basis (never the
    polynomial being reduced) is what makes the choice "fixed": it
    guarantees a unique normal form regardless of which monomial is
    reduced first.
    """

    name: str
    chooser: Callable[[PowerProduct, Basis], Optional[int]] = field(compare=False)

    def choose(self, t: PowerProduct, basis: Basis) -> Optional[int]:
        """Index of the reducer for t, or None if t is irreducible."""
        return self.chooser(t, basis)


FIRST_DIVISOR = SelectionStrategy("first", _first_divisor)
MAX_LPP = SelectionStrategy("maxlpp", _max_lpp)


def default_strategies() -> dict[str, SelectionStrategy]:
    """The built-in strategies, keyed by their CLI names."""
    return {s.name: s for s in (FIRST_DIVISOR, MAX_LPP)}


StrategyLike = Union[str, SelectionStrategy]


def get_strategy(spec: StrategyLike) -> SelectionStrategy:
    if isinstance(spec, SelectionStrategy):
        return spec
    strategies = default_strategies()
    try:
        return strategies[spec.strip().lower()]
    except KeyError:
        raise UnknownStrategyError(
            f"unknown strategy {spec!r}; expected one of {', '.join(strategies)}"
        ) from None


def reduce_step(
    g: Polynomial, f: Polynomial, t: PowerProduct, ordering: Ordering
) -> Polynomial:
    """One reduction of g at power product t using reducer f.

    Requires t in the support of g and LPP(f) | t.  The result has no
    term at t and every newly introduced power product strictly
    precedes t.
    """
    c = g.coefficient(t)
    if not c:
        raise ValueError(f"power product {tuple(t)} is not in the support of g")
    dec = ordering.decompose(f)
    factor = c / dec.lc
    cofactor = t / dec.lpp  # raises NotDivisibleError if LPP(f) does not divide t
    return g - f.mul_term(factor, cofactor)


def is_normal_form(g: Polynomial, basis: Basis) -> bool:
    """True iff no monomial of g is reducible by any basis element."""
    return not any(
        lpp.divides(t) for t in g.support for lpp in basis.lpps
    )


def classic_reduce(
    g: Polynomial, basis: Basis, strategy: StrategyLike = FIRST_DIVISOR
) -> tuple[Polynomial, int]:
    """Reduce g to normal form, always at the largest reducible power product.

    Returns the normal form and the number of reduction steps performed.
    """
    strategy = get_strategy(strategy)
    key = basis.ordering.sort_key
    work = dict(g.terms)
    remainder: dict[PowerProduct, Fraction] = {}
    steps = 0
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        i = strategy.choose(t, basis)
        if i is None:
            remainder[t] = c
            continue
        steps += 1
        factor = c / basis.lcs[i]
        cofactor = t / basis.lpps[i]
        for pp, rc in basis.rest_items[i]:
            target = cofactor * pp
            acc = work.get(target, _ZERO) - factor * rc
            if acc:
                work[target] = acc
            else:
                work.pop(target, None)
    return Polynomial._from_clean(remainder), steps


def reduce_with_cofactors(
    g: Polynomial, basis: Basis, strategy: StrategyLike = FIRST_DIVISOR
) -> tuple[Polynomial, list[Polynomial], int]:
    """Like classic_reduce, also returning cofactors q with g = sum(q*f) + h.

    The identity is exact and is what makes reduction usable for ideal
    membership bookkeeping.
    """
    strategy = get_strategy(strategy)
    key = basis.ordering.sort_key
    work = dict(g.terms)
    remainder: dict[PowerProduct, Fraction] = {}
    cofactors: list[dict[PowerProduct, Fraction]] = [{} for _ in basis]
    steps = 0
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        i = strategy.choose(t, basis)
        if i is None:
            remainder[t] = c
            continue
        steps += 1
        factor = c / basis.lcs[i]
        cofactor = t / basis.lpps[i]
        q = cofactors[i]
        q[cofactor] = q.get(cofactor, _ZERO) + factor
        for pp, rc in basis.rest_items[i]:
            target = cofactor * pp
            acc = work.get(target, _ZERO) - factor * rc
            if acc:
                work[target] = acc
            else:
                work.pop(target, None)
    return (
        Polynomial._from_clean(remainder),
        [Polynomial._from_clean(q) for q in cofactors],
        steps,
    )


def enumerate_branches(
    g: Polynomial,
    basis: Basis,
    strategy: StrategyLike = FIRST_DIVISOR,
    node_budget: int = 100_000,
) -> Counter:
    """Exhaustively explore every order of reducing the monomials of g.

    At each node every reducible power product is tried in turn (the
    reducer itself is fixed by the strategy), so the walk covers all
    branches of the reduction process.  Returns a multiset of
    (normal form, branch length) leaf outcomes; iterating it yields the
    distinct pairs.  Raises NodeBudgetExceeded when more than
    ``node_budget`` nodes would be visited.
    """
    strategy = get_strategy(strategy)
    ordering = basis.ordering
    sort_key = ordering.sort_key
    outcomes: Counter = Counter()
    nodes = 0
    stack: list[tuple[Polynomial, int]] = [(g, 0)]
    while stack:
        h, depth = stack.pop()
        nodes += 1
        if nodes > node_budget:
            raise NodeBudgetExceeded(
                f"reduction process exceeded the budget of {node_budget} nodes"
            )
        choices = [
            (t, i)
            for t in sorted(h.support, key=sort_key, reverse=True)
            for i in (strategy.choose(t, basis),)
            if i is not None
        ]
        if not choices:
            outcomes[(h, depth)] += 1
            continue
        for t, i in choices:
            stack.append((reduce_step(h, basis[i], t, ordering), depth + 1))
    return outcomes
