"""S-polynomials, Buchberger's algorithm, reduced bases and the ideal
membership / congruence tests, parameterized over any reduction engine.

The improved mode skips critical pairs by the two classical criteria
(coprime leading power products; a third basis element whose leading
power product divides the pair's lcm and whose pairs with both components
were already treated) and inter-reduces the final basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .engines import EngineLike, get_engine
from .ordering import Ordering, ZeroPolynomialError
from .poly import Monomial, Polynomial, PowerProduct
from .reduction import (
    FIRST_DIVISOR,
    Basis,
    StrategyLike,
    get_strategy,
    reduce_with_cofactors,
)

MODES = ("classic", "improved")
PAIR_RULES = ("degree", "first")


class CriticalPair(NamedTuple):
    i: int
    j: int
    lcm: PowerProduct
    degree: int


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    skipped_product: int = 0
    skipped_chain: int = 0
    zero_reductions: int = 0
    reduction_steps: int = 0


@dataclass
class GroebnerResult:
    basis: Basis
    reduced: bool
    mode: str
    engine: str
    stats: GroebnerStats
    # Cofactor vectors over the input generators, one per basis element;
    # present only when tracking was requested.
    cofactors: Optional[list[list[Polynomial]]] = None

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def spol(f: Polynomial, g: Polynomial, ordering: Ordering) -> Polynomial:
    """S-polynomial: the lcm-matched combination cancelling both leads.

        (lcm / LM(f)) * f  -  (lcm / LM(g)) * g
    """
    df = ordering.decompose(f)
    dg = ordering.decompose(g)
    lcm = df.lpp.lcm(dg.lpp)
    return f.mul_term(1 / df.lc, lcm / df.lpp) - g.mul_term(1 / dg.lc, lcm / dg.lpp)


def _spol_cofactor_monomials(
    f_dec, g_dec, lcm: PowerProduct
) -> tuple[Monomial, Monomial]:
    return (
        Monomial(1 / f_dec.lc, lcm / f_dec.lpp),
        Monomial(1 / g_dec.lc, lcm / g_dec.lpp),
    )


def _engine_name(engine: EngineLike) -> str:
    return engine if isinstance(engine, str) else getattr(engine, "__name__", "custom")


def _validate_generators(generators) -> list[Polynomial]:
    polys = list(generators)
    if not polys:
        raise ValueError("need at least one generator")
    for p in polys:
        if p.is_zero:
            raise ZeroPolynomialError("generators must be nonzero")
    return polys


def buchberger(
    generators: Sequence[Polynomial],
    ordering: Ordering,
    *,
    mode: str = "improved",
    engine: EngineLike = "classic",
    strategy: StrategyLike = FIRST_DIVISOR,
    pair_rule: str = "degree",
    track_cofactors: bool = False,
    workers: int = 4,
) -> GroebnerResult:
    """Compute a Groebner basis of the ideal generated by ``generators``.

    ``mode`` "classic" runs the plain pair loop and returns the raw basis;
    "improved" also applies the pair-skipping criteria and inter-reduces
    the result.  ``engine`` selects which normal-form engine performs the
    reductions.  With ``track_cofactors`` every basis element carries an
    exact representation in terms of the input generators (reductions
    then use the cofactor-tracking classic path, which computes the same
    normal forms).
    """
    mode = mode.strip().lower()
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if pair_rule not in PAIR_RULES:
        raise ValueError(f"unknown pair rule {pair_rule!r}; expected one of {PAIR_RULES}")
    ordering.require_admissible()
    strategy = get_strategy(strategy)
    engine_fn = get_engine(engine, workers)
    improved = mode == "improved"
    stats = GroebnerStats()

    polys = _validate_generators(generators)
    G: list[Polynomial] = []
    vectors: list[list[Polynomial]] = []
    for idx, f in enumerate(polys):
        lc = ordering.lc(f)
        G.append(f if lc == 1 else f.scale(1 / lc))
        if track_cofactors:
            vec = [Polynomial.zero()] * len(polys)
            vec[idx] = Polynomial({ordering.ring.unit: 1 / lc})
            vectors.append(vec)
    lpps = [ordering.lpp(g) for g in G]

    counter = 0  # FIFO tiebreak for pair_rule "first"
    heap: list[tuple] = []

    def push_pair(i: int, j: int) -> None:
        nonlocal counter
        lcm = lpps[i].lcm(lpps[j])
        if pair_rule == "degree":
            priority = (lcm.degree, ordering.sort_key(lcm), i, j)
        else:
            priority = (counter,)
            counter += 1
        heapq.heappush(heap, (priority, CriticalPair(i, j, lcm, lcm.degree)))

    for j in range(len(G)):
        for i in range(j):
            push_pair(i, j)

    treated: set[tuple[int, int]] = set()
    basis = Basis(G, ordering)

    while heap:
        _, pair = heapq.heappop(heap)
        i, j = pair.i, pair.j
        treated.add((i, j))
        if improved:
            if pair.lcm == lpps[i] * lpps[j]:
                stats.skipped_product += 1
                continue
            if any(
                k != i
                and k != j
                and lpps[k].divides(pair.lcm)
                and (min(i, k), max(i, k)) in treated
                and (min(j, k), max(j, k)) in treated
                for k in range(len(G))
            ):
                stats.skipped_chain += 1
                continue
        stats.pairs_processed += 1
        s = spol(G[i], G[j], ordering)
        if track_cofactors:
            h, qs, steps = reduce_with_cofactors(s, basis, strategy)
        else:
            h, steps = engine_fn(s, basis, strategy)
        stats.reduction_steps += steps
        if h.is_zero:
            stats.zero_reductions += 1
            continue
        lc = ordering.lc(h)
        h_monic = h if lc == 1 else h.scale(1 / lc)
        if track_cofactors:
            mi, mj = _spol_cofactor_monomials(
                ordering.decompose(G[i]), ordering.decompose(G[j]), pair.lcm
            )
            vec = [
                vi.mul_monomial(mi) - vj.mul_monomial(mj)
                for vi, vj in zip(vectors[i], vectors[j])
            ]
            for q, qvec in zip(qs, vectors):
                if not q.is_zero:
                    vec = [entry - q * qv for entry, qv in zip(vec, qvec)]
            vectors.append([entry.scale(1 / lc) for entry in vec])
        n = len(G)
        G.append(h_monic)
        lpps.append(ordering.lpp(h_monic))
        basis = Basis(G, ordering)
        for k in range(n):
            push_pair(k, n)

    cofactors = vectors if track_cofactors else None
    if improved:
        if track_cofactors:
            basis, cofactors = _inter_reduce_tracked(
                G, ordering, strategy, vectors
            )
        else:
            basis = inter_reduce(G, ordering, engine=engine_fn, strategy=strategy)
    return GroebnerResult(
        basis=basis,
        reduced=improved,
        mode=mode,
        engine=_engine_name(engine),
        stats=stats,
        cofactors=cofactors,
    )


def inter_reduce(
    polys: Sequence[Polynomial],
    ordering: Ordering,
    engine: EngineLike = "classic",
    strategy: StrategyLike = FIRST_DIVISOR,
) -> Basis:
    """Autoreduce: make every element monic and irreducible modulo the rest.

    Redundant elements (those reducing to zero against the others) are
    dropped; the ideal generated is unchanged.  Each replacement strictly
    decreases the element in the well-founded term order, so the loop
    terminates.  On a Groebner basis this yields the unique reduced
    basis, sorted by ascending leading power product.
    """
    engine_fn = get_engine(engine)
    strategy = get_strategy(strategy)
    work = [ordering.monic(p) for p in _validate_generators(polys)]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            others = work[:i] + work[i + 1 :]
            if not others:
                continue
            h = engine_fn(work[i], Basis(others, ordering), strategy).normal_form
            if h == work[i]:
                continue
            changed = True
            if h.is_zero:
                del work[i]
            else:
                work[i] = ordering.monic(h)
            break
    key = ordering.sort_key
    work.sort(key=lambda p: key(ordering.lpp(p)))
    return Basis(work, ordering)


def _inter_reduce_tracked(polys, ordering, strategy, vectors):
    # Autoreduction that keeps the cofactor vectors in sync: replacing an
    # element by its normal form subtracts the q-weighted vectors of the
    # other elements, then rescales for the monic normalization.
    work: list[Polynomial] = []
    vecs: list[list[Polynomial]] = []
    for p, vec in zip(polys, vectors):
        lc = ordering.lc(p)
        work.append(p if lc == 1 else p.scale(1 / lc))
        vecs.append(vec if lc == 1 else [entry.scale(1 / lc) for entry in vec])

    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            others = work[:i] + work[i + 1 :]
            if not others:
                continue
            h, qs, _ = reduce_with_cofactors(work[i], Basis(others, ordering), strategy)
            if h == work[i]:
                continue
            changed = True
            vec = vecs[i]
            other_vecs = vecs[:i] + vecs[i + 1 :]
            for q, ovec in zip(qs, other_vecs):
                if not q.is_zero:
                    vec = [entry - q * ov for entry, ov in zip(vec, ovec)]
            if h.is_zero:
                del work[i]
                del vecs[i]
            else:
                lc = ordering.lc(h)
                work[i] = h if lc == 1 else h.scale(1 / lc)
                vecs[i] = vec if lc == 1 else [entry.scale(1 / lc) for entry in vec]
            break
    key = ordering.sort_key
    order = sorted(range(len(work)), key=lambda k: key(ordering.lpp(work[k])))
    basis = Basis([work[k] for k in order], ordering)
    return basis, [vecs[k] for k in order]


def is_groebner(
    polys: Sequence[Polynomial],
    ordering: Ordering,
    engine: EngineLike = "classic",
    strategy: StrategyLike = FIRST_DIVISOR,
) -> bool:
    """True iff every pairwise S-polynomial reduces to zero modulo the set."""
    engine_fn = get_engine(engine)
    strategy = get_strategy(strategy)
    polys = _validate_generators(polys)
    basis = Basis(polys, ordering)
    for j in range(len(polys)):
        for i in range(j):
            s = spol(polys[i], polys[j], ordering)
            if not engine_fn(s, basis, strategy).normal_form.is_zero:
                return False
    return True


def ideal_member(
    g: Polynomial,
    generators: Sequence[Polynomial],
    ordering: Ordering,
    engine: EngineLike = "classic",
    strategy: StrategyLike = FIRST_DIVISOR,
) -> bool:
    """Decide whether g lies in the ideal generated by ``generators``."""
    result = buchberger(
        generators, ordering, mode="improved", engine=engine, strategy=strategy
    )
    engine_fn = get_engine(engine)
    return engine_fn(g, result.basis, get_strategy(strategy)).normal_form.is_zero


def congruent(
    g: Polynomial,
    h: Polynomial,
    generators: Sequence[Polynomial],
    ordering: Ordering,
    engine: EngineLike = "classic",
    strategy: StrategyLike = FIRST_DIVISOR,
) -> bool:
    """True iff g - h lies in the ideal generated by ``generators``."""
    diff = g - h
    if diff.is_zero:
        return True
    return ideal_member(diff, generators, ordering, engine=engine, strategy=strategy)
