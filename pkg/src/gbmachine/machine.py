"""Reduction machines: worklist, cached-graph and parallel engines.

A reduction machine reduces each monomial of the input independently.
Reducing a monomial m by f replaces it with its *substitution*, the
monomials of -(m / LM(f)) * R(f); iterating this grows a *reduction
thread*, a tree whose leaves are irreducible monomials.  The machine's
result is the sum of all leaves over all threads, and it coincides with
the classic normal form for the same fixed selection strategy.

Three executions are provided:

* ``run_machine`` - one FIFO worklist over all thread nodes.  It records
  the full thread trees plus two metrics: the total number of
  substitutions (sequential cost) and the maximum thread height
  (parallel cost).
* ``run_cached_machine`` - the same computation over a directed graph
  keyed by power product, so each distinct power product is expanded at
  most once.  Coefficients are propagated afterwards by walking the
  graph backwards from the irreducible vertices.
* ``run_parallel_machine`` - thread-pool execution of the independent
  reduction threads with a shared, lock-protected substitution cache.
  The result is identical to the sequential machine for every worker
  count.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from threading import Lock
from typing import NamedTuple, Optional

from .poly import Monomial, Polynomial, PowerProduct
from .reduction import Basis, StrategyLike, get_strategy

_ZERO = Fraction(0)
_ONE = Fraction(1)


class IrreducibleMonomialError(ValueError):
    """substitution() was asked to reduce an irreducible monomial."""


class GraphCycleError(RuntimeError):
    """A cycle in the reduction graph; impossible for admissible orderings."""


def _unit_substitution(t: PowerProduct, basis: Basis, i: int) -> tuple[Monomial, ...]:
    # Substitution of the coefficient-1 monomial at t by reducer i:
    # -(t / LM(f_i)) * R(f_i), with children in descending pp order.
    inv_lc = -1 / basis.lcs[i]
    cofactor = t / basis.lpps[i]
    return tuple(
        Monomial(inv_lc * c, cofactor * pp) for pp, c in basis.rest_items[i]
    )


def substitution(
    m: Monomial, basis: Basis, strategy: StrategyLike
) -> list[Monomial]:
    """The monomials that replace m in one machine step: -(m/LM(f)) * R(f)."""
    strategy = get_strategy(strategy)
    i = strategy.choose(m.pp, basis)
    if i is None:
        raise IrreducibleMonomialError(
            f"no basis leading power product divides {tuple(m.pp)}"
        )
    c = m.coefficient
    return [Monomial(c * uc, pp) for uc, pp in _unit_substitution(m.pp, basis, i)]


def _input_monomials(g: Polynomial, basis: Basis) -> list[Monomial]:
    # Deterministic thread order: descending power products.
    return basis.ordering.sorted_terms(g)


class ThreadNode:
    """A node of a reduction thread tree.

    ``children`` is None for an irreducible leaf and a (possibly empty)
    tuple once the node has been expanded by a substitution.
    """

    __slots__ = ("monomial", "children")

    def __init__(self, monomial: Monomial):
        self.monomial = monomial
        self.children: Optional[tuple["ThreadNode", ...]] = None

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    def walk(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if node.children:
                stack.extend(node.children)

    def height(self) -> int:
        """Longest substitution chain from this node down to a leaf."""
        best = 0
        stack = [(self, 0)]
        while stack:
            node, depth = stack.pop()
            if node.children is None:
                best = max(best, depth)
            else:
                # An expanded node counts even if the substitution is empty.
                best = max(best, depth + 1)
                stack.extend((child, depth + 1) for child in node.children)
        return best


@dataclass(frozen=True)
class MachineTrace:
    """A completed reduction machine run."""

    threads: tuple[ThreadNode, ...]
    result: Polynomial
    substitution_count: int
    parallel_depth: int

    def threads_containing(self, pp: PowerProduct) -> int:
        """How many reduction threads have a node at the given power product."""
        return sum(
            1
            for root in self.threads
            if any(node.monomial.pp == pp for node in root.walk())
        )


def run_machine(
    g: Polynomial, basis: Basis, strategy: StrategyLike
) -> MachineTrace:
    """Run the plain reduction machine, keeping the full thread trees.

    One FIFO worklist drives all threads, which yields a breadth-first,
    layer-by-layer execution.  Identical power products in different
    threads are reduced independently; that redundancy is what the
    cached variant removes.
    """
    strategy = get_strategy(strategy)
    roots = tuple(ThreadNode(m) for m in _input_monomials(g, basis))
    queue = deque(roots)
    substitutions = 0
    while queue:
        node = queue.popleft()
        i = strategy.choose(node.monomial.pp, basis)
        if i is None:
            continue  # children stays None: irreducible leaf
        substitutions += 1
        c = node.monomial.coefficient
        children = tuple(
            ThreadNode(Monomial(c * uc, pp))
            for uc, pp in _unit_substitution(node.monomial.pp, basis, i)
        )
        node.children = children
        queue.extend(children)

    acc: dict[PowerProduct, Fraction] = {}
    for root in roots:
        for node in root.walk():
            if node.children is None:
                m = node.monomial
                total = acc.get(m.pp, _ZERO) + m.coefficient
                if total:
                    acc[m.pp] = total
                else:
                    acc.pop(m.pp, None)
    depth = max((root.height() for root in roots), default=0)
    return MachineTrace(
        threads=roots,
        result=Polynomial._from_clean(acc),
        substitution_count=substitutions,
        parallel_depth=depth,
    )


def machine_normal_form(
    g: Polynomial, basis: Basis, strategy: StrategyLike
) -> tuple[Polynomial, int]:
    """Plain machine without trace bookkeeping: worklist of bare monomials."""
    strategy = get_strategy(strategy)
    queue = deque(_input_monomials(g, basis))
    acc: dict[PowerProduct, Fraction] = {}
    substitutions = 0
    while queue:
        m = queue.popleft()
        i = strategy.choose(m.pp, basis)
        if i is None:
            total = acc.get(m.pp, _ZERO) + m.coefficient
            if total:
                acc[m.pp] = total
            else:
                acc.pop(m.pp, None)
            continue
        substitutions += 1
        c = m.coefficient
        queue.extend(
            Monomial(c * uc, pp) for uc, pp in _unit_substitution(m.pp, basis, i)
        )
    return Polynomial._from_clean(acc), substitutions


class Multiple(NamedTuple):
    """One coefficient contribution to a graph vertex.

    A parent-less multiple is an original monomial of the input.  A
    parented multiple contributes ``factor`` per unit of the parent
    vertex's collected total (the factor the substitution applies to
    each unit of the parent's power product).
    """

    factor: Fraction
    parent: Optional[PowerProduct]


@dataclass
class Vertex:
    pp: PowerProduct
    multiples: list[Multiple] = field(default_factory=list)
    reducible: bool = False
    successors: list[PowerProduct] = field(default_factory=list)


class ReductionGraph:
    """Directed graph of power products built by the cached machine.

    Each power product owns exactly one vertex; edges point from a
    reduced (expanded) vertex to the power products of its substitution.
    Every edge strictly decreases the power product, so the graph is
    acyclic and coefficient collection terminates.
    """

    __slots__ = ("vertices", "expansions", "_totals")

    def __init__(self):
        self.vertices: dict[PowerProduct, Vertex] = {}
        self.expansions = 0
        self._totals: dict[PowerProduct, Fraction] = {}

    def vertex(self, pp: PowerProduct) -> Vertex:
        return self.vertices[pp]

    def _get_or_create(self, pp: PowerProduct) -> Vertex:
        v = self.vertices.get(pp)
        if v is None:
            v = Vertex(pp)
            self.vertices[pp] = v
        return v

    def irreducible_vertices(self) -> list[Vertex]:
        return [v for v in self.vertices.values() if not v.reducible]

    def edges(self) -> list[tuple[PowerProduct, PowerProduct]]:
        return [
            (v.pp, dst) for v in self.vertices.values() for dst in v.successors
        ]


def collect_coefficients(vertex: Vertex, graph: ReductionGraph) -> Fraction:
    """Total coefficient reaching a vertex, memoized per power product.

    Parent-less multiples contribute their factor directly; parented
    ones contribute factor times the parent's collected total.
    """
    totals = graph._totals
    ZERO = _ZERO
    stack = [vertex.pp]
    in_progress: set[PowerProduct] = set()
    while stack:
        pp = stack[-1]
        if pp in totals:
            stack.pop()
            continue
        pending = [
            m.parent
            for m in graph.vertices[pp].multiples
            if m.parent is not None and m.parent not in totals
        ]
        if pending:
            if pp not in in_progress:
                in_progress.add(pp)
            for parent in pending:
                if parent in in_progress:
                    raise GraphCycleError(
                        f"cycle through power product {tuple(parent)}"
                    )
            stack.extend(pending)
            continue
        total = ZERO
        for factor, parent in graph.vertices[pp].multiples:
            total += factor if parent is None else factor * totals[parent]
        totals[pp] = total
        in_progress.discard(pp)
        stack.pop()
    return totals[vertex.pp]


def _collect_remainder(graph: ReductionGraph) -> Polynomial:
    acc: dict[PowerProduct, Fraction] = {}
    for v in graph.irreducible_vertices():
        c = collect_coefficients(v, graph)
        if c:  # zero totals are dropped only here, at collection
            acc[v.pp] = c
    return Polynomial._from_clean(acc)


def run_cached_machine(
    g: Polynomial, basis: Basis, strategy: StrategyLike
) -> tuple[Polynomial, ReductionGraph]:
    """Reduction machine with caching over a power-product graph.

    The FIFO worklist holds each power product at most once, so each
    reducible power product is expanded exactly once no matter how many
    threads pass through it.  The returned polynomial equals the plain
    machine's result.
    """
    strategy = get_strategy(strategy)
    graph = ReductionGraph()
    queue: deque[tuple[PowerProduct, Optional[Fraction]]] = deque()
    enqueued: set[PowerProduct] = set()
    for m in _input_monomials(g, basis):
        queue.append((m.pp, m.coefficient))  # marked og via its coefficient
        enqueued.add(m.pp)
    while queue:
        pp, og_coefficient = queue.popleft()
        if og_coefficient is not None:
            graph._get_or_create(pp).multiples.append(
                Multiple(og_coefficient, None)
            )
        i = strategy.choose(pp, basis)
        if i is None:
            graph._get_or_create(pp)
            continue
        # expand: mark the source, wire one multiple and one edge per
        # substitution monomial.
        source = graph._get_or_create(pp)
        source.reducible = True
        graph.expansions += 1
        subs = _unit_substitution(pp, basis, i)
        for factor, target in subs:
            dest = graph._get_or_create(target)
            dest.multiples.append(Multiple(factor, pp))
            source.successors.append(target)
        # update: enqueue only power products never seen before.
        for _, target in subs:
            if target not in enqueued:
                enqueued.add(target)
                queue.append((target, None))
    return _collect_remainder(graph), graph


_IRREDUCIBLE = object()


def _thread_leaves(
    root: Monomial, basis: Basis, strategy, cache: dict, lock: Lock
) -> tuple[dict[PowerProduct, Fraction], int]:
    # One reduction thread; substitutions are resolved through a shared
    # per-power-product cache so concurrent threads never redo them.
    queue = deque([root])
    leaves: dict[PowerProduct, Fraction] = {}
    substitutions = 0
    while queue:
        m = queue.popleft()
        entry = cache.get(m.pp)
        if entry is None:
            i = strategy.choose(m.pp, basis)
            entry = _IRREDUCIBLE if i is None else _unit_substitution(m.pp, basis, i)
            with lock:
                entry = cache.setdefault(m.pp, entry)
        if entry is _IRREDUCIBLE:
            leaves[m.pp] = leaves.get(m.pp, _ZERO) + m.coefficient
            continue
        substitutions += 1
        c = m.coefficient
        queue.extend(Monomial(c * uc, pp) for uc, pp in entry)
    return leaves, substitutions


def parallel_normal_form(
    g: Polynomial, basis: Basis, strategy: StrategyLike, workers: int = 4
) -> tuple[Polynomial, int]:
    """Parallel machine returning the result and the substitution total."""
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    strategy = get_strategy(strategy)
    monomials = _input_monomials(g, basis)
    if not monomials:
        return Polynomial.zero(), 0
    cache: dict[PowerProduct, Optional[tuple]] = {}
    lock = Lock()

    def job(m: Monomial):
        return _thread_leaves(m, basis, strategy, cache, lock)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(job, monomials))

    # Fold in input-monomial order so the result never depends on
    # scheduling.
    acc: dict[PowerProduct, Fraction] = {}
    substitutions = 0
    for leaves, subs in outcomes:
        substitutions += subs
        for pp, c in leaves.items():
            total = acc.get(pp, _ZERO) + c
            if total:
                acc[pp] = total
            else:
                acc.pop(pp, None)
    return Polynomial._from_clean(acc), substitutions


def run_parallel_machine(
    g: Polynomial, basis: Basis, strategy: StrategyLike, workers: int = 4
) -> Polynomial:
    """Run the reduction machine with its threads spread over a worker pool."""
    result, _ = parallel_normal_form(g, basis, strategy, workers)
    return result
