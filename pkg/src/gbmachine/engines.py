"""Uniform interface over the four normal-form engines.

Every engine maps (polynomial, basis, strategy) to the same normal form;
they differ in how the work is organized and in what their step counter
measures: reduction steps for the classic algorithm, substitutions for
the plain and parallel machines, expansions for the cached machine.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Union

from .machine import machine_normal_form, parallel_normal_form, run_cached_machine
from .poly import Polynomial
from .reduction import Basis, StrategyLike, classic_reduce


class UnknownEngineError(ValueError):
    """The engine name is not one of classic, machine, cached, parallel."""


class ReductionOutcome(NamedTuple):
    normal_form: Polynomial
    steps: int


EngineFn = Callable[[Polynomial, Basis, StrategyLike], ReductionOutcome]

ENGINE_NAMES = ("classic", "machine", "cached", "parallel")

# Short labels used in benchmark output.
ENGINE_LABELS = {
    "classic": "C",
    "machine": "RM",
    "cached": "RMc",
    "parallel": "RMp",
}


def _classic(g, basis, strategy):
    return ReductionOutcome(*classic_reduce(g, basis, strategy))


def _machine(g, basis, strategy):
    return ReductionOutcome(*machine_normal_form(g, basis, strategy))


def _cached(g, basis, strategy):
    result, graph = run_cached_machine(g, basis, strategy)
    return ReductionOutcome(result, graph.expansions)


def _parallel_factory(workers: int) -> EngineFn:
    def run(g, basis, strategy):
        return ReductionOutcome(*parallel_normal_form(g, basis, strategy, workers))

    return run


EngineLike = Union[str, EngineFn]


def get_engine(spec: EngineLike, workers: int = 4) -> EngineFn:
    """Resolve an engine name (or pass through a callable)."""
    if callable(spec):
        return spec
    name = spec.strip().lower()
    if name == "classic":
        return _classic
    if name == "machine":
        return _machine
    if name == "cached":
        return _cached
    if name == "parallel":
        return _parallel_factory(workers)
    raise UnknownEngineError(
        f"unknown engine {spec!r}; expected one of {', '.join(ENGINE_NAMES)}"
    )
