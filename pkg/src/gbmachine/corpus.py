"""The embedded 20-problem benchmark corpus."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .poly import Polynomial, Ring
from .text import parse_polynomial


@dataclass(frozen=True)
class ProblemSpec:
    id: int
    source: str
    variables: tuple[str, ...]
    generators: tuple[str, ...]

    def ring(self) -> Ring:
        return Ring(self.variables)

    def polynomials(self) -> list[Polynomial]:
        ring = self.ring()
        return [parse_polynomial(text, ring) for text in self.generators]


@lru_cache(maxsize=1)
def corpus() -> tuple[ProblemSpec, ...]:
    """The 20 benchmark problems, ordered by id."""
    raw = resources.files("gbmachine.data").joinpath("problems.json").read_text()
    problems = tuple(
        ProblemSpec(
            id=entry["id"],
            source=entry["source"],
            variables=tuple(entry["variables"]),
            generators=tuple(entry["generators"]),
        )
        for entry in json.loads(raw)
    )
    ids = [p.id for p in problems]
    if ids != sorted(set(ids)):
        raise ValueError("corpus ids must be unique and ascending")
    return problems


def problem(problem_id: int) -> ProblemSpec:
    for spec in corpus():
        if spec.id == problem_id:
            return spec
    raise ValueError(f"no corpus problem with id {problem_id}")
