"""Benchmark runner comparing the reduction engines over the corpus.

Each (problem, engine) cell times the full Groebner-basis computation on
a monotonic clock, discarding warmup runs.  After every problem the
reduced bases produced by the different engines are checked for set
equality; a mismatch is a correctness bug and aborts the run.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .corpus import ProblemSpec, corpus
from .engines import ENGINE_LABELS
from .groebner import buchberger
from .ordering import OrderKind, Ordering

CSV_COLUMNS = ("problem", "engine", "ordering", "mean_ns", "median_ns", "basis_size", "steps")


class BasisMismatchError(RuntimeError):
    """Two engines computed different reduced bases for the same problem."""


@dataclass
class BenchConfig:
    runs: int = 1000
    warmup: int = 1
    ordering: OrderKind = OrderKind.GRLEX
    mode: str = "improved"
    engines: Sequence[str] = ("classic", "machine", "cached")
    strategy: str = "first"
    output: str = "bench.csv"
    problems: Optional[Sequence[int]] = None  # None means the full corpus

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        if self.warmup < 0:
            raise ValueError("warmup cannot be negative")
        if not self.engines:
            raise ValueError("need at least one engine")


@dataclass
class BenchRecord:
    problem: int
    engine: str  # short label: C, RM, RMc, RMp
    ordering: str
    mean_ns: int
    median_ns: int
    basis_size: int
    steps: int
    error: Optional[str] = None


@dataclass
class BenchReport:
    records: list[BenchRecord] = field(default_factory=list)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            if r.error is not None:
                continue
            writer.writerow(
                [r.problem, r.engine, r.ordering, r.mean_ns, r.median_ns, r.basis_size, r.steps]
            )
        return out.getvalue()

    def to_table(self) -> str:
        """Aligned text table with per-problem timing relative to the
        fastest engine."""
        fastest: dict[int, int] = {}
        for r in self.records:
            if r.error is None:
                best = fastest.get(r.problem)
                if best is None or r.mean_ns < best:
                    fastest[r.problem] = r.mean_ns
        header = ("problem", "engine", "mean_ns", "median_ns", "rel", "basis", "steps")
        rows = [header]
        for r in self.records:
            if r.error is not None:
                rows.append((str(r.problem), r.engine, "error", r.error, "", "", ""))
                continue
            rel = r.mean_ns / fastest[r.problem] if fastest[r.problem] else 1.0
            rows.append(
                (
                    str(r.problem),
                    r.engine,
                    str(r.mean_ns),
                    str(r.median_ns),
                    f"{rel:.2f}",
                    str(r.basis_size),
                    str(r.steps),
                )
            )
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
        )


def _selected_problems(config: BenchConfig) -> list[ProblemSpec]:
    if config.problems is None:
        return list(corpus())
    wanted = set(config.problems)
    selected = [p for p in corpus() if p.id in wanted]
    missing = wanted - {p.id for p in selected}
    if missing:
        raise ValueError(f"unknown problem ids: {sorted(missing)}")
    return selected


def run_bench(config: BenchConfig) -> BenchReport:
    report = BenchReport()
    for spec in _selected_problems(config):
        ring = spec.ring()
        generators = spec.polynomials()
        ordering = Ordering(config.ordering, ring)
        bases: dict[str, frozenset] = {}
        for engine in config.engines:
            label = ENGINE_LABELS.get(engine, engine)
            try:
                def compute():
                    return buchberger(
                        generators,
                        ordering,
                        mode=config.mode,
                        engine=engine,
                        strategy=config.strategy,
                    )

                for _ in range(config.warmup):
                    compute()
                times = []
                result = None
                for _ in range(config.runs):
                    start = time.perf_counter_ns()
                    result = compute()
                    times.append(time.perf_counter_ns() - start)
                bases[label] = frozenset(result.basis)
                report.records.append(
                    BenchRecord(
                        problem=spec.id,
                        engine=label,
                        ordering=config.ordering.value,
                        mean_ns=int(statistics.fmean(times)),
                        median_ns=int(statistics.median(times)),
                        basis_size=len(result.basis),
                        steps=result.stats.reduction_steps,
                    )
                )
            except Exception as exc:  # engine failure is recorded, not fatal
                report.records.append(
                    BenchRecord(
                        problem=spec.id,
                        engine=label,
                        ordering=config.ordering.value,
                        mean_ns=0,
                        median_ns=0,
                        basis_size=0,
                        steps=0,
                        error=f"{type(exc).__name__}: {exc}",
                    )
                )
        distinct = set(bases.values())
        if len(distinct) > 1:
            raise BasisMismatchError(
                f"problem {spec.id}: engines disagree on the reduced basis: "
                + ", ".join(f"{label}={len(b)} elements" for label, b in bases.items())
            )
    return report
