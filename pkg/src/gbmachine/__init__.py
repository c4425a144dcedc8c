"""Polynomial reduction machines and Groebner bases over exact rationals."""

from .poly import (
    Monomial,
    NotDivisibleError,
    Polynomial,
    PowerProduct,
    Ring,
    RingMismatchError,
)
from .ordering import (
    ADMISSIBLE_KINDS,
    Decomposition,
    NotAdmissibleError,
    OrderKind,
    Ordering,
    UnknownOrderingError,
    ZeroPolynomialError,
)
from .reduction import (
    FIRST_DIVISOR,
    MAX_LPP,
    Basis,
    NodeBudgetExceeded,
    SelectionStrategy,
    classic_reduce,
    default_strategies,
    enumerate_branches,
    get_strategy,
    is_normal_form,
    reduce_step,
    reduce_with_cofactors,
)
from .machine import (
    MachineTrace,
    ReductionGraph,
    collect_coefficients,
    machine_normal_form,
    parallel_normal_form,
    run_cached_machine,
    run_machine,
    run_parallel_machine,
    substitution,
)
from .engines import ENGINE_LABELS, ENGINE_NAMES, ReductionOutcome, get_engine
from .groebner import (
    CriticalPair,
    GroebnerResult,
    GroebnerStats,
    buchberger,
    congruent,
    ideal_member,
    inter_reduce,
    is_groebner,
    spol,
)
from .text import (
    PolynomialSyntaxError,
    format_basis,
    format_polynomial,
    format_power_product,
    format_reduction_graph,
    parse_polynomial,
    read_problem_file,
)
from .corpus import ProblemSpec, corpus, problem
from .bench import BasisMismatchError, BenchConfig, BenchRecord, BenchReport, run_bench

__version__ = "0.1.0"
