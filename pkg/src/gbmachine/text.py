"""Polynomial text format: parsing, printing and problem files.

Grammar (whitespace insensitive)::

    polynomial := ['+'|'-'] term (('+'|'-') term)*
    term       := rational ['*' factors] | rational factors | factors
    factors    := factor ('*' factor)*
    factor     := variable ['^' natural]
    rational   := integer ['/' positive-integer]

An implicit '*' is accepted between a coefficient and the first variable
("2x" means "2*x").  Printing uses the same syntax, so parsing a printed
polynomial gives back the original.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .machine import MachineTrace, ReductionGraph, ThreadNode
from .ordering import Ordering
from .poly import Polynomial, PowerProduct, Ring


class PolynomialSyntaxError(ValueError):
    """Parse failure, carrying the offending position (0-based)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def digits(self) -> str:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def identifier(self) -> str:
        start = self.pos
        if not (self.peek().isalpha() or self.peek() == "_"):
            return ""
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        return self.text[start : self.pos]


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse a polynomial in the grammar above over the given ring."""
    s = _Scanner(text)
    terms: list[tuple[Fraction, PowerProduct]] = []
    s.skip_ws()
    if not s.peek():
        raise PolynomialSyntaxError("empty polynomial", s.pos)
    sign = 1
    if s.peek() in "+-":
        sign = -1 if s.take() == "-" else 1
    while True:
        coeff, pp = _parse_term(s, ring)
        terms.append((sign * coeff, pp))
        s.skip_ws()
        ch = s.peek()
        if not ch:
            break
        if ch not in "+-":
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", s.pos)
        sign = -1 if s.take() == "-" else 1
    return Polynomial((pp, c) for c, pp in terms)


def _parse_term(s: _Scanner, ring: Ring) -> tuple[Fraction, PowerProduct]:
    s.skip_ws()
    coeff = Fraction(1)
    exponents = [0] * ring.nvars

    if s.peek().isdigit():
        coeff = _parse_rational(s)
        s.skip_ws()
        if s.peek() == "*":
            s.take()
            _parse_factor(s, ring, exponents)
        elif s.peek().isalpha() or s.peek() == "_":
            _parse_factor(s, ring, exponents)  # implicit '*'
        else:
            return coeff, PowerProduct(exponents)
    else:
        _parse_factor(s, ring, exponents)

    while True:
        s.skip_ws()
        if s.peek() == "*":
            s.take()
            _parse_factor(s, ring, exponents)
        else:
            break
    return coeff, PowerProduct(exponents)


def _parse_rational(s: _Scanner) -> Fraction:
    start = s.pos
    num = s.digits()
    if not num:
        raise PolynomialSyntaxError("expected a number", s.pos)
    s.skip_ws()
    if s.peek() != "/":
        return Fraction(int(num))
    s.take()
    s.skip_ws()
    den = s.digits()
    if not den or int(den) == 0:
        raise PolynomialSyntaxError("malformed rational", start)
    return Fraction(int(num), int(den))


def _parse_factor(s: _Scanner, ring: Ring, exponents: list[int]) -> None:
    s.skip_ws()
    start = s.pos
    name = s.identifier()
    if not name:
        raise PolynomialSyntaxError("expected a variable", s.pos)
    try:
        idx = ring.index(name)
    except ValueError:
        raise PolynomialSyntaxError(f"unknown variable {name!r}", start) from None
    exp = 1
    s.skip_ws()
    if s.peek() == "^":
        s.take()
        s.skip_ws()
        digits = s.digits()
        if not digits:
            raise PolynomialSyntaxError("expected an exponent", s.pos)
        exp = int(digits)
    exponents[idx] += exp


def format_power_product(pp: PowerProduct, ring: Ring) -> str:
    if pp.is_unit:
        return "1"
    parts = []
    for name, e in zip(ring.variables, pp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_term(coeff: Fraction, pp: PowerProduct, ring: Ring) -> str:
    mag = abs(coeff)
    if pp.is_unit:
        return str(mag)
    body = format_power_product(pp, ring)
    return body if mag == 1 else f"{mag}*{body}"


def format_polynomial(p: Polynomial, ordering: Ordering) -> str:
    """Render with strictly descending terms; round-trips through the parser."""
    if p.is_zero:
        return "0"
    ring = ordering.ring
    out = []
    for coeff, pp in ordering.sorted_terms(p):
        if not out:
            sign = "-" if coeff < 0 else ""
        else:
            sign = " - " if coeff < 0 else " + "
        out.append(f"{sign}{_format_term(coeff, pp, ring)}")
    return "".join(out)


def format_reduction_graph(graph: ReductionGraph, ordering: Ordering) -> str:
    """Graph description: one line per vertex ``pp | multiples``, then one
    line per edge ``pp -> pp``."""
    ring = ordering.ring
    key = ordering.sort_key
    lines = []
    pps = sorted(graph.vertices, key=key, reverse=True)
    for pp in pps:
        v = graph.vertices[pp]
        rendered = []
        for factor, parent in v.multiples:
            if parent is None:
                rendered.append(str(factor))
            else:
                rendered.append(f"{factor}*({format_power_product(parent, ring)})")
        lines.append(f"{format_power_product(pp, ring)} | {', '.join(rendered)}")
    for pp in pps:
        src = format_power_product(pp, ring)
        for dst in graph.vertices[pp].successors:
            lines.append(f"{src} -> {format_power_product(dst, ring)}")
    return "\n".join(lines)


def format_machine_trace(trace: MachineTrace, ordering: Ordering) -> str:
    """Indented rendering of every reduction thread tree."""
    ring = ordering.ring
    lines = [
        f"substitutions: {trace.substitution_count}",
        f"parallel depth: {trace.parallel_depth}",
    ]

    def emit(node: ThreadNode, indent: int) -> None:
        coeff, pp = node.monomial
        term = _format_term(abs(coeff), pp, ring)
        sign = "-" if coeff < 0 else ""
        marker = "" if node.is_leaf else " ->"
        lines.append(f"{'  ' * indent}{sign}{term}{marker}")
        if node.children:
            for child in node.children:
                emit(child, indent + 1)

    for i, root in enumerate(trace.threads):
        lines.append(f"thread {i + 1}:")
        emit(root, 1)
    return "\n".join(lines)


def read_problem_file(path) -> tuple[Ring, list[Polynomial]]:
    """Read a problem file: ``vars: x,y,z`` then one generator per line.

    Blank lines and ``#`` comments are ignored.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    ring = None
    polys = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            if not line.lower().startswith("vars:"):
                raise ValueError(
                    f"{path}:{lineno}: expected a 'vars:' line before generators"
                )
            names = [n.strip() for n in line[5:].split(",") if n.strip()]
            ring = Ring(names)
            continue
        try:
            polys.append(parse_polynomial(line, ring))
        except PolynomialSyntaxError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    if ring is None:
        raise ValueError(f"{path}: missing 'vars:' line")
    return ring, polys


def format_basis(polys: Sequence[Polynomial], ordering: Ordering) -> str:
    return "\n".join(format_polynomial(p, ordering) for p in polys)
