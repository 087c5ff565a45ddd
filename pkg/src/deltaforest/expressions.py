"""Text grammar for monomials.

    input   := "n=" INT ";" product
    product := "1" | factor ("*" factor)*
    factor  := "d(" part "|" part ")" ("^" INT)?
    part    := INT ("," INT)*

Whitespace is ignored between tokens.  Example::

    n=9; d(1,2,3|4,5,6,7,8,9)^3 * d(1,2,3,4,5|6,7,8,9)

Repeated occurrences of the same cut accumulate exponents.  Rendering is
canonical (factors sorted, exponent 1 omitted), so parse and render are
mutually inverse on canonical text.
"""
from __future__ import annotations

from .model import InvalidCutError, Monomial, canonicalize_cut


class ParseError(ValueError):
    """Malformed monomial text; ``position`` is the offending 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, literal: str) -> bool:
        if self.peek() == literal:
            self.pos += 1
            return True
        return False

    def expect(self, literal: str):
        if not self.eat(literal):
            raise ParseError(f"expected '{literal}'", self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def end(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError("unexpected trailing input", self.pos)


def parse_monomial(text: str) -> Monomial:
    """Parse monomial text into a canonical :class:`Monomial`.

    Degree is not checked here; monomials of any degree parse and are left
    to :func:`~deltaforest.model.classify`.
    """
    s = _Scanner(text)
    s.expect("n")
    s.expect("=")
    n_pos = s.pos
    n = s.integer()
    if n < 1:
        raise ParseError("n must be positive", n_pos)
    s.expect(";")

    factors: list[tuple] = []
    if s.peek() == "1":
        s.eat("1")
    else:
        factors.append(_factor(s, n))
        while s.eat("*"):
            factors.append(_factor(s, n))
    s.end()
    return Monomial(n, factors)


def _factor(s: _Scanner, n: int):
    s.skip_ws()
    start = s.pos
    s.expect("d")
    s.expect("(")
    part_a = _part(s, n)
    s.expect("|")
    part_b = _part(s, n)
    s.expect(")")
    exponent = 1
    if s.eat("^"):
        s.skip_ws()
        exp_pos = s.pos
        exponent = s.integer()
        if exponent < 1:
            raise ParseError("exponent must be positive", exp_pos)
    try:
        cut = canonicalize_cut(part_a, part_b, n)
    except InvalidCutError as err:
        raise ParseError(str(err), start) from err
    return cut, exponent


def _part(s: _Scanner, n: int) -> frozenset:
    s.skip_ws()
    start = s.pos
    labels = set()
    while True:
        label_pos = s.pos
        label = s.integer()
        if not 1 <= label <= n:
            raise ParseError(f"label {label} outside 1..{n}", label_pos)
        if label in labels:
            raise ParseError(f"duplicate label {label} in part", label_pos)
        labels.add(label)
        if not s.eat(","):
            break
    if len(labels) < 2:
        raise ParseError("a part needs at least 2 labels", start)
    return frozenset(labels)


def render_monomial(m: Monomial) -> str:
    """Canonical text for a monomial; inverse of :func:`parse_monomial`."""
    if not m.factors:
        return f"n={m.n}; 1"
    parts = []
    for cut, exp in m.sorted_factors():
        parts.append(str(cut) if exp == 1 else f"{cut}^{exp}")
    return f"n={m.n}; " + " * ".join(parts)
