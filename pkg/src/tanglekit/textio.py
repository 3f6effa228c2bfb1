"""Text grammar for tangle expressions, plus fraction and vector codecs.

Grammar (whitespace insignificant, + and * left-associative, unary tightest):

    expr   := term {"+" term}
    term   := factor {"*" factor}
    factor := "-" factor | "1/" factor | "rot" "(" expr ")"
            | "(" expr ")" | atom
    atom   := "[" INT "]" | "[inf]" | cfvec
    cfvec  := "[[" INT "]" {"," "[" INT "]"} "]"

"1/" doubles as vertical-tangle notation and tangle inversion; the two
coincide for rational tangles. A cfvec atom desugars to the right-nested
sum-of-inverses expression it abbreviates.
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import ParseError, SourceSpan
from .fraction import Fraction
from .tangle import (
    Infinity,
    IntTangle,
    Invert,
    Mirror,
    Prod,
    Rotate,
    Sum,
    TangleExpr,
    Zero,
    int_tangle,
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, *expected: str, start: int | None = None) -> ParseError:
        if start is None:
            start = self.pos
        end = min(start + 1, len(self.text))
        return ParseError(message, start, end, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'", ch)
        self.pos += 1

    def parse(self) -> TangleExpr:
        expr = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input after expression", "end of input")
        return expr

    def parse_expr(self) -> TangleExpr:
        node = self.parse_term()
        while self.peek() == "+":
            self.pos += 1
            node = Sum(node, self.parse_term())
        return node

    def parse_term(self) -> TangleExpr:
        node = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            node = Prod(node, self.parse_factor())
        return node

    def parse_factor(self) -> TangleExpr:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return Mirror(self.parse_factor())
        if ch == "1":
            self.pos += 1
            self.take("/")
            return Invert(self.parse_factor())
        if self.text.startswith("rot", self.pos):
            self.pos += 3
            self.take("(")
            inner = self.parse_expr()
            self.take(")")
            return Rotate(inner)
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.take(")")
            return inner
        if ch == "[":
            return self.parse_atom()
        raise self.error("expected a tangle factor", "-", "1/", "rot", "(", "[")

    def parse_atom(self) -> TangleExpr:
        self.take("[")
        if self.peek() == "[":
            return self.parse_cfvec()
        if self.text.startswith("inf", self.pos):
            self.pos += 3
            self.take("]")
            return Infinity()
        n = self.parse_int()
        self.take("]")
        return int_tangle(n)

    def parse_cfvec(self) -> TangleExpr:
        terms = [self.parse_bracketed_int()]
        while self.peek() == ",":
            self.pos += 1
            terms.append(self.parse_bracketed_int())
        self.take("]")
        return cf_expr(terms)

    def parse_bracketed_int(self) -> int:
        self.take("[")
        n = self.parse_int()
        self.take("]")
        return n

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        lexeme = self.text[start : self.pos]
        if not lexeme or lexeme == "-":
            raise self.error("expected an integer", "integer", start=start)
        return int(lexeme)


def cf_expr(terms: Sequence[int]) -> TangleExpr:
    """The expression a continued-fraction vector abbreviates:
    [a1] + 1/([a2] + 1/(... [an]))."""
    terms = list(terms)
    node: TangleExpr = int_tangle(terms[-1])
    for a in reversed(terms[:-1]):
        node = Sum(int_tangle(a), Invert(node))
    return node


def parse_tangle(text: str) -> TangleExpr:
    """Parse the grammar above into an expression tree."""
    return _Parser(text).parse()


def print_tangle(t: TangleExpr) -> str:
    """Fully parenthesized text; parsing it back rebuilds t exactly."""
    return _print(t, top=True)


def _print(t: TangleExpr, top: bool = False) -> str:
    match t:
        case Zero():
            return "[0]"
        case Infinity():
            return "[inf]"
        case IntTangle(n):
            return f"[{n}]"
        case Mirror(inner):
            return "-" + _print(inner)
        case Invert(inner):
            return "1/" + _print(inner)
        case Rotate(inner):
            return "rot(" + _print(inner, top=True) + ")"
        case Sum(left, right):
            s = _print(left) + "+" + _print(right)
            return s if top else "(" + s + ")"
        case Prod(left, right):
            s = _print(left) + "*" + _print(right)
            return s if top else "(" + s + ")"
    raise TypeError(f"not a tangle expression: {t!r}")


_FRACTION_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?\Z")


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q", "p", or "inf" into an exact fraction."""
    if text.strip() == "inf":
        return Fraction(1, 0)
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ParseError("not a fraction", 0, len(text), ("p/q", "p", "inf"))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if num == 0 and den == 0:
        raise ParseError("0/0 is not a fraction", 0, len(text), ("p/q",))
    return Fraction(num, den)


def format_cf_tangle(terms: Sequence[int]) -> str:
    """Vector as continued-fraction tangle notation: [[1],[1],[4]]."""
    return "[" + ",".join(f"[{a}]" for a in terms) + "]"


def parse_cli_expr(text: str) -> TangleExpr:
    """Expression text, accepting the cf:2,-3,5 shorthand as well."""
    if text.startswith("cf:"):
        body = text[3:]
        try:
            terms = [int(part) for part in body.split(",")]
        except ValueError:
            raise ParseError("cf: expects comma-separated integers", 3, len(text), ("integer",)) from None
        return parse_tangle(format_cf_tangle(terms))
    return parse_tangle(text)
