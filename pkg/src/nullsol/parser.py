"""Recursive-descent parser for polynomial PDE symbols.

Grammar (no implicit multiplication; ``^`` binds tighter than unary minus,
``*`` tighter than ``+``/``-``)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := 'T' | 'X' uint | 'i' | rational | '(' expr ')' | '-' factor
    rational := uint ('/' uint)?

Variables are the spatial ``X1 .. Xd`` (1-based), the time variable ``T``
and the imaginary unit ``i``.  In lattice-periodic mode the reserved
constant symbol ``PI`` is also admitted; it occupies an extra slot placed
just before T, so the time variable stays the last slot.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .gaussian import GaussianRational, I, ONE
from .multipoly import MultiPoly


class ParseErrorKind(Enum):
    UNEXPECTED_TOKEN = "UnexpectedToken"
    UNKNOWN_SYMBOL = "UnknownSymbol"
    BAD_EXPONENT = "BadExponent"
    DIMENSION_EXCEEDED = "DimensionExceeded"


class ParseError(Exception):
    """Input rejected; carries the byte offset of the offending token."""

    def __init__(self, position: int, kind: ParseErrorKind, message: str):
        super().__init__(f"{kind.value} at position {position}: {message}")
        self.position = position
        self.kind = kind
        self.message = message


class _Tok:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind  # 'int', 'op', 'T', 'X', 'i', 'PI', 'end'
        self.value = value
        self.pos = pos


def _tokenize(text: str, allow_pi: bool) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append(_Tok("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word == "T":
                toks.append(_Tok("T", None, i))
            elif word == "i":
                toks.append(_Tok("i", None, i))
            elif word == "PI":
                if not allow_pi:
                    raise ParseError(i, ParseErrorKind.UNKNOWN_SYMBOL,
                                     "PI is only admitted in lattice-periodic mode")
                toks.append(_Tok("PI", None, i))
            elif word == "X":
                k = j
                while k < n and text[k].isdigit():
                    k += 1
                if k == j:
                    raise ParseError(i, ParseErrorKind.UNKNOWN_SYMBOL,
                                     "X must be followed by a 1-based index")
                idx = int(text[j:k])
                if idx < 1:
                    raise ParseError(i, ParseErrorKind.UNKNOWN_SYMBOL,
                                     "X indices are 1-based")
                toks.append(_Tok("X", idx, i))
                i = k
                continue
            else:
                raise ParseError(i, ParseErrorKind.UNKNOWN_SYMBOL,
                                 f"unknown symbol {word!r}")
            i = j
            continue
        raise ParseError(i, ParseErrorKind.UNKNOWN_SYMBOL,
                         f"unexpected character {ch!r}")
    toks.append(_Tok("end", None, n))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], nvars: int, dim: int, pi_slot: int | None):
        self.toks = toks
        self.k = 0
        self.nvars = nvars
        self.dim = dim
        self.pi_slot = pi_slot  # slot index for PI, or None

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def next(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect_op(self, ch: str):
        t = self.next()
        if t.kind != "op" or t.value != ch:
            raise ParseError(t.pos, ParseErrorKind.UNEXPECTED_TOKEN,
                             f"expected {ch!r}")

    def parse_expr(self) -> MultiPoly:
        acc = self.parse_term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.next()
                rhs = self.parse_term()
                acc = acc + rhs if t.value == "+" else acc - rhs
            else:
                return acc

    def parse_term(self) -> MultiPoly:
        acc = self.parse_factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "*":
                self.next()
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> MultiPoly:
        base = self.parse_base()
        t = self.peek()
        if t.kind == "op" and t.value == "^":
            self.next()
            e = self.peek()
            if e.kind != "int":
                raise ParseError(e.pos, ParseErrorKind.BAD_EXPONENT,
                                 "exponent must be a nonnegative integer literal")
            self.next()
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "/":
                raise ParseError(nxt.pos, ParseErrorKind.BAD_EXPONENT,
                                 "fractional exponents are not allowed")
            return base ** e.value
        return base

    def parse_base(self) -> MultiPoly:
        t = self.next()
        if t.kind == "T":
            return MultiPoly.variable(self.nvars, self.nvars - 1)
        if t.kind == "X":
            if t.value > self.dim:
                raise ParseError(t.pos, ParseErrorKind.DIMENSION_EXCEEDED,
                                 f"X{t.value} exceeds declared dimension {self.dim}")
            return MultiPoly.variable(self.nvars, t.value - 1)
        if t.kind == "PI":
            return MultiPoly.variable(self.nvars, self.pi_slot)
        if t.kind == "i":
            return MultiPoly.constant(self.nvars, I)
        if t.kind == "int":
            num = t.value
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "/":
                self.next()
                den = self.next()
                if den.kind != "int" or den.value == 0:
                    raise ParseError(den.pos, ParseErrorKind.UNEXPECTED_TOKEN,
                                     "expected nonzero integer denominator")
                return MultiPoly.constant(self.nvars, Fraction(num, den.value))
            return MultiPoly.constant(self.nvars, num)
        if t.kind == "op" and t.value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if t.kind == "op" and t.value == "-":
            return -self.parse_factor()
        raise ParseError(t.pos, ParseErrorKind.UNEXPECTED_TOKEN,
                         f"unexpected token at start of operand")


def infer_dimension(text: str, allow_pi: bool = False) -> int:
    """Highest Xk index appearing in the input (0 if none)."""
    toks = _tokenize(text, allow_pi)
    return max((t.value for t in toks if t.kind == "X"), default=0)


def parse(text: str, dim: int | None = None, allow_pi: bool = False) -> tuple[MultiPoly, int]:
    """Parse an expression into a MultiPoly; returns (poly, spatial dim).

    Without PI the result has ``dim + 1`` slots (X1..Xd, T).  With
    ``allow_pi`` it always has ``dim + 2`` slots (X1..Xd, PI, T), whether
    or not PI occurs.  Raises :class:`ParseError` on invalid input.
    """
    toks = _tokenize(text, allow_pi)
    if dim is None:
        dim = max((t.value for t in toks if t.kind == "X"), default=0)
    nvars = dim + 2 if allow_pi else dim + 1
    pi_slot = dim if allow_pi else None
    p = _Parser(toks, nvars, dim, pi_slot)
    poly = p.parse_expr()
    end = p.next()
    if end.kind != "end":
        raise ParseError(end.pos, ParseErrorKind.UNEXPECTED_TOKEN,
                         "trailing input after expression")
    return poly, dim


# -- canonical printing ---------------------------------------------------

def default_names(nvars: int, t_last: bool = True, pi_slot: int | None = None) -> list[str]:
    names = [f"X{k + 1}" for k in range(nvars)]
    if pi_slot is not None:
        names[pi_slot] = "PI"
    if t_last and nvars > 0:
        names[-1] = "T"
    return names


def _rational_str(q: Fraction) -> str:
    return str(q)


def _coeff_str(c: GaussianRational) -> str:
    if c.im == 0:
        return _rational_str(c.re)
    if c.re == 0:
        return f"{_rational_str(c.im)}*i"
    sign = "+" if c.im > 0 else "-"
    return f"({_rational_str(c.re)}{sign}{_rational_str(abs(c.im))}*i)"


def print_canonical(p: MultiPoly, names: list[str] | None = None) -> str:
    """Canonical text form: graded-lex descending; re-parses to ``p``."""
    if names is None:
        names = default_names(p.nvars)
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps) if e > 0
        )
        if not mono:
            s = _coeff_str(c)
        elif c.is_one():
            s = mono
        elif c == GaussianRational(-1):
            s = f"-{mono}"
        else:
            s = f"{_coeff_str(c)}*{mono}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += f" - {s[1:]}"
        else:
            out += f" + {s}"
    return out
