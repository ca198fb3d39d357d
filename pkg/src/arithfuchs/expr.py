"""A small expression language for exact field elements.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ['-'] power
    power := atom ['^' ['-'] integer]
    atom  := integer | name | 'cos(' rational ')' | 'sin(' rational ')' | '(' expr ')'

Trig arguments are fractions of a full turn: ``cos(1/7)`` is cos(2 pi/7).
Offsets in errors are 1-based character positions.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloElement, cos_element, sin_element


class ParseError(ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        exp = f" (expected {' or '.join(repr(e) for e in self.expected)})" if self.expected else ""
        super().__init__(f"offset {offset}: {message}{exp}")


class EvaluationError(ValueError):
    pass


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Trig:
    fn: str  # "cos" or "sin"
    turn: Fraction


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- scanner ------------------------------------------------------------------

_OPS = set("+-*/^()")


def _tokens(src):
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            yield ("int", src[i:j], i + 1)
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            yield ("name", src[i:j], i + 1)
            i = j
        elif ch in _OPS:
            yield ("op", ch, i + 1)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i + 1)
    yield ("end", "", n + 1)


class _Parser:
    def __init__(self, src):
        self.toks = list(_tokens(src))
        self.pos = 0

    @property
    def tok(self):
        return self.toks[self.pos]

    def advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def at(self, text):
        kind, val, _ = self.tok
        return kind == "op" and val == text

    def expect(self, text):
        if not self.at(text):
            self.fail({text})
        return self.advance()

    def fail(self, expected):
        kind, val, off = self.tok
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", off, expected)

    def integer(self):
        if self.tok[0] != "int":
            self.fail({"integer"})
        return int(self.advance()[1])

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            return Pow(base, sign * self.integer())
        return base

    def rational(self):
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        num = self.integer()
        den = 1
        if self.at("/"):
            self.advance()
            off = self.tok[2]
            den = self.integer()
            if den == 0:
                raise ParseError("zero denominator", off)
        return sign * Fraction(num, den)

    def atom(self):
        kind, val, _ = self.tok
        if kind == "int":
            return Num(int(self.advance()[1]))
        if kind == "name":
            self.advance()
            if val in ("cos", "sin") and self.at("("):
                self.advance()
                turn = self.rational()
                self.expect(")")
                return Trig(val, turn)
            return Name(val)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail({"integer", "name", "cos(", "sin(", "("})


def parse_element(src):
    p = _Parser(src)
    node = p.expr()
    if p.tok[0] != "end":
        p.fail({"+", "-", "*", "/", "^", "end of input"})
    return node


# -- printing -----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node):
    """Canonical text; parse_element(to_text(t)) == t."""
    return _show(node, 0)


def _show(node, ctx):
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Trig):
        return f"{node.fn}({node.turn})"
    if isinstance(node, Pow):
        text = f"{_show(node.base, 4)}^{node.exponent}"
        return f"({text})" if ctx > 3 else text
    if isinstance(node, Neg):
        inner = _show(node.operand, 4 if isinstance(node.operand, (Neg, BinOp)) else 3)
        text = "-" + inner
        return f"({text})" if ctx > 2 else text
    prec = _PREC[node.op]
    text = f"{_show(node.left, prec)} {node.op} {_show(node.right, prec + 1)}"
    return f"({text})" if ctx > prec else text


# -- evaluation ---------------------------------------------------------------


def evaluate(node, names=None):
    """Exact value as a CycloElement; ``names`` maps identifiers to elements."""
    names = names or {}
    if isinstance(node, Num):
        return CycloElement.rational(node.value)
    if isinstance(node, Name):
        if node.name not in names:
            known = ", ".join(sorted(names)) or "none"
            raise EvaluationError(f"unknown name {node.name!r} (known: {known})")
        return names[node.name]
    if isinstance(node, Trig):
        q = node.turn
        f = cos_element if node.fn == "cos" else sin_element
        return f(q.numerator, q.denominator)
    if isinstance(node, Neg):
        return -evaluate(node.operand, names)
    if isinstance(node, Pow):
        base = evaluate(node.base, names)
        if node.exponent < 0 and not base:
            raise EvaluationError("zero raised to a negative power")
        return base ** node.exponent
    left, right = evaluate(node.left, names), evaluate(node.right, names)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if not right:
        raise EvaluationError("division by zero")
    return left / right


def evaluate_text(src, names=None):
    return evaluate(parse_element(src), names)
