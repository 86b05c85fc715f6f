"""Text syntax for algebra and tensor expressions.

Grammar (adjoint binds tightest, then multiplication, then ``ox``, then
``+``/``-``)::

    expr    := signed (('+' | '-') signed)*
    signed  := '-' signed | tprod
    tprod   := term ['ox' term]
    term    := factor (['*'] factor)*
    factor  := atom "'"*
    atom    := NUMBER ['/' NUMBER] | WORD | NAME | 'e' | '(' expr ')'

A WORD is a run of the letters ``a`` and ``b``; ``ab'`` means ``a (b*)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from ..algebra import AlgebraElement, adjoint, monomial, one, scalar
from ..errors import LeavittError
from ..rings import Ring
from ..tensor import TensorElement, tensor, tensor_adjoint


class ParseError(LeavittError, ValueError):
    def __init__(self, message: str, column: int, line: int = 1):
        self.message = message
        self.column = column
        self.line = line
        super().__init__(f"syntax error at line {line}, column {column}: {message}")


# -- AST --------------------------------------------------------------------------


@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    letter: str


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Adjoint:
    arg: "Expression"


@dataclass(frozen=True)
class Neg:
    arg: "Expression"


@dataclass(frozen=True)
class Mul:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Add:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Sub:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Tensor:
    left: "Expression"
    right: "Expression"


Expression = Union[Scalar, Gen, Unit, Name, Adjoint, Neg, Mul, Add, Sub, Tensor]

# -- lexer ------------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+\-*()'])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # num, ident, op, end
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, names: Iterable[str]):
        self.tokens = tokenize(text)
        self.i = 0
        self.names = set(names)

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def fail(self, what: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {what}, found {found}", t.column)

    def parse(self) -> Expression:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return node

    def expr(self) -> Expression:
        node = self.signed()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.signed()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def signed(self) -> Expression:
        if self.at_op("-"):
            self.advance()
            return Neg(self.signed())
        return self.tprod()

    def tprod(self) -> Expression:
        node = self.term()
        if self.tok.kind == "ident" and self.tok.text == "ox":
            self.advance()
            node = Tensor(node, self.term())
        return node

    def starts_factor(self) -> bool:
        t = self.tok
        if t.kind == "num":
            return True
        if t.kind == "ident":
            return t.text != "ox"
        return t.kind == "op" and t.text == "("

    def term(self) -> Expression:
        node = self.factor()
        while True:
            if self.at_op("*"):
                self.advance()
                node = Mul(node, self.factor())
            elif self.starts_factor():
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Expression:
        node = self.atom()
        while self.at_op("'"):
            self.advance()
            node = Adjoint(node)
        return node

    def atom(self) -> Expression:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Scalar(Fraction(t.text))
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            if not self.at_op(")"):
                self.fail("')'")
            self.advance()
            return node
        if t.kind == "ident" and t.text != "ox":
            self.advance()
            if t.text in self.names:
                return Name(t.text)
            if t.text == "e":
                return Unit()
            if re.fullmatch(r"[ab]+", t.text):
                # a word: the trailing adjoint (if any) binds to the last letter only
                node: Expression = Gen(t.text[0])
                for ch in t.text[1:]:
                    node = Mul(node, Gen(ch))
                if len(t.text) > 1 and self.at_op("'"):
                    head = node.left
                    last = node.right
                    while self.at_op("'"):
                        self.advance()
                        last = Adjoint(last)
                    return Mul(head, last)
                return node
            raise ParseError(f"unknown identifier {t.text!r}", t.column)
        self.fail("a scalar, a, b, a name or '('")


def parse(text: str, ring: Ring | None = None, names: Iterable[str] = ()) -> Expression:
    """Parse ``text`` into an expression tree.

    ``names`` lists identifiers bound in the caller's session; any other
    identifier that is not a word over {a, b}, ``e`` or ``ox`` is an error.
    ``ring`` is accepted for symmetry with :func:`evaluate` and is unused.
    """
    return _Parser(text, names).parse()


# -- evaluation ---------------------------------------------------------------------


def _as_scalar(x: AlgebraElement):
    if not x.terms:
        return x.ring.zero
    if len(x.terms) == 1 and ("", "") in x.terms:
        return x.terms[("", "")]
    return None


def _mul(x, y):
    if isinstance(x, AlgebraElement) and isinstance(y, AlgebraElement):
        return x * y
    if isinstance(x, TensorElement) and isinstance(y, TensorElement):
        return x * y
    if isinstance(x, AlgebraElement):
        x, y = y, x
    c = _as_scalar(y)
    if c is None:
        raise LeavittError("cannot multiply a tensor by a non-scalar algebra element")
    return x.scale(c)


def _same_kind(x, y, op):
    if type(x) is not type(y):
        raise LeavittError(f"cannot {op} an algebra element and a tensor")


def evaluate(node: Expression, ring: Ring, env: dict | None = None):
    env = env or {}
    if isinstance(node, Scalar):
        return scalar(ring, ring(node.value))
    if isinstance(node, Gen):
        return monomial(ring, node.letter, "")
    if isinstance(node, Unit):
        return one(ring)
    if isinstance(node, Name):
        val = env[node.name]
        if not isinstance(val, (AlgebraElement, TensorElement)):
            raise LeavittError(f"{node.name} is not an algebra element")
        val.ring.require_same(ring)
        return val
    if isinstance(node, Adjoint):
        x = evaluate(node.arg, ring, env)
        return adjoint(x) if isinstance(x, AlgebraElement) else tensor_adjoint(x)
    if isinstance(node, Neg):
        return -evaluate(node.arg, ring, env)
    if isinstance(node, Mul):
        return _mul(evaluate(node.left, ring, env), evaluate(node.right, ring, env))
    if isinstance(node, (Add, Sub)):
        x, y = evaluate(node.left, ring, env), evaluate(node.right, ring, env)
        _same_kind(x, y, "add")
        return x + y if isinstance(node, Add) else x - y
    if isinstance(node, Tensor):
        x, y = evaluate(node.left, ring, env), evaluate(node.right, ring, env)
        if not (isinstance(x, AlgebraElement) and isinstance(y, AlgebraElement)):
            raise LeavittError("both sides of 'ox' must be algebra elements")
        return tensor(x, y)
    raise TypeError(f"unknown node {node!r}")


def parse_and_evaluate(text: str, ring: Ring, env: dict | None = None):
    env = env or {}
    return evaluate(parse(text, ring, names=env.keys()), ring, env)
