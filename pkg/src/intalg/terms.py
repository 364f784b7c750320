"""Boolean term syntax, parsing and evaluation.

Grammar (precedence: unary '-' > '*' > '^' > '+'):

    term   := xor ( '+' xor )*
    xor    := factor ( '^' factor )*
    factor := atom ( '*' atom )*
    atom   := '-' atom | '(' term ')' | var | '0' | '1'
    var    := 'x' digit+

Nontriviality is decided by truth-table enumeration in the two-element
algebra: a term is nonzero in some algebra under some assignment exactly
when some sign vector satisfies it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra
from .algebra import Element
from .errors import CapacityError, InputError

MAX_TRUTH_TABLE_VARS = 20
MAX_VAR_INDEX = 10**6


class Term:
    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class SymDiff(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Compl(Term):
    arg: Term


ZERO = Zero()
ONE = One()


@dataclass(frozen=True)
class MintermSet:
    """Sign vectors on which a term evaluates to 1 in the free algebra."""

    n: int
    signs: frozenset


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def parse(self) -> Term:
        t = self.term()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return t

    def term(self) -> Term:
        t = self.xor()
        while self.peek() == "+":
            self.take()
            t = Join(t, self.xor())
        return t

    def xor(self) -> Term:
        t = self.factor()
        while self.peek() == "^":
            self.take()
            t = SymDiff(t, self.factor())
        return t

    def factor(self) -> Term:
        t = self.atom()
        while self.peek() == "*":
            self.take()
            t = Meet(t, self.atom())
        return t

    def atom(self) -> Term:
        c = self.peek()
        if c is None:
            raise ParseError("unexpected end of input", self.pos)
        if c == "-":
            self.take()
            return Compl(self.atom())
        if c == "(":
            self.take()
            t = self.term()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.take()
            return t
        if c == "0":
            self.take()
            return ZERO
        if c == "1":
            self.take()
            return ONE
        if c == "x":
            self.take()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                raise ParseError("expected variable index after 'x'", self.pos)
            index = int(self.text[start : self.pos])
            if index > MAX_VAR_INDEX:
                raise ParseError(f"variable index {index} too large", start)
            return Var(index)
        raise ParseError(f"unexpected {c!r}", self.pos)


def parse(text: str) -> Term:
    return _Parser(text).parse()


_PRECEDENCE = {Join: 1, SymDiff: 2, Meet: 3, Compl: 4}
_INFIX = {Join: "+", SymDiff: "^", Meet: "*"}


def _prec(t: Term) -> int:
    return _PRECEDENCE.get(type(t), 5)


def render(t: Term) -> str:
    """Emit t with minimal parentheses; parse(render(t)) == t."""
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Compl):
        inner = render(t.arg)
        if _prec(t.arg) < _prec(t):
            inner = f"({inner})"
        return f"-{inner}"
    p = _prec(t)
    left = render(t.left)
    if _prec(t.left) < p:
        left = f"({left})"
    right = render(t.right)
    if _prec(t.right) <= p:
        right = f"({right})"
    return f"{left}{_INFIX[type(t)]}{right}"


def num_vars(t: Term) -> int:
    if isinstance(t, Var):
        return t.index + 1
    if isinstance(t, Compl):
        return num_vars(t.arg)
    if isinstance(t, (Meet, Join, SymDiff)):
        return max(num_vars(t.left), num_vars(t.right))
    return 0


def evaluate(t: Term, assignment, order_size: int | None = None) -> Element:
    """Homomorphic evaluation of t in B(I) under x_i -> assignment[i]."""
    assignment = list(assignment)
    if order_size is None:
        if not assignment:
            raise InputError("constant evaluation needs an order size")
        order_size = assignment[0].order_size
    for a in assignment:
        if a.order_size != order_size:
            raise InputError("assignment mixes order sizes")
    if num_vars(t) > len(assignment):
        raise InputError(
            f"term uses {num_vars(t)} variables, got {len(assignment)}"
        )

    def go(node: Term) -> Element:
        if isinstance(node, Var):
            return assignment[node.index]
        if isinstance(node, Zero):
            return algebra.empty(order_size)
        if isinstance(node, One):
            return algebra.full(order_size)
        if isinstance(node, Compl):
            return algebra.complement(go(node.arg))
        if isinstance(node, Meet):
            return algebra.meet(go(node.left), go(node.right))
        if isinstance(node, Join):
            return algebra.join(go(node.left), go(node.right))
        if isinstance(node, SymDiff):
            return algebra.symdiff(go(node.left), go(node.right))
        raise InputError(f"unknown term node {node!r}")

    return go(t)


def minterms(t: Term, n: int) -> MintermSet:
    """Truth table of t over n variables; sign vector bit i is x_i."""
    if n > MAX_TRUTH_TABLE_VARS:
        raise CapacityError(f"{n} variables exceed cap {MAX_TRUTH_TABLE_VARS}")
    if n < num_vars(t):
        raise InputError(f"term uses {num_vars(t)} variables, n={n}")
    rows = np.arange(1 << n, dtype=np.uint32)

    def go(node: Term) -> np.ndarray:
        if isinstance(node, Var):
            return ((rows >> (n - 1 - node.index)) & 1).astype(bool)
        if isinstance(node, Zero):
            return np.zeros(1 << n, dtype=bool)
        if isinstance(node, One):
            return np.ones(1 << n, dtype=bool)
        if isinstance(node, Compl):
            return ~go(node.arg)
        if isinstance(node, Meet):
            return go(node.left) & go(node.right)
        if isinstance(node, Join):
            return go(node.left) | go(node.right)
        if isinstance(node, SymDiff):
            return go(node.left) ^ go(node.right)
        raise InputError(f"unknown term node {node!r}")

    table = go(t)
    signs = frozenset(
        tuple(int(r >> (n - 1 - i)) & 1 for i in range(n))
        for r in np.nonzero(table)[0]
    )
    return MintermSet(n, signs)


def is_nontrivial(t: Term) -> bool:
    """True iff some assignment in some Boolean algebra makes t nonzero."""
    return bool(minterms(t, num_vars(t)).signs)
