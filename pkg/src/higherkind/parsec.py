"""Parser combinators on top of ``state_t`` over ``either``.

A parser is a function ``ParseState -> Ok((value, ParseState)) | Err(ParseError)``,
exactly the computation type ``state_t(either_monad_min(ParseError), ParseState)``
produces.  Choice comes from a MonadZeroPlus bundle: ``plus`` backtracks,
because the state is an immutable value the right branch simply reuses.

Errors keep the furthest failure; when both branches fail at the same
offset their expectations are joined with ``or``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Union

from .alt import Monad0p, Monad0pMin, mk_monad0p
from .core import Err, Ok
from .instances import either_monad_min
from .transform import state_t

__all__ = [
    "ParseState", "ParseError", "EvaluationError", "ContractViolation",
    "parser_monad0p_min", "parser_monad", "P", "run",
    "satisfy", "char", "digit", "symbol", "eof", "many1_progress", "label", "lexeme",
    "token", "spaces", "defer", "chainl1",
    "Num", "BinOp", "expression", "evaluate", "parse_ast", "parse_expr", "trunc_div",
]


@dataclass(frozen=True)
class ParseState:
    text: str
    offset: int = 0


@dataclass(frozen=True)
class ParseError:
    offset: int
    expected: str


@dataclass(frozen=True)
class EvaluationError:
    message: str


class ContractViolation(RuntimeError):
    """A combinator was used outside its contract."""


def _merge(left: ParseError, right: ParseError) -> ParseError:
    if left.offset != right.offset:
        return left if left.offset > right.offset else right
    if not left.expected:
        return right
    if not right.expected:
        return left
    return ParseError(left.offset, "%s or %s" % (left.expected, right.expected))


def parser_monad0p_min() -> Monad0pMin:
    base = state_t(either_monad_min(ParseError), ParseState)

    def zero(s):
        # empty expectation: merging with it is a no-op, keeping zero an identity for plus
        return Err(ParseError(s.offset, ""))

    def plus(p, q):
        def parse(s):
            r = p(s)
            if isinstance(r, Ok):
                return r
            r2 = q(s)
            if isinstance(r2, Ok):
                return r2
            return Err(_merge(r.error, r2.error))
        return parse

    return Monad0pMin(tag=base.tag, return_=base.return_, bind=base.bind, zero=zero, plus=plus)


def parser_monad() -> Monad0p:
    return mk_monad0p(parser_monad0p_min())


P = parser_monad()


def run(parser: Callable, text: str) -> Any:
    """Run from offset 0: ``Ok((value, final_offset))`` or ``Err(ParseError)``."""
    r = parser(ParseState(text, 0))
    if isinstance(r, Ok):
        value, state = r.value
        return Ok((value, state.offset))
    return r


# primitives

def satisfy(pred: Callable[[str], bool], expected: str = "character") -> Callable:
    def parse(s):
        if s.offset < len(s.text) and pred(s.text[s.offset]):
            return Ok((s.text[s.offset], ParseState(s.text, s.offset + 1)))
        return Err(ParseError(s.offset, expected))
    return parse


def char(c: str) -> Callable:
    return satisfy(lambda x: x == c, repr(c))


def digit() -> Callable:
    return P.fmap(int, satisfy(lambda x: "0" <= x <= "9", "digit"))


def symbol(literal: str) -> Callable:
    def parse(s):
        if s.text.startswith(literal, s.offset):
            return Ok((literal, ParseState(s.text, s.offset + len(literal))))
        return Err(ParseError(s.offset, repr(literal)))
    return parse


def eof(s: ParseState):
    if s.offset == len(s.text):
        return Ok((None, s))
    return Err(ParseError(s.offset, "end of input"))


def many1_progress(p: Callable) -> Callable:
    """One or more ``p``; every successful ``p`` must consume input."""
    def parse(s):
        r = p(s)
        if isinstance(r, Err):
            return r
        out = []
        while isinstance(r, Ok):
            value, nxt = r.value
            if nxt.offset <= s.offset:
                raise ContractViolation("many1_progress: parser succeeded without consuming input at offset %d" % s.offset)
            out.append(value)
            s = nxt
            r = p(s)
        return Ok((out, s))
    return parse


def label(p: Callable, expected: str) -> Callable:
    """Report ``expected`` when ``p`` fails without getting past its start."""
    def parse(s):
        r = p(s)
        if isinstance(r, Err) and r.error.offset == s.offset:
            return Err(ParseError(s.offset, expected))
        return r
    return parse


def defer(thunk: Callable[[], Callable]) -> Callable:
    """Refer to a parser that is defined later (recursive grammars)."""
    return lambda s: thunk()(s)


def chainl1(p: Callable, op: Callable) -> Callable:
    """``p (op p)*`` folded to the left.

    ``op`` yields a binary function.  Once an operator has been read the
    next operand is mandatory; its error is reported, not backtracked over.
    """
    def parse(s):
        r = p(s)
        if isinstance(r, Err):
            return r
        acc, s = r.value
        while True:
            o = op(s)
            if isinstance(o, Err):
                return Ok((acc, s))
            f, s = o.value
            r = p(s)
            if isinstance(r, Err):
                return r
            rhs, s = r.value
            acc = f(acc, rhs)
    return parse


spaces = P.void(P.optional_(many1_progress(satisfy(str.isspace, "space"))))


def lexeme(p: Callable) -> Callable:
    return P.seq_left(p, spaces)


def token(literal: str) -> Callable:
    return lexeme(symbol(literal))


# arithmetic demo

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Any
    right: Any


Expr = Union[Num, BinOp]


def trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def _apply_op(op: str, a: int, b: int) -> int:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return trunc_div(a, b)


def evaluate(e: Expr) -> int:
    """Raises ZeroDivisionError on division by zero."""
    # explicit stack: long operator chains give trees deeper than the recursion limit
    values: list[int] = []
    todo: list = [e]
    while todo:
        node = todo.pop()
        if isinstance(node, Num):
            values.append(node.value)
        elif isinstance(node, BinOp):
            todo.extend((node.op, node.right, node.left))
        else:
            b, a = values.pop(), values.pop()
            values.append(_apply_op(node, a, b))
    return values[0]


def _digits_to_int(ds: list) -> int:
    n = 0
    for d in ds:
        n = n * 10 + d
    return n


def _operator(symbols: str) -> Callable:
    alternatives = [P.replace_left(lambda a, b, c=c: BinOp(c, a, b), token(c)) for c in symbols]
    return P.msum(alternatives)


number = lexeme(P.fmap(lambda ds: Num(_digits_to_int(ds)), many1_progress(digit())))
parens = P.seq_right(token("("), P.seq_left(defer(lambda: expression), token(")")))
factor = label(P.plus(number, parens), "term")
term = chainl1(factor, _operator("*/"))
expression = chainl1(term, _operator("+-"))
program = P.seq_right(spaces, P.seq_left(expression, eof))


def parse_ast(text: str) -> Any:
    """``Ok(expr)`` or ``Err(ParseError)``."""
    r = program(ParseState(text, 0))
    return Ok(r.value[0]) if isinstance(r, Ok) else r


def parse_expr(text: str) -> Any:
    """Parse and evaluate: ``Ok(int)``, ``Err(ParseError)`` or ``Err(EvaluationError)``."""
    r = parse_ast(text)
    if isinstance(r, Err):
        return r
    try:
        return Ok(evaluate(r.value))
    except ZeroDivisionError as exc:
        return Err(EvaluationError(str(exc)))
