from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from higherkind import catalog
from higherkind.core import Err, Ok
from higherkind.parsec import (
    P, ContractViolation, EvaluationError, ParseError, ParseState, char, digit, many1_progress,
    parse_expr, run, satisfy, symbol, trunc_div,
)

# oracle: trees are ints or (op, left, right) tuples

PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def oracle_eval(t):
    if isinstance(t, int):
        return t
    op, l, r = t
    a, b = oracle_eval(l), oracle_eval(r)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if b == 0:
        raise ZeroDivisionError
    return int(Fraction(a, b))  # int() truncates toward zero


def render(t, pad=""):
    if isinstance(t, int):
        return str(t)
    op, l, r = t
    ls, rs = render(l, pad), render(r, pad)
    if not isinstance(l, int) and PREC[l[0]] < PREC[op]:
        ls = "(" + ls + ")"
    # right operand of the same precedence needs parens under left associativity
    if not isinstance(r, int) and PREC[r[0]] <= PREC[op]:
        rs = "(" + rs + ")"
    return ls + pad + op + pad + rs


trees = st.recursive(
    st.integers(0, 99),
    lambda sub: st.tuples(st.sampled_from("+-*/"), sub, sub),
    max_leaves=16,
)


def test_choice_backtracks():
    assert run(P.plus(char("a"), char("b")), "b") == Ok(("b", 1))
    assert run(P.zero, "xyz") == Err(ParseError(0, ""))
    assert run(P.bind(char("a"), lambda _: char("b")), "ab") == Ok(("b", 2))


def test_choice_error_is_furthest_failure():
    ab = P.seq_right(char("a"), char("b"))
    r = run(P.plus(ab, char("c")), "ax")
    assert r == Err(ParseError(1, "'b'"))
    assert run(P.plus(char("a"), char("b")), "z") == Err(ParseError(0, "'a' or 'b'"))


def test_primitives():
    assert run(many1_progress(digit()), "123+") == Ok(([1, 2, 3], 3))
    assert run(satisfy(str.isspace, "space"), "x") == Err(ParseError(0, "space"))
    assert run(char("a"), "") == Err(ParseError(0, "'a'"))
    assert run(symbol("let"), "let x") == Ok(("let", 3))
    assert run(many1_progress(digit()), "x") == Err(ParseError(0, "digit"))


def test_many1_progress_rejects_non_consuming_parsers():
    with pytest.raises(ContractViolation):
        run(many1_progress(P.pure(1)), "abc")


def test_parse_expr_examples():
    assert parse_expr("1+2*3") == Ok(1 + 2 * 3)
    assert parse_expr("(1+2)*3") == Ok((1 + 2) * 3)
    assert parse_expr("1+") == Err(ParseError(2, "term"))
    assert parse_expr("2*") == Err(ParseError(2, "term"))
    assert parse_expr("  7 - 2 - 1 ") == Ok(4)
    assert parse_expr("8/2/2") == Ok(2)
    assert parse_expr("(1+2") == Err(ParseError(4, "')'"))
    assert parse_expr("1 2") == Err(ParseError(2, "end of input"))
    assert parse_expr("") == Err(ParseError(0, "term"))


def test_division_truncates_toward_zero():
    assert parse_expr("(0-7)/2") == Ok(-3)
    assert parse_expr("7/(0-2)") == Ok(-3)
    assert trunc_div(-7, -2) == 3
    assert parse_expr("1/0") == Err(EvaluationError("division by zero"))


def test_deep_nesting_and_long_chains():
    assert parse_expr("(" * 60 + "1" + ")" * 60) == Ok(1)
    assert parse_expr("+".join(["1"] * 5000)) == Ok(5000)


@settings(max_examples=300, deadline=None)
@given(trees, st.sampled_from(["", " "]))
def test_round_trip_against_direct_evaluation(tree, pad):
    text = render(tree, pad)
    try:
        expected = Ok(oracle_eval(tree))
    except ZeroDivisionError:
        expected = Err(EvaluationError("division by zero"))
    assert parse_expr(text) == expected


@pytest.mark.parametrize("suite", catalog.ENTRIES["parser"].suites())
def test_parser_bundle_laws(suite):
    report = catalog.ENTRIES["parser"].run(suite, cases=200)
    assert report.passed, report.render()


def test_parse_state_fan_is_in_bounds():
    for s in catalog.PARSER_FAN:
        assert isinstance(s, ParseState) and 0 <= s.offset <= len(s.text)
