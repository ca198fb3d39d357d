from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arithfuchs.cyclo import CycloElement, cos_element, sin_element
from arithfuchs.expr import (
    BinOp,
    EvaluationError,
    Name,
    Neg,
    Num,
    ParseError,
    Pow,
    Trig,
    evaluate,
    evaluate_text,
    parse_element,
    to_text,
)


def test_b5_expression():
    assert evaluate_text("cos(1/5) - 1 + 32/25") == cos_element(1, 5) - 1 + Fraction(32, 25)


def test_literal():
    assert parse_element("1") == Num(1)
    assert evaluate_text("1") == CycloElement.rational(1)


def test_unbalanced_paren_offset():
    with pytest.raises(ParseError) as info:
        parse_element("cos(1/7")
    assert info.value.offset == 8
    assert info.value.expected == (")",)


@pytest.mark.parametrize("src, offset", [
    ("", 1),
    ("1 +", 4),
    ("2 * * 3", 5),
    ("cos(1/0)", 7),
    ("1 $ 2", 3),
    ("(1 + 2", 7),
    ("3 4", 3),
    ("x^y", 3),
    ("--1", 2),
])
def test_error_offsets(src, offset):
    with pytest.raises(ParseError) as info:
        parse_element(src)
    assert info.value.offset == offset


def test_precedence():
    assert parse_element("1 + 2 * 3") == BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))
    assert parse_element("-2^2") == Neg(Pow(Num(2), 2))
    assert evaluate_text("-2^2") == -4
    assert evaluate_text("2 - 3 - 4") == -5
    assert evaluate_text("12 / 3 / 2") == 2
    assert evaluate_text("2^-2") == Fraction(1, 4)


def test_trig_nodes():
    assert parse_element("sin(-3/8)") == Trig("sin", Fraction(-3, 8))
    assert evaluate_text("sin(1/12)") == Fraction(1, 2)
    assert evaluate_text("cos(1/7)^2") == cos_element(1, 7) ** 2
    assert evaluate_text("2*sin(1/5)") == 2 * sin_element(1, 5)


def test_names():
    c = 2 * cos_element(1, 7)
    assert evaluate_text("c^2 - c - 2", {"c": c}) == c * c - c - 2
    with pytest.raises(EvaluationError):
        evaluate_text("c + 1")
    assert parse_element("zeta") == Name("zeta")


def test_evaluation_errors():
    with pytest.raises(EvaluationError):
        evaluate_text("1 / (cos(1/4))")
    with pytest.raises(EvaluationError):
        evaluate_text("0^-1")


@pytest.mark.parametrize("src, canon", [
    ("1+2*3", "1 + 2 * 3"),
    ("(1+2)*3", "(1 + 2) * 3"),
    ("1-(2-3)", "1 - (2 - 3)"),
    ("-(1+c)", "-(1 + c)"),
    ("(-2)^2", "(-2)^2"),
    ("-(-1)", "-(-1)"),
    ("cos( 2/4 )", "cos(1/2)"),
])
def test_canonical_text(src, canon):
    assert to_text(parse_element(src)) == canon


# -- round trip on generated trees ----------------------------------------------

leaves = st.one_of(
    st.integers(0, 50).map(Num),
    st.sampled_from(["c", "s", "g"]).map(Name),
    st.builds(Trig, st.sampled_from(["cos", "sin"]),
              st.builds(Fraction, st.integers(-5, 5), st.integers(1, 12))),
)


def _extend(children):
    return st.one_of(
        children.map(Neg),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, st.integers(-3, 5)),
    )


trees = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=1000)
@given(trees)
def test_print_parse_round_trip(tree):
    text = to_text(tree)
    assert parse_element(text) == tree
    assert to_text(parse_element(text)) == text


NAMES = {"c": 2 * cos_element(1, 7), "s": sin_element(1, 5), "g": 2 * cos_element(1, 20)}


@settings(max_examples=200)
@given(trees)
def test_round_trip_preserves_value(tree):
    try:
        value = evaluate(tree, NAMES)
    except EvaluationError:
        return
    assert evaluate(parse_element(to_text(tree)), NAMES) == value
