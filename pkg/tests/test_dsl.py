"""Rule DSL parsing, rendering, and the builtin grammar table."""

import pytest
from hypothesis import given, strategies as st

from gramcalc.dsl import (
    BUILTIN_SOURCES,
    builtin_grammar,
    builtin_names,
    parse_grammar,
    parse_polynomial,
)
from gramcalc.errors import DuplicateRule, ParseError
from gramcalc.grammar import Grammar
from gramcalc.poly import Polynomial

x = Polynomial.letter("x")
y = Polynomial.letter("y")


def test_expression_basics():
    assert parse_polynomial("x + 3*x*y + x*y^2 + x^2*y") == (
        x + 3 * x * y + x * y**2 + x**2 * y
    )
    assert parse_polynomial("2^3") == Polynomial.constant(8)
    assert parse_polynomial("-x + 2") == 2 - x
    assert parse_polynomial("(x + y)^2") == x**2 + 2 * x * y + y**2
    assert parse_polynomial("x - (y - 2)") == x - y + 2
    assert parse_polynomial("a_1 * B2").letters() == ("B2", "a_1")


def test_caret_binds_tighter_than_star():
    assert parse_polynomial("2*x^3") == 2 * x**3


def test_whitespace_and_newlines():
    assert parse_polynomial(" x\n + \n y ") == x + y


@pytest.mark.parametrize(
    "src, line, col, fragment",
    [
        ("x^0", 1, 3, "exponent must be a positive integer"),
        ("x^-1", 1, 3, "expected an integer"),
        ("x y", 1, 3, "unexpected 'y'"),
        ("x @", 1, 3, "unexpected character '@'"),
        ("", 1, 1, "unexpected end of input"),
        ("x^2^3", 1, 4, "unexpected '^'"),
        ("(x + y", 1, 7, "expected ')'"),
    ],
)
def test_expression_errors(src, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_polynomial(src)
    assert info.value.line == line
    assert info.value.col == col
    assert fragment in str(info.value)


def test_error_position_spans_lines():
    with pytest.raises(ParseError) as info:
        parse_grammar("x -> x;\ny -> )")
    assert (info.value.line, info.value.col) == (2, 6)


def test_trailing_semicolon():
    assert parse_grammar("x -> x;") == parse_grammar("x -> x")


def test_const_statement():
    g = parse_grammar("const a, b; x -> a*x + b")
    assert g.constants == {"a", "b"}
    assert g.letters == ("a", "b", "x")


@pytest.mark.parametrize(
    "src",
    [
        "x -> x; x -> 2*x",
        "const x; x -> x",
        "x -> x; const x",
        "const a, a; x -> x",
    ],
)
def test_duplicate_declarations(src):
    with pytest.raises(DuplicateRule) as info:
        parse_grammar(src)
    assert info.value.letter in {"x", "a"}


def test_duplicate_reports_position():
    with pytest.raises(DuplicateRule) as info:
        parse_grammar("x -> x; x -> 2*x")
    assert "line 1, column 9" in str(info.value)


def test_builtin_names_order():
    assert builtin_names() == ("g1", "g2", "g3", "g4", "g5", "gB", "g6")


def test_builtin_letters():
    assert builtin_grammar("g1").letters == ("x", "y")
    assert builtin_grammar("g3").letters == ("w", "x", "y")
    assert builtin_grammar("g6").letters == ("x", "y", "z")


def test_builtin_g6_expands_products():
    rules = builtin_grammar("g6").rules
    z = Polynomial.letter("z")
    assert rules["x"] == x * y + x * z


def test_builtin_unknown():
    with pytest.raises(ValueError):
        builtin_grammar("g99")


def test_builtin_round_trips():
    for name in builtin_names():
        g = builtin_grammar(name)
        assert parse_grammar(g.to_dsl()) == g
        assert parse_grammar(BUILTIN_SOURCES[name]) == g


_letters = ("a", "b", "c", "d")


def _build_poly(terms):
    total = Polynomial.zero()
    for coeff, mono in terms:
        term = Polynomial.constant(coeff)
        for letter in mono:
            term = term * Polynomial.letter(letter)
        total = total + term
    return total


_rule_polys = st.lists(
    st.tuples(
        st.integers(min_value=-9, max_value=9).filter(bool),
        st.lists(st.sampled_from(_letters), max_size=3),
    ),
    max_size=4,
).map(_build_poly)


@given(st.sets(st.sampled_from(_letters), min_size=1), _rule_polys)
def test_grammar_round_trip(ruled, rhs):
    constants = [l for l in _letters if l not in ruled]
    g = Grammar({l: rhs for l in ruled}, constants=constants)
    assert parse_grammar(g.to_dsl()) == g
