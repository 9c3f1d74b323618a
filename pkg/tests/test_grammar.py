"""Formal derivative engine and index-map extraction."""

import pytest
from hypothesis import given, strategies as st

from gramcalc.dsl import parse_grammar, parse_polynomial
from gramcalc.errors import DuplicateRule, PatternViolation, UnknownLetter
from gramcalc.grammar import Grammar, IndexMap, extract_coeffs
from gramcalc.poly import Polynomial
from gramcalc.triangles import eulerian, stirling2

x = Polynomial.letter("x")
y = Polynomial.letter("y")


def test_single_step():
    g = parse_grammar("x -> x + x*y; y -> y + x*y")
    assert g.derive(x) == x + x * y
    assert g.derive(x * y) == 2 * x * y + x * y**2 + x**2 * y
    assert g.derive(Polynomial.constant(5)) == 0


def test_constants_pass_through():
    g = parse_grammar("const c; x -> c*x")
    c = Polynomial.letter("c")
    assert g.derive(x) == c * x
    assert g.derive_n(x, 3) == c**3 * x
    assert g.derive(c**4) == 0


def test_unknown_letter_rejected():
    with pytest.raises(UnknownLetter):
        parse_grammar("x -> x + y")
    g = parse_grammar("x -> 2*x")
    with pytest.raises(UnknownLetter):
        g.derive(x + y)


def test_duplicate_and_conflicting_declarations():
    with pytest.raises(DuplicateRule):
        Grammar({"x": x}, constants={"x"})


def test_depth_validation():
    g = parse_grammar("x -> x")
    with pytest.raises(ValueError):
        g.derive_n(x, -1)
    assert [str(p) for p in g.derive_levels(x, 2)] == ["x", "x", "x"]


def test_stirling_generating_grammar():
    # with x -> x*y and y -> y, level n holds x times the Stirling row
    g = parse_grammar("x -> x*y; y -> y")
    p = g.derive_n(x, 4)
    for k in range(1, 5):
        assert p.coefficient({"x": 1, "y": k}) == stirling2(4, k)
    assert p.coefficient({"x": 1}) == 0


def test_eulerian_generating_grammar():
    # with x -> x*y and y -> x*y, level n spreads the Eulerian row over
    # monomials x^k y^(n-k+1)
    g = parse_grammar("x -> x*y; y -> x*y")
    p = g.derive_n(x, 4)
    for k in range(1, 5):
        assert p.coefficient({"x": k, "y": 4 - k + 1}) == eulerian(4, k)


def test_index_map_identity():
    imap = IndexMap.identity()
    grid = extract_coeffs(parse_polynomial("x + 3*x*y + x*y^2 + x^2*y"), imap)
    assert grid == {(1, 0): 1, (1, 1): 3, (1, 2): 1, (2, 1): 1}


def test_index_map_fixed_letter():
    imap = IndexMap.identity(fixed={"w": 1})
    grid = extract_coeffs(parse_polynomial("w + 3*w*x + w*x*y"), imap)
    assert grid == {(0, 0): 1, (1, 0): 3, (1, 1): 1}
    with pytest.raises(PatternViolation):
        imap.indices((("x", 1),))
    with pytest.raises(PatternViolation):
        imap.indices((("w", 2),))


def test_index_map_affine_rows():
    imap = IndexMap({"x": (1, 2, 0), "y": (0, 0, 2)})
    assert imap.indices((("x", 3), ("y", 2))) == (1, 1)
    assert imap.indices((("x", 1),)) == (0, 0)
    with pytest.raises(PatternViolation):
        imap.indices((("x", 2),))
    with pytest.raises(PatternViolation):
        imap.indices((("x", 3), ("y", 1)))


def test_index_map_needs_independent_rows():
    with pytest.raises(ValueError):
        IndexMap({"x": (0, 1, 1), "y": (0, 2, 2)})


def test_extract_rejects_stray_letters():
    with pytest.raises(PatternViolation):
        extract_coeffs(parse_polynomial("x*z"), IndexMap.identity())


_g = parse_grammar("x -> x + x*y; y -> y + x^2")

_polys = st.lists(
    st.tuples(
        st.integers(min_value=-5, max_value=5),
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
    ),
    max_size=4,
).map(
    lambda terms: sum(
        (c * x**i * y**j for c, i, j in terms), Polynomial.zero()
    )
)


@given(_polys, _polys)
def test_leibniz(p, q):
    assert _g.derive(p * q) == _g.derive(p) * q + p * _g.derive(q)


@given(_polys, _polys, st.integers(min_value=-9, max_value=9), st.integers(min_value=-9, max_value=9))
def test_linearity(p, q, a, b):
    assert _g.derive(a * p + b * q) == a * _g.derive(p) + b * _g.derive(q)


@given(_polys)
def test_power_rule(p):
    assert _g.derive(p**3) == 3 * p**2 * _g.derive(p)
