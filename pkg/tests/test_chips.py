import pytest
from hypothesis import given

from conftest import chip_tuples, chips
from oracles import multiply_nx
from wiremonoids.chips import (
    Chip,
    ChipParseError,
    DegreeMismatch,
    Matching,
    WireKind,
    alpha,
    circle,
    forget,
    format_chip,
    hook,
    identity,
    is_planar,
    multiply,
    new_chip,
    parse_chip,
    rotate,
    star,
    wire_kind,
)
from wiremonoids.families import brauer_multiply, enumerate_brauer


def P(text):
    return parse_chip(text)


# nine-pin chip with three circles: ({1-5', 2-4, 3-5, 6-9', 7-9, 8-8', 1'-2', 3'-4', 6'-7'}; 3)
NINE = "W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3"
# a second degree-9 factor with one circle
NINE_RIGHT = "W9:1-2,3-6,4-5,7-3',8-9,1'-2',4'-9',5'-6',7'-8';1"
# product traced by hand: 1->5'->5->4->4'->3'->3->6->6'->7'->7->3', 6->9'->9->8->8'->8,
# and 1'-2' against 1-2 closes one extra loop
NINE_PRODUCT = "W9:1-3',2-4,3-5,6-8,7-9,1'-2',4'-9',5'-6',7'-8';5"


def test_identity_chip():
    assert new_chip(2, [(0, 2), (1, 3)]) == identity(2)
    assert format_chip(identity(3)) == "W3:1-1',2-2',3-3';0"


def test_nine_pin_chip():
    xi = P(NINE)
    assert xi.degree == 9 and xi.circles == 3
    assert format_chip(xi) == "W9:1-5',1'-2',2-4,3-5,3'-4',6-9',6'-7',7-9,8-8';3"


def test_duplicated_pin_rejected():
    with pytest.raises(ValueError, match="duplicated"):
        new_chip(2, [(0, 2), (0, 3)])


def test_generators():
    assert format_chip(hook(3, 1)) == "W3:1-2,1'-2',3-3';0"
    assert circle(3) == Chip(Matching.identity(3), 1)
    assert format_chip(alpha(2)) == "W2:1-2',1'-2;0"
    for n in range(1, 7):
        assert multiply(alpha(n), alpha(n)) == identity(n)
        assert star(alpha(n)) == alpha(n)
        assert multiply(circle(n), circle(n)) == Chip(Matching.identity(n), 2)
        assert rotate(circle(n)) == circle(n)
        assert rotate(identity(n)) == identity(n) == star(identity(n))


def test_hook_products():
    # from the graph oracle
    h1, h2 = hook(3, 1), hook(3, 2)
    assert format_chip(multiply(h1, h2)) == "W3:1-2,1'-3,2'-3';0"
    assert format_chip(multiply(h2, h1)) == "W3:1-3',1'-2',2-3;0"
    assert format_chip(multiply(h1, h1)) == "W3:1-2,1'-2',3-3';1"


def test_nine_pin_product():
    assert multiply(P(NINE), P(NINE_RIGHT)) == P(NINE_PRODUCT)


@pytest.mark.parametrize("n", range(2, 9))
def test_temperley_lieb_relations(n):
    c = circle(n)
    for i in range(1, n):
        hi = hook(n, i)
        assert multiply(hi, hi) == multiply(c, hi) == multiply(hi, c)
        for j in range(1, n):
            hj = hook(n, j)
            if abs(i - j) == 1:
                assert multiply(multiply(hi, hj), hi) == hi
            if abs(i - j) >= 2:
                assert multiply(hi, hj) == multiply(hj, hi)


def test_degree_mismatch_reports_both():
    with pytest.raises(DegreeMismatch, match="3 vs 4"):
        multiply(identity(3), identity(4))


@given(chip_tuples(2))
def test_multiply_matches_graph_oracle(pair):
    x, y = pair
    assert multiply(x, y) == multiply_nx(x, y)


@given(chip_tuples(3))
def test_associative(t):
    x, y, z = t
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(chip_tuples(1))
def test_identity_law(t):
    (x,) = t
    assert multiply(identity(x.degree), x) == x == multiply(x, identity(x.degree))


@given(chip_tuples(2))
def test_involution_laws(pair):
    x, y = pair
    for inv in (star, rotate):
        assert inv(inv(x)) == x
        assert inv(multiply(x, y)) == multiply(inv(y), inv(x))


@given(chip_tuples(1))
def test_rotation_is_alpha_conjugate_of_star(t):
    (x,) = t
    a = alpha(x.degree)
    assert rotate(x) == multiply(multiply(a, star(x)), a)


@pytest.mark.parametrize("n", range(2, 9))
def test_generators_under_involutions(n):
    for i in range(1, n):
        assert star(hook(n, i)) == hook(n, i)
        assert rotate(hook(n, i)) == hook(n, n - i)
        assert is_planar(hook(n, i))


def test_star_of_nine_pin_chip():
    assert star(P(NINE)) == P("W9:1'-5,2'-4',3'-5',6'-9,7'-9',8'-8,1-2,3-4,6-7;3")


def test_planarity():
    assert not is_planar(P("W2:1-2',2-1';0"))
    assert is_planar(P("W2:1-2,1'-2';4"))
    assert not is_planar(P(NINE))


@given(chip_tuples(2))
def test_forget_is_homomorphism(pair):
    x, y = pair
    assert forget(multiply(x, y)) == brauer_multiply(forget(x), forget(y))
    assert forget(star(x)) == forget(x).star()
    assert forget(circle(x.degree)) == Matching.identity(x.degree)


@given(chip_tuples(2))
def test_planar_closed_under_product(pair):
    x, y = pair
    if is_planar(x) and is_planar(y):
        assert is_planar(multiply(x, y))


def test_wire_kinds():
    m = Matching.identity(2)
    h = hook(2, 1).matching
    assert wire_kind(h, (0, 1)) is WireKind.LWIRE
    assert wire_kind(h, (2, 3)) is WireKind.RWIRE
    assert wire_kind(m, (0, 2)) is WireKind.TWIRE
    with pytest.raises(ValueError):
        wire_kind(m, (0, 1))


def test_literal_round_trip_over_brauer_4():
    for m in enumerate_brauer(4):
        for d in (0, 7):
            xi = Chip(m, d)
            assert parse_chip(format_chip(xi)) == xi


@given(chips(5))
def test_literal_round_trip_random(xi):
    assert parse_chip(format_chip(xi)) == xi


def test_literal_is_whitespace_and_order_insensitive():
    assert P(" W3 : 2'-1' , 2-1 , 3'-3 ; 0 ") == hook(3, 1)


@pytest.mark.parametrize(
    "text, column",
    [
        ("X3:1-1';0", 1),
        ("W3:1-4;0", 6),
        ("W2:1-1',2-2'", 13),
        ("W2:1-1',2-2';x", 14),
    ],
)
def test_parse_errors_report_column(text, column):
    with pytest.raises(ChipParseError) as info:
        parse_chip(text)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_circle_overflow():
    big = Chip(Matching.identity(1), 2**62)
    with pytest.raises(OverflowError):
        multiply(big, big)


@given(chip_tuples(2))
def test_derived_matchings_are_valid(pair):
    # star, rotate and multiply skip validation; rebuild through the checked path
    x, y = pair
    for z in (star(x), rotate(x), multiply(x, y)):
        assert Matching(z.degree, z.matching.partner) == z.matching
