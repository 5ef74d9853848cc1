import pytest

from charkit import perms
from charkit.errors import ParseError


def test_composition_is_left_to_right():
    # apply (1 2) first, then (2 3): 1 -> 2 -> 3, so the product is (1 3 2)
    a = perms.parse_cycles("(1 2)", degree=3)
    b = perms.parse_cycles("(2 3)", degree=3)
    assert perms.mult(a, b) == perms.parse_cycles("(1 3 2)")


def test_cycle_product_within_generator_composes_left_to_right():
    assert perms.parse_cycles("(1 2)(2 3)") == perms.parse_cycles("(1 3 2)")


def test_parse_and_format_round_trip():
    for text in ["(1 2 3)(4 5)", "(2 4)", "(1 5 3)", "()"]:
        p = perms.parse_cycles(text, degree=5)
        assert perms.parse_cycles(perms.format_cycles(p), degree=5) == p


def test_identity_formats_as_unit():
    assert perms.format_cycles(perms.identity(4)) == "()"


def test_inverse_and_power():
    p = perms.parse_cycles("(1 2 3 4 5)")
    assert perms.mult(p, perms.inverse(p)) == perms.identity(5)
    assert perms.power(p, 5) == perms.identity(5)
    assert perms.power(p, -2) == perms.inverse(perms.power(p, 2))
    assert perms.order(p) == 5
    assert perms.order(perms.parse_cycles("(1 2)(3 4 5)")) == 6


def test_conjugate_matches_definition():
    x = perms.parse_cycles("(1 2 3)", degree=4)
    g = perms.parse_cycles("(1 4)", degree=4)
    direct = perms.mult(perms.mult(perms.inverse(g), x), g)
    assert perms.conjugate(x, g) == direct


@pytest.mark.parametrize("bad", ["(1 2", "1 2)", "(1 2)(2", "(0 1)", "(1 1 2)",
                                 "abc", ""])
def test_malformed_cycles_rejected(bad):
    with pytest.raises(ParseError):
        perms.parse_cycles(bad)
