from fractions import Fraction

import pytest

from bundles.errors import OverflowRejected, ParseError
from bundles.hn_core import ZERO, bundle_from_factors
from cli.formatter import format_bundle
from cli.parser import parse_bundle, parse_slope, tokenize
from verify.config import EnumBounds
from verify.enumeration import enumerate_bundles


def test_parse_examples():
    bundle = parse_bundle("O(1/2)^3 + O(-1)")
    assert bundle == bundle_from_factors([(Fraction(1, 2), 3), (-1, 1)])
    assert parse_bundle("0") == ZERO
    assert parse_bundle("O(2/4)") == parse_bundle("O(1/2)")


def test_parse_is_whitespace_insensitive_and_canonicalizes():
    assert parse_bundle("  O( -1 )+O(1/2) ^ 3 ") == parse_bundle("O(1/2)^3 + O(-1)")
    assert parse_bundle("O(1) + O(1)") == parse_bundle("O(1)^2")


def test_format_canonical_order():
    assert format_bundle(parse_bundle("O(-1) + O(1/2)^3")) == "O(1/2)^3 + O(-1)"
    assert format_bundle(ZERO) == "0"
    assert format_bundle(parse_bundle("O(4/2)")) == "O(2)"


def test_parse_slope():
    assert parse_slope("-3/6") == Fraction(-1, 2)
    assert parse_slope("7") == 7


@pytest.mark.parametrize(
    "text, offset",
    [
        ("O(1", 3),
        ("O(1) +", 6),
        ("O(1) O(2)", 5),
        ("P(1)", 0),
        ("O(1)^0", 5),
        ("O(1/-2)", 4),
        ("0 + O(1)", 2),
        ("", 0),
    ],
)
def test_syntax_errors_report_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_bundle(text)
    assert info.value.offset == offset
    assert f"at byte offset {offset}" in str(info.value)


def test_offsets_count_utf8_bytes():
    # NBSP has two bytes, the ideographic space three
    text = "O(1)\u00a0+\u00a0O("
    with pytest.raises(ParseError) as info:
        parse_bundle(text)
    assert len(text) == 9
    assert info.value.offset == 11
    with pytest.raises(ParseError) as info:
        parse_bundle("O(1)\u3000⊕")
    assert info.value.offset == 7
    assert tokenize("O(1)\u3000")[-1].offset == 7


def test_only_ascii_digits_are_integers():
    # ARABIC-INDIC DIGIT ONE
    with pytest.raises(ParseError) as info:
        parse_bundle("O(\u0661)")
    assert info.value.offset == 2
    assert "unexpected character" in str(info.value)
    with pytest.raises(ParseError) as info:
        parse_slope("\uff11")
    assert info.value.offset == 0


def test_token_offsets_follow_multibyte_spacing():
    tokens = tokenize("O(\u00a01)\u3000+ O(-2)")
    assert [(t.kind, t.offset) for t in tokens] == [
        ("O", 0),
        ("(", 1),
        ("int", 4),
        (")", 5),
        ("+", 9),
        ("O", 11),
        ("(", 12),
        ("int", 13),
        (")", 15),
        ("end", 16),
    ]


def test_zero_denominator():
    with pytest.raises(ParseError) as info:
        parse_bundle("O(1/0)")
    assert "zero denominator" in str(info.value)
    assert info.value.offset == 4


def test_overflow_rejected():
    with pytest.raises(OverflowRejected):
        parse_bundle("O(" + "9" * 70 + ")")
    with pytest.raises(OverflowRejected):
        parse_bundle("O(1)^123", max_digits=2)
    assert parse_bundle("O(" + "9" * 64 + ")").degree == int("9" * 64)


def test_round_trip_over_full_enumeration():
    bounds = EnumBounds(max_rank=4, max_abs_degree=4, max_denominator=2)
    for bundle in enumerate_bundles(bounds):
        assert parse_bundle(format_bundle(bundle)) == bundle
