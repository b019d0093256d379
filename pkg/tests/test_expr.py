import pytest
from hypothesis import given

from schurkit.errors import ExpressionSyntaxError
from schurkit.expr import (
    format_table,
    format_universal,
    parse_cochain,
    parse_expression,
    parse_expression_with_warnings,
    parse_partition,
    symfunc_from_json,
    symfunc_to_json,
    tensor_from_json,
    tensor_to_json,
)
from schurkit.outer_hopf import outer_coproduct
from schurkit.partition import Partition
from schurkit.series import characteristic_cochain
from schurkit.symfunc import SymFunc, h, p, s

from conftest import symfuncs


def test_examples():
    f = parse_expression("s[2,1] + 3*s[1,1,1]")
    assert len(f) == 2 and f == s(2, 1) + 3 * s(1, 1, 1)
    assert parse_expression("1/2*p[2] + 1/2*p[1,1]").convert("s") == s(2)
    assert parse_expression("s[]") == 1
    assert parse_expression(" - 2 s[1] +1 ") == 1 - 2 * s(1)
    assert parse_expression("0") == 0


def test_mixed_bases_become_schur():
    f = parse_expression("h[2] + e[2]")
    assert f.basis.value == "s" and f == s(2) + s(1, 1)
    assert parse_expression("p[2] + p[1,1]").basis.value == "p"


def test_non_canonical_partition_warns():
    f, warnings = parse_expression_with_warnings("s[1,2]")
    assert f == s(2, 1)
    assert warnings and "read as [2,1]" in warnings[0]


@pytest.mark.parametrize(
    "text, position",
    [("s[2,", 4), ("x[1]", 0), ("s[1] s[2]", 5), ("1/0*s[1]", 2), ("", 0), ("s[a]", 2), ("s[1]+", 5)],
)
def test_syntax_errors(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(text)
    assert info.value.position == position
    assert info.value.pointer().endswith("^")


@given(symfuncs(4))
def test_print_parse_round_trip(f):
    assert parse_expression(str(f)) == f
    assert str(parse_expression(str(f))) == str(f)


@given(symfuncs(4, "p"))
def test_round_trip_in_power_sums(f):
    g = parse_expression(str(f))
    assert g == f


def test_canonical_text_is_fixed():
    for text in ["s[2,1] + 3*s[1,1,1]", "1 - s[1] + s[1,1] - s[1,1,1]", "-1/2*p[2] + p[1,1]", "0"]:
        assert str(parse_expression(text)) == text


@given(symfuncs(4))
def test_json_round_trip(f):
    assert symfunc_from_json(symfunc_to_json(f)) == f


def test_tensor_json():
    t = outer_coproduct(s(2, 1))
    assert tensor_from_json(tensor_to_json(t)) == t
    assert tensor_to_json(outer_coproduct(s(1)))["terms"][0] == {"slots": [[], [1]], "coeff": "1"}


def test_universal_format():
    assert format_universal(s(2) + s(1, 1) + 1, "sp") == "<2> + <1,1> + <0>"
    assert format_universal(s(3) + s(2, 1) + s(1), "o") == "[3] + [2,1] + [1]"
    assert format_universal(SymFunc.zero(), "o") == "0"


def test_parse_partition():
    assert parse_partition("[2,1]") == (2, 1)
    with pytest.raises(ExpressionSyntaxError):
        parse_partition("[1,x]")


def test_cochain_specs():
    assert parse_cochain("series:M").equals(characteristic_cochain("M"), 5)
    assert parse_cochain("counit^2").arity == 2
    t = parse_cochain("table:{[2,1]:1, [1]:-1/2}")
    assert t.value((2, 1)) == 1 and t.value((1,)) == -0.5
    assert parse_cochain("table:{[1],[1]:1}").arity == 2
    assert parse_cochain("d(series:D)").arity == 2
    assert parse_cochain("conv(schur, schur-inv)").equals(parse_cochain("counit^2"), 4)
    assert parse_cochain("inv(series:M)").equals(characteristic_cochain("L"), 5)
    for bad in ["series:X", "nonsense", "table:{[1]:1, [1],[1]:2}", "d(counit^3)", "conv(schur, series:M)", "schur junk"]:
        with pytest.raises(ExpressionSyntaxError):
            parse_cochain(bad)


def test_format_table_round_trip():
    values = {(Partition((1,)),): -1, (Partition((2, 1)),): 3}
    text = format_table(values)
    assert text == "table:{[1]:-1, [2,1]:3}"
    c = parse_cochain(text)
    assert c.value((1,)) == -1 and c.value((2, 1)) == 3
