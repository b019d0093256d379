import pytest

from schurkit.errors import WeightCapError
from schurkit.oracles import series_by_generating_product
from schurkit.partition import Partition, conjugate, partitions_up_to
from schurkit.series import (
    CLOSED_FORM,
    INVERSE,
    INVERSE_PAIRS,
    SeriesId,
    characteristic_cochain,
    coefficient,
    self_conjugate_sign,
    series,
    series_product,
)
from schurkit.symfunc import SymFunc, s


def test_examples():
    assert str(series("L", 3)) == "1 - s[1] + s[1,1] - s[1,1,1]"
    assert series("M", 2).expansion == SymFunc({(): 1, (1,): 1, (2,): 1}, cap=2)
    assert series("A", 2).expansion == SymFunc({(): 1, (1, 1): -1}, cap=2)
    assert series("D", 2).expansion == SymFunc({(): 1, (2,): 1}, cap=2)
    assert series("C", 2).expansion == SymFunc({(): 1, (2,): -1}, cap=2)
    assert series("B", 2).expansion == SymFunc({(): 1, (1, 1): 1}, cap=2)


@pytest.mark.parametrize("a, b", INVERSE_PAIRS)
def test_inverse_pairs(a, b):
    for cap in range(9):
        assert series_product(series(a, cap), series(b, cap)) == SymFunc.constant(1, cap=cap)
    assert INVERSE[a] == b and INVERSE[b] == a


@pytest.mark.parametrize("sid", CLOSED_FORM)
def test_closed_forms_against_generating_products(sid):
    assert series(sid, 6).expansion == series_by_generating_product(sid.value, 6)


def test_p_is_signed_m():
    m = series("M", 7).expansion
    assert series("P", 7).expansion == m.map_coefficients(lambda c: c) .map_partitions(
        lambda lam: (lam, -1 if sum(lam) % 2 else 1)
    )


def test_e_and_f_contents():
    for lam in partitions_up_to(6):
        assert coefficient("E", lam) == self_conjugate_sign(lam)
        assert coefficient("F", lam) == 1


def test_cap_handling():
    t = series("D", 4)
    with pytest.raises(WeightCapError):
        t.coefficient((3, 2))
    assert series_product(series("L", 3), series("M", 5)).cap == 3
    with pytest.raises(ValueError):
        series("D", -1)
    with pytest.raises(ValueError):
        SeriesId.of("X")


def test_characteristic_cochains():
    m, l, f = (characteristic_cochain(x) for x in "MLF")
    assert [m.value((k,)) for k in range(5)] == [1] * 5 and m.value((1, 1)) == 0
    assert [l.value((1,) * k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert all(f.value(lam) == 1 for lam in partitions_up_to(5))
    capped = characteristic_cochain("M", cap=2)
    with pytest.raises(WeightCapError):
        capped.value((3,))
