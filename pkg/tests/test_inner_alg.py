from fractions import Fraction

import pytest
from hypothesis import given

from schurkit.errors import WeightCapError
from schurkit.inner_alg import (
    antipode_obstruction,
    character_table,
    counit_inner,
    inner_coproduct,
    inner_product,
    inner_unit,
    kronecker_coefficient,
    plethysm_pn,
    sn_character,
)
from schurkit.oracles import kostka_ssyt
from schurkit.partition import Partition, conjugate, partitions_of, z_value
from schurkit.symfunc import SymFunc, TensorExp, p, s, schur_scalar

from conftest import partitions, symfuncs


def test_character_examples():
    assert sn_character((2,), (1, 1)) == 1
    assert sn_character((1, 1), (2,)) == -1
    assert sn_character((2, 1), (1, 1, 1)) == 2
    assert sn_character((2,), (1,)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_character_orthogonality(n):
    table = character_table(n)
    parts = partitions_of(n)
    for i in range(len(parts)):
        for j in range(len(parts)):
            inner = sum(Fraction(table[i][k] * table[j][k], z_value(rho)) for k, rho in enumerate(parts))
            assert inner == (1 if i == j else 0)


@given(partitions(7, 1))
def test_dimension_is_standard_tableaux_count(lam):
    n = sum(lam)
    assert sn_character(lam, (1,) * n) == kostka_ssyt(lam, (1,) * n)


def test_inner_examples():
    assert inner_product(p(2), p(2)) == 2 * p(2)
    assert inner_product(s(2), s(1, 1)) == s(1, 1)
    assert inner_product(s(1, 1), s(1, 1)) == s(2)
    assert inner_product(s(2), s(1)) == 0


@given(partitions(5, 1))
def test_inner_with_trivial_and_sign(lam):
    n = sum(lam)
    assert inner_product(s((n,)), s(lam)) == s(lam)
    assert inner_product(s((1,) * n), s(lam)) == s(conjugate(lam))


@given(partitions(4, 1), partitions(4, 1))
def test_kronecker_coefficients(lam, mu):
    product = inner_product(s(lam), s(mu))
    for nu in partitions_of(sum(lam)):
        assert product.coefficient(nu) == kronecker_coefficient(lam, mu, nu)


def test_inner_coproduct_examples():
    assert inner_coproduct(p(3)) == TensorExp({((3,), (3,)): 1}, ("p", "p"))
    assert inner_coproduct(s(2)) == TensorExp.tensor(s(2), s(2)) + TensorExp.tensor(s(1, 1), s(1, 1))
    assert inner_coproduct(s()) == TensorExp.tensor(s(), s())


@given(partitions(4), partitions(4), partitions(4))
def test_inner_coproduct_dual(lam, mu, nu):
    lhs = schur_scalar(inner_coproduct(s(lam)), TensorExp.tensor(s(mu), s(nu)))
    assert lhs == schur_scalar(s(lam), inner_product(s(mu), s(nu)))


def test_inner_unit():
    assert inner_unit(2) == SymFunc({(): 1, (1,): 1, (2,): 1}, cap=2)
    assert inner_unit(0) == SymFunc({(): 1}, cap=0)
    assert inner_product(inner_unit(4), s(2, 1)) == s(2, 1)


def test_counit_inner():
    assert counit_inner(p(2)) == 1
    assert counit_inner(s(2)) == 1
    assert counit_inner(s(1, 1)) == 0
    with pytest.raises(WeightCapError):
        counit_inner(inner_unit(3))


def test_plethysm():
    assert plethysm_pn(p(2), 3) == p(6)
    assert plethysm_pn(s(2, 1), 1) == s(2, 1)
    assert plethysm_pn(s(1, 1), 2).convert("p") == (p(2, 2) - p(4)) / 2
    assert plethysm_pn(s(1, 1), 2, side="left").convert("p") == (p(2, 2) - p(4)) / 2


def test_antipode_obstruction_notes():
    for case in ("II", "III"):
        assert antipode_obstruction(case, 3)
