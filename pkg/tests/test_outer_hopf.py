import pytest
from hypothesis import given

from schurkit.errors import WeightCapError
from schurkit.oracles import antipode_recursive, lr_product_oracle
from schurkit.outer_hopf import (
    antipode,
    check_case,
    counit_outer,
    iterated_coproduct,
    lr_coefficient,
    omega,
    outer_coproduct,
    outer_product,
    skew,
)
from schurkit.partition import Partition, conjugate, partitions_up_to
from schurkit.symfunc import SymFunc, TensorExp, e, h, p, s, schur_scalar

from conftest import partitions, symfuncs


def test_lr_examples():
    assert lr_coefficient((2,), (1,), (2, 1)) == 1
    assert lr_coefficient((2,), (2,), (3, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    for lam in partitions_up_to(4):
        for nu in partitions_up_to(4):
            assert lr_coefficient(lam, (), nu) == (1 if lam == nu else 0)


@given(partitions(4), partitions(4))
def test_lr_against_monomial_oracle(lam, mu):
    assert outer_product(s(lam), s(mu)) == SymFunc(dict(lr_product_oracle(lam, mu)))


def test_product_examples():
    assert outer_product(s(1), s(1)) == s(2) + s(1, 1)
    assert outer_product(s(), s(2, 1)) == s(2, 1)
    assert outer_product(h(2), h(1)) == h(2, 1)
    assert outer_product(p(2), p(3)).basis.value == "p"


@given(symfuncs(3), symfuncs(3), symfuncs(2))
def test_product_commutative_associative(f, g, k):
    assert f * g == g * f
    assert (f * g) * k == f * (g * k)


def test_coproduct_examples():
    assert outer_coproduct(s(1)) == TensorExp.tensor(s(1), s()) + TensorExp.tensor(s(), s(1))
    assert outer_coproduct(s(2)) == (
        TensorExp.tensor(s(2), s()) + TensorExp.tensor(s(1), s(1)) + TensorExp.tensor(s(), s(2))
    )
    assert outer_coproduct(s()) == TensorExp.tensor(s(), s())
    # p_n is primitive
    assert outer_coproduct(p(3)) == TensorExp.tensor(p(3), p()) + TensorExp.tensor(p(), p(3))


@pytest.mark.parametrize("basis", ["h", "e", "p", "m"])
def test_coproduct_basis_independent(basis):
    for lam in partitions_up_to(4):
        f = s(lam)
        assert outer_coproduct(f.convert(basis)).convert(("s", "s")) == outer_coproduct(f)


@given(partitions(5), partitions(3), partitions(3))
def test_coproduct_dual_to_product(f, g, k):
    lhs = schur_scalar(outer_coproduct(s(f)), TensorExp.tensor(s(g), s(k)))
    assert lhs == schur_scalar(s(f), s(g) * s(k))


def test_iterated_coproduct():
    t = iterated_coproduct(s(1), 3)
    assert t.arity == 3 and len(t) == 3


def test_skew_examples():
    assert skew(s(2, 1), s(1)) == s(2) + s(1, 1)
    assert skew(s(3, 1), s()) == s(3, 1)
    assert skew(s(1), s(2)) == 0


@given(partitions(5), partitions(3), partitions(3))
def test_skew_adjoint(lam, mu, nu):
    assert schur_scalar(skew(s(lam), s(mu)), s(nu)) == schur_scalar(s(lam), s(mu) * s(nu))


def test_skew_cap():
    series_like = SymFunc({(): 1, (1,): 1, (2,): 1}, cap=2)
    assert skew(series_like, s(1)).cap == 1
    with pytest.raises(WeightCapError):
        skew(s(3), SymFunc({(1,): 1}, cap=1))


def test_counit():
    assert counit_outer(1 + 2 * s(1)) == 1
    assert counit_outer(s(2, 1)) == 0
    assert counit_outer(p(2)) == 0


def test_antipode_examples():
    assert antipode(s()) == s()
    assert antipode(s(1)) == -s(1)
    assert antipode(s(2)) == s(1, 1)
    assert antipode(h(3)) == -e(3)
    assert antipode(p(2, 1)) == p(2, 1)


@given(partitions(6))
def test_antipode_closed_form_matches_recursion(lam):
    sign = -1 if sum(lam) % 2 else 1
    assert antipode(s(lam)) == sign * s(conjugate(lam))
    assert antipode(s(lam)) == SymFunc(dict(antipode_recursive(lam)))


@given(symfuncs(3), symfuncs(3))
def test_antipode_multiplicative_and_involutive(f, g):
    assert antipode(f * g) == antipode(f) * antipode(g)
    assert antipode(antipode(f)) == f


def test_omega():
    assert omega(h(2)) == e(2)
    assert omega(s(3, 1)) == s(2, 1, 1)


def test_check_case():
    assert check_case("I", 6).holds
    for case in ("II", "III"):
        rep = check_case(case, 4)
        assert rep.holds and rep.as_expected
    rep = check_case("IV", 4)
    assert not rep.holds and rep.as_expected
    assert [w.endswith(f"(ratio b/a = {n})") for n, w in zip(range(2, 5), rep.witnesses)] == [True] * 3
    with pytest.raises(ValueError):
        check_case("V", 2)
