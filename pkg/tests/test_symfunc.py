from fractions import Fraction

import pytest
from hypothesis import given

from schurkit.oracles import count_matrices, kostka_ssyt
from schurkit.partition import Partition, partitions_of
from schurkit.symfunc import (
    Basis,
    SymFunc,
    TensorExp,
    e,
    h,
    kostka,
    m,
    matrix_count_check,
    p,
    s,
    schur_scalar,
    schur_scalar_inverse,
    transition_matrix,
)

from conftest import partitions, symfuncs


def test_construction_and_normalisation():
    f = SymFunc({(2, 1): Fraction(2, 2), (1,): 0}, "s")
    assert dict(f.terms) == {(2, 1): 1}
    assert isinstance(f.coefficient((2, 1)), int)
    with pytest.raises(TypeError):
        SymFunc({(1,): 0.5})
    assert s() == 1 and s().constant_term == 1
    assert SymFunc.zero().degree == -1


def test_printing():
    assert str(s(2, 1) + 3 * s(1, 1, 1)) == "s[2,1] + 3*s[1,1,1]"
    assert str(1 - s(1)) == "1 - s[1]"
    assert str(p(2) / 2 - p(1, 1)) == "1/2*p[2] - p[1,1]"
    # mixed bases are combined in the left operand's basis
    assert str(s(1) + p(2)) == "s[1] + s[2] - s[1,1]"
    assert str(SymFunc.zero()) == "0"


@pytest.mark.parametrize(
    "value, expected",
    [(h(2), s(2)), (e(2), s(1, 1)), (p(2), s(2) - s(1, 1)), (m(1, 1), s(1, 1)), (m(2), s(2) - s(1, 1))],
)
def test_convert_examples(value, expected):
    assert value.convert("s") == expected


@given(partitions(6))
def test_conversion_round_trips(lam):
    f = s(lam)
    for b in Basis:
        assert f.convert(b).convert(Basis.S) == f


def test_scalar_examples():
    assert schur_scalar(s(2, 1), s(2, 1)) == 1
    assert schur_scalar(p(2), p(2)) == 2
    assert schur_scalar(s(2), s(1, 1)) == 0
    assert schur_scalar(h(2), m(2)) == 1


@given(partitions(6), partitions(6))
def test_scalar_h_m_duality(lam, mu):
    assert schur_scalar(h(lam), m(mu)) == (1 if lam == mu else 0)


@given(symfuncs(4), symfuncs(4))
def test_scalar_is_symmetric_and_basis_free(f, g):
    assert schur_scalar(f, g) == schur_scalar(g, f) == schur_scalar(f.convert("p"), g.convert("h"))


@pytest.mark.parametrize("lam, mu, value", [((1, 1), (2,), 1), ((1,), (1,), -1), ((2,), (2,), 0)])
def test_scalar_inverse(lam, mu, value):
    assert schur_scalar_inverse(lam, mu) == value


@pytest.mark.parametrize("mu, lam, value", [((2, 1), (1, 1, 1), 2), ((3, 1), (3, 1), 1), ((1, 1), (2,), 0)])
def test_kostka_examples(mu, lam, value):
    assert kostka(mu, lam) == value


@pytest.mark.parametrize("n", range(7))
def test_kostka_against_tableaux(n):
    for mu in partitions_of(n):
        for lam in partitions_of(n):
            assert kostka(mu, lam) == kostka_ssyt(mu, lam)


def test_transition_examples():
    # h_2 = s_2, h_{1,1} = s_2 + s_{1,1}
    assert transition_matrix("h", "s", 2) == [[1, 0], [1, 1]]
    assert transition_matrix("s", "h", 2) == [[1, 0], [-1, 1]]
    assert transition_matrix("e", "m", 2)[1][1] == 2
    for b in "shemp":
        assert transition_matrix(b, b, 4) == [[int(i == j) for j in range(5)] for i in range(5)]


@pytest.mark.parametrize("src, dst", [("s", "p"), ("h", "e"), ("m", "s"), ("p", "m")])
def test_transition_inverse(src, dst):
    a, b = transition_matrix(src, dst, 4), transition_matrix(dst, src, 4)
    n = len(a)
    product = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert product == [[int(i == j) for j in range(n)] for i in range(n)]


def test_matrix_counts():
    assert matrix_count_check("zero-one", (1, 1), (1, 1)) == 2
    assert matrix_count_check("non-negative", (2,), (2,)) == 1
    assert matrix_count_check("zero-one", (2,), (1, 1)) == 1
    assert matrix_count_check("zero-one", (2,), (1,)) == 0
    for lam in partitions_of(5):
        for mu in partitions_of(5):
            assert matrix_count_check("zero-one", lam, mu) == count_matrices(lam, mu, True)
            assert matrix_count_check("non-negative", lam, mu) == count_matrices(lam, mu, False)


def test_arithmetic_and_equality():
    f = s(2) + s(1, 1)
    assert f - f == 0
    assert f * 2 == 2 * f
    assert s(1) * s(1) == f
    assert (s(1) + 1) ** 2 == s(1) * s(1) + 2 * s(1) + 1
    assert s(1).truncate(0) == 0


def test_capped_equality_uses_smaller_cap():
    f = SymFunc({(): 1, (3,): 1}, cap=3)
    assert f == SymFunc({(): 1}, cap=2)


def test_tensor_basics():
    t = TensorExp.tensor(s(1), s(2) + 1)
    assert t.arity == 2
    assert t.coefficient((1,), (2,)) == 1
    assert t.swap().coefficient((2,), (1,)) == 1
    assert str(TensorExp.tensor(s(1), s())) == "s[1] ⊗ 1"
    assert t.convert(("p", "p")).convert(("s", "s")) == t
