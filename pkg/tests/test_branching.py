import pytest
from hypothesis import given

from schurkit.branching import (
    BranchingOperator,
    apply_branch,
    check_group_like,
    counit_of_deformed_square,
    counit_of_deformed_square_closed,
    counit_of_deformed_square_three_term,
    deformed_counit,
    deformed_product,
    inverse_branch,
    is_generic_series,
)
from schurkit.clifford import circle_product
from schurkit.cohomology import coboundary, counit, from_table
from schurkit.errors import WeightCapError
from schurkit.outer_hopf import counit_outer, outer_product
from schurkit.series import GENERIC, GROUP_LIKE, PRIMARY, characteristic_cochain
from schurkit.symfunc import SymFunc, s

from conftest import partitions, symfuncs


def test_apply_examples():
    m = BranchingOperator.from_series("M")
    assert apply_branch(m, s(2, 1)) == s(2, 1) + s(2) + s(1, 1) + s(1)
    assert apply_branch(BranchingOperator.identity(), s(3, 1)) == s(3, 1)
    assert apply_branch(BranchingOperator.from_series("L"), s(1)) == s(1) - 1


def test_apply_rejects_truncated_input():
    with pytest.raises(WeightCapError):
        apply_branch(BranchingOperator.from_series("M"), SymFunc({(1,): 1}, cap=3))
    with pytest.raises(WeightCapError):
        apply_branch(BranchingOperator.from_series("M", cap=2), s(3))


def test_inverse_examples():
    m_inv = inverse_branch(BranchingOperator.from_series("M"))
    l = BranchingOperator.from_series("L")
    for lam in partitions_up_to_list(6):
        assert apply_branch(m_inv, s(lam)) == apply_branch(l, s(lam))
    d = BranchingOperator.from_series("D")
    assert apply_branch(d.inverse(), d(s(3, 2, 1))) == s(3, 2, 1)


def partitions_up_to_list(n):
    from schurkit.partition import partitions_up_to

    return list(partitions_up_to(n))


@pytest.mark.parametrize("sid", PRIMARY)
@given(lam=partitions(6))
def test_inverse_round_trip(sid, lam):
    op = BranchingOperator.from_series(sid)
    assert apply_branch(inverse_branch(op), apply_branch(op, s(lam))) == s(lam)


def test_subgroup_contracts():
    # branch by D then inverse-branch by C, and B then A, are identities
    for lam in partitions_up_to_list(5):
        for down, up in (("D", "C"), ("B", "A")):
            x = apply_branch(BranchingOperator.from_series(down), s(lam))
            assert apply_branch(BranchingOperator.from_series(up), x) == s(lam)


@given(symfuncs(3), symfuncs(3))
def test_deformed_product_trivial_and_unit(f, g):
    assert deformed_product(counit(1), f, g) == f * g
    phi = characteristic_cochain("D")
    assert deformed_product(phi, s(), f) == f


def test_deformed_product_for_cocycle():
    phi = characteristic_cochain("M")
    op = BranchingOperator(phi)
    # two construction paths agree
    direct = deformed_product(phi, s(1), s(1))
    assert direct == circle_product(s(1), s(1), coboundary(phi))
    for lam in partitions_up_to_list(3):
        for mu in partitions_up_to_list(3):
            lhs = op(deformed_product(phi, s(lam), s(mu)))
            assert lhs == op(s(lam)) * op(s(mu))


def test_deformed_product_two_paths_generic():
    phi = characteristic_cochain("D")
    for lam in partitions_up_to_list(3):
        for mu in partitions_up_to_list(3):
            assert deformed_product(phi, s(lam), s(mu)) == circle_product(s(lam), s(mu), coboundary(phi))


def test_deformed_counit():
    phi = characteristic_cochain("M")
    assert deformed_counit(phi, s(3)) == 1
    assert deformed_counit(phi, s(2, 1)) == 0
    assert counit_outer(s(1) * s(1)) == 0


def test_counit_of_deformed_square():
    assert counit_of_deformed_square(counit(1)) == 0
    m = characteristic_cochain("M")
    assert counit_of_deformed_square(m) == counit_of_deformed_square_closed(m) == 0
    # the three-term expression phi^-1(1,1) + phi^-1(2) + phi(1)^2 gives 2 for phi_M
    assert counit_of_deformed_square_three_term(m) == 2
    assert counit_of_deformed_square(characteristic_cochain("D")) == -1
    for a in range(3):
        for b in range(3):
            for c in range(3):
                phi = from_table({(1,): a, (2,): b, (1, 1): c}, 1)
                assert counit_of_deformed_square(phi) == counit_of_deformed_square_closed(phi) == a * a - b - c


@pytest.mark.parametrize("sid", GROUP_LIKE + GENERIC)
def test_group_like_and_compensated_rules(sid):
    rep = check_group_like(sid, 5)
    assert rep.holds, rep.summary()
    assert is_generic_series(sid) == (sid in GENERIC)
