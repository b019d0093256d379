from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurkit.cohomology import (
    Cochain,
    classify1,
    classify2,
    coboundary,
    coboundary_closed_form,
    convolve,
    counit,
    face,
    from_table,
    invert,
    sample_cochains,
    schur_pairing,
    schur_pairing_inverse,
    solve_coboundary,
)
from schurkit.errors import SchurkitError
from schurkit.partition import partitions_up_to
from schurkit.series import characteristic_cochain
from schurkit.symfunc import TensorExp, s

from conftest import partitions


def random_cochain(values):
    table = {lam: v for lam, v in zip(list(partitions_up_to(4))[1:], values)}
    return from_table(table, 1, "random")


cochains = st.lists(st.fractions(-3, 3, max_denominator=3), min_size=11, max_size=11).map(random_cochain)


def test_from_table_normalisation():
    with pytest.raises(ValueError):
        from_table({(): 2}, 1)
    with pytest.raises(ValueError):
        from_table({((1,), ()): 1}, 2)
    c = from_table({(2, 1): Fraction(1, 2)}, 1)
    assert c.value(()) == 1 and c.value((2, 1)) == Fraction(1, 2) and c.value((3,)) == 0


def test_evaluate_is_linear():
    phi = characteristic_cochain("M")
    assert phi.evaluate(s(2) + 3 * s(1) - s(1, 1)) == 4
    assert schur_pairing().evaluate(TensorExp.tensor(s(1) + s(2), s(1))) == 1


def test_invert_examples():
    assert invert(counit(1)).equals(counit(1), 5)
    assert invert(characteristic_cochain("M")).equals(characteristic_cochain("L"), 6)
    assert invert(invert(schur_pairing())).equals(schur_pairing(), 5)
    assert invert(schur_pairing()).equals(schur_pairing_inverse(), 5)


@given(cochains)
def test_inverse_is_convolution_inverse(phi):
    assert convolve(phi, invert(phi)).equals(counit(1), 6)
    assert convolve(invert(phi), phi).equals(counit(1), 6)


def test_convolve_arity_mismatch():
    with pytest.raises(ValueError):
        convolve(counit(1), counit(2))


def test_face_maps_commute_with_inversion():
    phi = sample_cochains(4)[0]
    for i in range(3):
        assert invert(face(phi, i)).equals(face(invert(phi), i), 4)


def test_coboundary_examples():
    assert coboundary(counit(1)).equals(counit(2), 5)
    assert coboundary(characteristic_cochain("M")).equals(counit(2), 5)
    phi = characteristic_cochain("D")
    assert coboundary(phi).equals(coboundary_closed_form(phi), 4)
    with pytest.raises(SchurkitError):
        coboundary(counit(3))


@given(cochains, cochains)
def test_coboundary_is_homomorphism(a, b):
    assert coboundary(convolve(a, b)).equals(convolve(coboundary(a), coboundary(b)), 4)


@given(cochains)
def test_coboundary_squares_to_counit(phi):
    assert coboundary(coboundary(phi)).equals(counit(3), 4)


def test_classify1():
    assert classify1(counit(1), 6).verdict == "trivial"
    assert classify1(characteristic_cochain("M"), 8).verdict == "cocycle"
    result = classify1(characteristic_cochain("D"), 4)
    assert result.verdict == "generic" and "s[1]·s[1]" in result.witness
    assert "up to weight 4" in str(result)


def test_classify2():
    assert classify2(counit(2), 5).verdict == "trivial"
    d = classify2(coboundary(characteristic_cochain("D")), 5)
    assert d.verdict == "coboundary"
    assert coboundary(d.preimage).equals(coboundary(characteristic_cochain("D")), 5)
    # the Schur pairing is a coboundary, hence in particular a cocycle
    assert classify2(schur_pairing(), 6).verdict == "coboundary"
    assert classify2(schur_pairing_inverse(), 5).verdict == "coboundary"
    generic = classify2(from_table({((1,), (2,)): 1}, 2), 3)
    assert generic.verdict == "generic" and generic.witness


def test_solve_coboundary_recovers_known_preimages():
    for sid in "ACEG":
        pi = coboundary(characteristic_cochain(sid))
        phi, why = solve_coboundary(pi, 4)
        assert why is None and coboundary(phi).equals(pi, 4)


def test_sample_cochains_are_not_cocycles():
    for phi in sample_cochains(4):
        assert classify1(phi, 4).verdict == "generic"
