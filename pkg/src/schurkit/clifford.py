"""Cliffordized products ``x ∘ y = sum pi(x_(1) ⊗ y_(1)) x_(2)·y_(2)`` and relatives.

With the Schur pairing this is ``s_lam ∘ s_mu = sum_alpha s_{lam/alpha} s_{mu/alpha}``,
the Newell-Littlewood product of universal orthogonal/symplectic characters.
"""

from __future__ import annotations

from functools import lru_cache

from . import _kernels as K
from .branching import BranchingOperator, apply_branch, inverse_branch
from .cohomology import Cochain, coboundary, convolve, schur_pairing, schur_pairing_inverse
from .inner_alg import inner_coproduct, inner_product
from .outer_hopf import outer_coproduct, outer_product
from .partition import Partition, conjugate, contains, partitions_up_to
from .series import characteristic_cochain
from .symfunc import Basis, Number, SymFunc, TensorExp, clean

FLAVORS = ("sp", "o")


def base_pairing(base: str) -> Cochain:
    """``"schur"`` or ``"schur-inverse"`` (also ``"schur-inv"``)."""
    if base == "schur":
        return schur_pairing()
    if base in ("schur-inverse", "schur-inv"):
        return schur_pairing_inverse()
    raise ValueError(f"unknown base pairing {base!r}; expected schur or schur-inverse")


def circle_product(f: SymFunc, g: SymFunc, pairing: Cochain) -> SymFunc:
    """``sum pi(f_(1) ⊗ g_(1)) f_(2)·g_(2)`` using outer coproducts and the outer product."""
    if pairing.arity != 2:
        raise ValueError("the circle product needs a 2-cochain")
    acc: dict[Partition, Number] = {}
    fs, gs = f.convert(Basis.S), g.convert(Basis.S)
    for lam, a in fs.terms.items():
        cop_l = K.schur_coproduct(lam)
        for mu, b in gs.terms.items():
            for (l2, l1), c1 in cop_l:
                for (m2, m1), c2 in K.schur_coproduct(mu):
                    v = pairing.value(l1, m1)
                    if not v:
                        continue
                    w = a * b * c1 * c2 * v
                    for nu, d in K.schur_product(l2, m2):
                        acc[nu] = acc.get(nu, 0) + w * d
    return SymFunc._raw(clean(acc), Basis.S).convert(f.basis)


def gauged_pairing(base: str, phi: Cochain) -> Cochain:
    """``pi = base * d(phi)``."""
    return convolve(base_pairing(base), coboundary(phi))


def gauged_circle_product(f: SymFunc, g: SymFunc, base: str, phi: Cochain) -> SymFunc:
    """Circle product with the pairing ``base * d(phi)``."""
    return circle_product(f, g, gauged_pairing(base, phi))


def gauged_by_branching(f: SymFunc, g: SymFunc, base: str, phi: Cochain) -> SymFunc:
    """``Phi^{-1}(Phi(f) ∘_base Phi(g))``, the second construction of the gauged product."""
    op = BranchingOperator(phi)
    return apply_branch(inverse_branch(op), circle_product(apply_branch(op, f), apply_branch(op, g), base_pairing(base)))


@lru_cache(maxsize=None)
def _nl_terms(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    acc: dict[Partition, int] = {}
    for zeta in partitions_up_to(min(sum(lam), sum(mu))):
        if not (contains(lam, zeta) and contains(mu, zeta)):
            continue
        for a, c in K.schur_skew(lam, zeta):
            for b, d in K.schur_skew(mu, zeta):
                for nu, e in K.schur_product(a, b):
                    acc[nu] = acc.get(nu, 0) + c * d * e
    return tuple(clean(acc).items())


def nl_product(lam, mu, flavor: str = "o") -> SymFunc:
    """Newell-Littlewood product ``sum_zeta (lam/zeta)·(mu/zeta)``, an exact finite sum.

    The coefficient of s_nu is the multiplicity of the universal character
    <nu> (Sp) or [nu] (O) in the product; the two flavors agree at this level.
    """
    if flavor.lower() not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; expected sp or o")
    lam, mu = Partition(lam), Partition(mu)
    if (sum(lam), lam) < (sum(mu), mu):
        lam, mu = mu, lam
    return SymFunc._raw(dict(_nl_terms(lam, mu)), Basis.S)


def nl_by_branching(lam, mu, flavor: str = "o") -> SymFunc:
    """The universal-character product through U(n) branching.

    O: ``((lam/C)·(mu/C))/D``; Sp: ``((lam/A)·(mu/A))/B``.
    """
    up, down = {"o": ("C", "D"), "sp": ("A", "B")}[flavor.lower()]
    lift = BranchingOperator.from_series(up)
    restrict = BranchingOperator.from_series(down)
    lam_s = SymFunc._raw({Partition(lam): 1}, Basis.S)
    mu_s = SymFunc._raw({Partition(mu): 1}, Basis.S)
    return apply_branch(restrict, outer_product(apply_branch(lift, lam_s), apply_branch(lift, mu_s)))


def nl_by_coboundary(lam, mu, flavor: str = "o") -> SymFunc:
    """Cliffordization by the 2-coboundary ``d(phi_C)`` (O) or ``d(phi_A)`` (Sp)."""
    sid = {"o": "C", "sp": "A"}[flavor.lower()]
    pairing = coboundary(characteristic_cochain(sid))
    return circle_product(SymFunc({Partition(lam): 1}), SymFunc({Partition(mu): 1}), pairing)


# -- the eight variants ----------------------------------------------------

READINGS = ("literal", "[2]")


def _legs(f: SymFunc, kind: str, basis: Basis) -> TensorExp:
    g = f.convert(basis)
    return outer_coproduct(g) if kind == "outer" else inner_coproduct(g)


_VARIANTS = {
    # k: (coproduct on f, coproduct on g, product on the remaining legs)
    1: ("outer", "outer", "outer"),
    2: ("outer", "outer", "inner"),
    3: ("inner", "outer", "outer"),
    4: ("inner", "outer", "inner"),
    5: ("outer", "inner", "outer"),
    6: ("outer", "inner", "inner"),
    7: ("inner", "inner", "outer"),
    8: ("inner", "inner", "inner"),
}


def variant_product(
    k: int,
    f: SymFunc,
    g: SymFunc,
    pairing: Cochain,
    reading: str = "literal",
    sweedler_basis: Basis | str = Basis.S,
) -> SymFunc:
    """The k-th cliffordization: ``sum pi(f_1 ⊗ g_1) prod(f_2 ⊗ g_2)``.

    Outer (round) or inner (square) coproducts are applied to f and g and
    the outer product M or inner product m to the second legs, per ``_VARIANTS``.
    For k = 7, 8 both coproducts are inner; ``reading="literal"`` uses the
    first leg in both places, as the formula is displayed, with the Sweedler
    sum taken termwise in ``sweedler_basis``; ``reading="[2]"`` uses the
    second leg in the product.  In the p basis the inner coproduct is
    diagonal and the two readings coincide.
    """
    if k not in _VARIANTS:
        raise ValueError("variant must be 1..8")
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    basis = Basis.of(sweedler_basis)
    kf, kg, kp = _VARIANTS[k]
    product = outer_product if kp == "outer" else inner_product
    literal = k in (7, 8) and reading == "literal"
    tf, tg = _legs(f, kf, basis), _legs(g, kg, basis)
    pair_cache: dict = {}
    total = SymFunc._raw({}, basis)
    for (a1, a2), c in tf.terms.items():
        for (b1, b2), d in tg.terms.items():
            key = (a1, b1)
            if key not in pair_cache:
                elem = TensorExp._raw({(a1, b1): 1}, (basis, basis))
                pair_cache[key] = pairing.evaluate(elem)
            v = pair_cache[key]
            if not v:
                continue
            x, y = (a1, b1) if literal else (a2, b2)
            prod = product(SymFunc._raw({x: 1}, basis), SymFunc._raw({y: 1}, basis))
            total = total + prod.scale(c * d * v)
    return total.convert(f.basis)


def grade_contract(k: int, n: int, m: int) -> set[int]:
    """Grades allowed in the product of homogeneous elements of grades n and m."""
    if k == 1:
        return {n + m - 2 * r for r in range(min(n, m) + 1)}
    if k == 2:
        return {n - r for r in range(n + 1)} if n == m else set()
    if k == 3:
        return {m}
    if k == 4:
        return {n} if n == m - n else set()
    if k == 5:
        return {n}
    if k == 6:
        return {m} if n - m == m else set()
    if k == 7:
        return {2 * n} if n == m else set()
    if k == 8:
        return {n} if n == m else set()
    raise ValueError("variant must be 1..8")

