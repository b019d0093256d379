"""The inner (Kronecker) product and the inner coproduct.

Both are diagonal on power sums: ``p_lam ⋆ p_mu = delta z_lam p_lam`` and
``delta(p_lam) = p_lam ⊗ p_lam``.  Everything is routed through the p basis
and converted back to the basis of the input.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels as K
from .errors import WeightCapError
from .partition import Partition, one_row, partitions_of, z_value
from .symfunc import Basis, Number, SymFunc, TensorExp, clean, clean_tensor, min_cap


def sn_character(lam, rho) -> int:
    """chi^lam at cycle type rho; 0 when the weights differ."""
    return K.sn_character(Partition(lam), Partition(rho))


def character_table(n: int) -> list[list[int]]:
    """``table[i][j] = chi^{P_i}_{P_j}`` with P = partitions_of(n)."""
    idx = partitions_of(n)
    return [[K.sn_character(lam, rho) for rho in idx] for lam in idx]


def inner_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker product f ⋆ g; components of different weight multiply to zero."""
    cap = min_cap(f.cap, g.cap)
    fp, gp = f.convert(Basis.P), g.convert(Basis.P)
    acc = {rho: c * gp._terms[rho] * z_value(rho) for rho, c in fp._terms.items() if rho in gp._terms}
    return SymFunc._raw(clean(acc, cap), Basis.P, cap).convert(f.basis)


def kronecker_coefficient(lam, mu, nu) -> Number:
    """``g_{lam mu nu} = (s_lam | s_mu ⋆ s_nu)``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not sum(lam) == sum(mu) == sum(nu):
        return 0
    total = Fraction(0)
    for rho in partitions_of(sum(lam)):
        total += Fraction(K.sn_character(lam, rho) * K.sn_character(mu, rho) * K.sn_character(nu, rho), z_value(rho))
    return total.numerator if total.denominator == 1 else total


def inner_coproduct(f: SymFunc) -> TensorExp:
    """delta(f), with delta(p_lam) = p_lam ⊗ p_lam, returned in the basis of f on both slots."""
    fp = f.convert(Basis.P)
    t = TensorExp._raw(clean_tensor({(rho, rho): c for rho, c in fp._terms.items()}), (Basis.P, Basis.P))
    return t.convert((f.basis, f.basis))


def inner_unit(cap: int) -> SymFunc:
    """The unit of ⋆ truncated at ``cap``: ``1 + s[1] + ... + s[cap]``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    return SymFunc._raw({one_row(n): 1 for n in range(cap + 1)}, Basis.S, cap)


def counit_inner(f: SymFunc) -> Number:
    """Evaluate the p-expansion of f at p_lam = 1 for every lam."""
    if f.cap is not None:
        raise WeightCapError("the inner counit needs an exact (untruncated) input")
    total = sum(f.convert(Basis.P)._terms.values(), 0)
    return total.numerator if isinstance(total, Fraction) and total.denominator == 1 else total


def plethysm_pn(f: SymFunc, n: int, side: str = "right") -> SymFunc:
    """f ∘ p_n (``side="right"``) or p_n ∘ f (``"left"``); both replace p_k by p_{nk}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if n < 1:
        raise ValueError("n must be a positive integer")
    cap = None if f.cap is None else f.cap * n
    fp = f.convert(Basis.P)
    terms = {Partition.trusted(tuple(n * k for k in rho)): c for rho, c in fp._terms.items()}
    return SymFunc._raw(terms, Basis.P, cap).convert(f.basis)


def antipode_obstruction(case: str, max_weight: int) -> str:
    """Why no antipode exists in Case II or III, checked on p_n for n <= max_weight.

    Case II needs S(p_n) p_n = 1_m eps(p_n) = sum_m p_m / z_m: the left side
    only has grades that are multiples of n while the right side has a term
    of every grade.  Case III needs S(p_n) ⋆ 1 + S(1) ⋆ p_n = eps(p_n) 1_m;
    at n = 0 this forces 2 S(1) = 1_m, and then for n > 0 the term
    S(1) ⋆ p_n = p_n / 2 survives in grade n, but S(p_n) ⋆ 1 lives in
    grade 0 and cannot cancel it.
    """
    case = case.upper()
    unit = inner_unit(max_weight).convert(Basis.P)
    if case == "II":
        grades = sorted({sum(rho) for rho in unit._terms})
        missing = [n for n in range(2, max_weight + 1) if any(g % n for g in grades)]
        return (
            "no antipode: for n in "
            f"{missing} the grades of S(p_n)·p_n are multiples of n but 1_M∘eps(p_n) = sum p_m/z_m "
            f"has terms of every grade up to {max_weight}"
        )
    if case == "III":
        half = inner_product(unit.scale(Fraction(1, 2)), SymFunc({(1,): 1}, Basis.P))
        return (
            "no antipode: n = 0 forces S(1) = 1_m/2, and then S(1)⋆p_1 = "
            f"{half} sits in grade 1 while S(p_1)⋆1 only has grade 0 and eps(p_1) = 0"
        )
    raise ValueError("antipode obstructions are recorded for Cases II and III")
