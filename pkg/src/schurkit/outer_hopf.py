"""The outer Hopf algebra: product, coproduct, skew, counit and antipode.

The Schur basis uses Littlewood-Richardson coefficients.  In the
multiplicative bases h, e and p products are concatenations of parts and
coproducts are products of the coproducts of the generators; the m basis is
routed through s.  Results come back in the basis of the (left) operand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from . import _kernels as K
from .errors import WeightCapError
from .partition import EMPTY, Partition, conjugate, one_row, partitions_of, partitions_up_to
from .symfunc import Basis, Number, SymFunc, TensorExp, clean, clean_tensor, min_cap


def lr_coefficient(lam, mu, nu) -> int:
    """``C^nu_{lam mu}``, the coefficient of s_nu in s_lam * s_mu."""
    return K.lr_coefficient(Partition(lam), Partition(mu), Partition(nu))


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition.trusted(sorted(a + b, reverse=True))


def outer_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """The ordinary product f*g, truncated to the smaller cap of the inputs."""
    cap = min_cap(f.cap, g.cap)
    basis = f.basis
    if basis is Basis.M:
        return outer_product(f.convert(Basis.S), g.convert(Basis.S)).convert(Basis.M)
    if g.basis is not basis:
        g = g.convert(basis)
    acc: dict[Partition, Number] = {}
    for lam, a in f._terms.items():
        wl = sum(lam)
        for mu, b in g._terms.items():
            if cap is not None and wl + sum(mu) > cap:
                continue
            if basis is Basis.S:
                for nu, c in K.schur_product(lam, mu):
                    acc[nu] = acc.get(nu, 0) + a * b * c
            else:
                nu = _merge(lam, mu)
                acc[nu] = acc.get(nu, 0) + a * b
    return SymFunc._raw(clean(acc, cap), basis, cap)


def _generator_coproduct(basis: Basis, n: int) -> list[tuple[tuple[Partition, Partition], int]]:
    if basis is Basis.P:
        return [((one_row(n), EMPTY), 1), ((EMPTY, one_row(n)), 1)]
    # h_n and e_n are both indexed by the one-row partition (n) in their own basis
    return [((one_row(n - k), one_row(k)), 1) for k in range(n + 1)]


def _coproduct_element(basis: Basis, lam: Partition) -> list[tuple[tuple[Partition, Partition], int]]:
    if basis is Basis.S:
        return list(K.schur_coproduct(lam))
    acc: dict[tuple[Partition, Partition], int] = {(EMPTY, EMPTY): 1}
    for part in lam:
        nxt: dict = {}
        for (a, b), c in acc.items():
            for (x, y), d in _generator_coproduct(basis, part):
                key = (_merge(a, x), _merge(b, y))
                nxt[key] = nxt.get(key, 0) + c * d
        acc = nxt
    return list(acc.items())


def outer_coproduct(f: SymFunc) -> TensorExp:
    """Delta(f); on Schur functions sum_alpha s_{lam/alpha} ⊗ s_alpha."""
    if f.basis is Basis.M:
        return outer_coproduct(f.convert(Basis.S)).convert((Basis.M, Basis.M))
    acc: dict = {}
    for lam, a in f._terms.items():
        for key, c in _coproduct_element(f.basis, lam):
            acc[key] = acc.get(key, 0) + a * c
    return TensorExp._raw(clean_tensor(acc), (f.basis, f.basis))


def iterated_coproduct(f: SymFunc, k: int) -> TensorExp:
    """The k-slot iterated outer coproduct, in the Schur basis."""
    if k < 1:
        raise ValueError("need at least one slot")
    acc: dict = {}
    for lam, a in f.convert(Basis.S)._terms.items():
        for key, c in K.iterated_coproduct(lam, k):
            acc[key] = acc.get(key, 0) + a * c
    return TensorExp._raw(clean_tensor(acc), (Basis.S,) * k)


def skew(f: SymFunc, g: SymFunc) -> SymFunc:
    """The skew f/g, adjoint to multiplication by g: ``(f/g | x) = (f | g*x)``.

    If ``f`` is truncated at N and ``g`` has degree d, only weights up to
    N - d of the result are reliable, and the result carries that cap.  A
    truncated divisor must reach the weight of the dividend.
    """
    if g.cap is not None and f.degree > g.cap:
        raise WeightCapError(
            f"divisor is truncated at weight {g.cap} but the dividend has weight {f.degree}"
        )
    cap = f.cap
    if cap is not None and g:
        cap -= max(g.degree, 0)
        if cap < 0:
            raise WeightCapError("dividend is truncated below the weight of the divisor")
    fs, gs = f.convert(Basis.S), g.convert(Basis.S)
    acc: dict[Partition, Number] = {}
    for lam, a in fs._terms.items():
        for mu, b in gs._terms.items():
            for nu, c in K.schur_skew(lam, mu):
                acc[nu] = acc.get(nu, 0) + a * b * c
    return SymFunc._raw(clean(acc, cap), Basis.S, cap).convert(f.basis)


def counit_outer(f: SymFunc) -> Number:
    """Projection onto the constant term (the same in every basis)."""
    return f.constant_term


def antipode(f: SymFunc) -> SymFunc:
    """S(s_lam) = (-1)^|lam| s_lam'; on power sums S(p_lam) = (-1)^len(lam) p_lam."""
    if f.basis is Basis.P:
        return f.map_partitions(lambda lam: (lam, -1 if len(lam) % 2 else 1))
    if f.basis is Basis.S:
        return f.map_partitions(lambda lam: (conjugate(lam), -1 if sum(lam) % 2 else 1))
    if f.basis in (Basis.H, Basis.E):
        # S(h_lam) = (-1)^|lam| e_lam and vice versa
        other = Basis.E if f.basis is Basis.H else Basis.H
        swapped = SymFunc._raw(
            {lam: (-c if sum(lam) % 2 else c) for lam, c in f._terms.items()}, other, f.cap
        )
        return swapped.convert(f.basis)
    return antipode(f.convert(Basis.S)).convert(f.basis)


def omega(f: SymFunc) -> SymFunc:
    """The involution s_lam -> s_lam'."""
    return f.convert(Basis.S).map_partitions(lambda lam: (conjugate(lam), 1)).convert(f.basis)


# -- verification of the four structure cases ------------------------------


@dataclass
class CaseReport:
    """Outcome of checking one of the four product/coproduct pairings.

    ``holds`` says whether the bialgebra homomorphism identity held on every
    instance checked; ``expected`` is what the theory predicts, so a report
    is consistent with theory when the two agree.
    """

    case: str
    max_weight: int
    holds: bool
    expected: bool
    checked: int
    witnesses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def as_expected(self) -> bool:
        return self.holds == self.expected

    def summary(self) -> str:
        verdict = "holds" if self.holds else "fails"
        lines = [
            f"Case {self.case} (weight <= {self.max_weight}, {self.checked} instances): "
            f"homomorphism identity {verdict}; {'as expected' if self.as_expected else 'UNEXPECTED'}"
        ]
        lines += [f"  witness: {w}" for w in self.witnesses]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def check_coassociativity(max_weight: int) -> list[Partition]:
    """Partitions (weight <= max_weight) where (Delta⊗Id)Delta != (Id⊗Delta)Delta."""
    bad = []
    for lam in partitions_up_to(max_weight):
        left: dict = {}
        right: dict = {}
        for (beta, alpha), c in K.schur_coproduct(lam):
            for (b2, a2), d in K.schur_coproduct(beta):
                key = (b2, a2, alpha)
                left[key] = left.get(key, 0) + c * d
            for (b2, a2), d in K.schur_coproduct(alpha):
                key = (beta, b2, a2)
                right[key] = right.get(key, 0) + c * d
        if clean_tensor(left) != clean_tensor(right):
            bad.append(lam)
    return bad


def check_bialgebra(max_weight: int) -> list[tuple[Partition, Partition]]:
    """Pairs with |lam|+|mu| <= max_weight where Delta(s_lam s_mu) != Delta(s_lam) Delta(s_mu)."""
    bad = []
    for n in range(max_weight + 1):
        for k in range(n + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(n - k):
                    if (k, lam) > (n - k, mu):
                        continue  # commutativity covers the swapped pair
                    lhs: dict = {}
                    for nu, c in K.schur_product(lam, mu):
                        for key, d in K.schur_coproduct(nu):
                            lhs[key] = lhs.get(key, 0) + c * d
                    rhs: dict = {}
                    for (b1, a1), c1 in K.schur_coproduct(lam):
                        for (b2, a2), c2 in K.schur_coproduct(mu):
                            for x, d1 in K.schur_product(b1, b2):
                                for y, d2 in K.schur_product(a1, a2):
                                    key = (x, y)
                                    rhs[key] = rhs.get(key, 0) + c1 * c2 * d1 * d2
                    if clean_tensor(lhs) != clean_tensor(rhs):
                        bad.append((lam, mu))
    return bad


def check_counit(max_weight: int) -> list[Partition]:
    """Partitions where (eps⊗Id)Delta or (Id⊗eps)Delta differs from the identity."""
    bad = []
    for lam in partitions_up_to(max_weight):
        cop = dict(K.schur_coproduct(lam))
        left = {k[1]: c for k, c in cop.items() if not k[0]}
        right = {k[0]: c for k, c in cop.items() if not k[1]}
        if left != {lam: 1} or right != {lam: 1}:
            bad.append(lam)
    return bad


def antipode_identity_defect(lam) -> SymFunc:
    """``sum S(s_lam(1)) s_lam(2) - delta_{lam,0}``; zero when the antipode law holds."""
    lam = Partition(lam)
    acc: dict[Partition, Number] = {}
    for (beta, alpha), c in K.schur_coproduct(lam):
        sign = -1 if sum(beta) % 2 else 1
        for nu, d in K.schur_product(conjugate(beta), alpha):
            acc[nu] = acc.get(nu, 0) + sign * c * d
    if not lam:
        acc[EMPTY] = acc.get(EMPTY, 0) - 1
    return SymFunc._raw(clean(acc), Basis.S)


def check_antipode(max_weight: int) -> list[Partition]:
    bad = []
    for lam in partitions_up_to(max_weight):
        right = antipode_identity_defect(lam)
        # the mirrored law sum s_lam(1) S(s_lam(2)) = delta
        acc: dict[Partition, Number] = {}
        for (beta, alpha), c in K.schur_coproduct(lam):
            sign = -1 if sum(alpha) % 2 else 1
            for nu, d in K.schur_product(beta, conjugate(alpha)):
                acc[nu] = acc.get(nu, 0) + sign * c * d
        if not lam:
            acc[EMPTY] = acc.get(EMPTY, 0) - 1
        if right or clean(acc):
            bad.append(lam)
    return bad


def _p(*parts: int) -> SymFunc:
    return SymFunc._raw({Partition(sorted(parts, reverse=True)): 1}, Basis.P)


def _sw_middle(t1: TensorExp, t2: TensorExp, mult) -> TensorExp:
    """``(mult⊗mult)(Id⊗sw⊗Id)(t1⊗t2)`` for two 2-tensors."""
    acc: dict = {}
    for (a1, a2), c in t1._terms.items():
        for (b1, b2), d in t2._terms.items():
            x = mult(SymFunc._raw({a1: 1}, t1.bases[0]), SymFunc._raw({b1: 1}, t2.bases[0]))
            y = mult(SymFunc._raw({a2: 1}, t1.bases[1]), SymFunc._raw({b2: 1}, t2.bases[1]))
            for (k, u), (l, v) in cartesian(x._terms.items(), y._terms.items()):
                acc[(k, l)] = acc.get((k, l), 0) + c * d * u * v
    return TensorExp._raw(clean_tensor(acc), (t1.bases[0], t1.bases[1]))


def check_case(case: str, max_weight: int) -> CaseReport:
    """Check the bialgebra homomorphism identity for one product/coproduct pairing.

    I: outer product and outer coproduct (also coassociativity, counit and
    antipode laws).  II: outer product, inner coproduct.  III: inner
    product, outer coproduct.  IV: inner product and inner coproduct, where
    the identity must fail: the two sides differ by the factor z_n = n on
    p_n ⊗ p_n.  II-IV are checked on power-sum generators p_n ⊗ p_m with
    n, m <= max_weight.
    """
    from .inner_alg import antipode_obstruction, inner_coproduct, inner_product

    case = str(case).strip().upper()
    if max_weight < 0:
        raise ValueError("max_weight must be non-negative")
    if case == "I":
        witnesses = []
        for lam in check_coassociativity(max_weight):
            witnesses.append(f"coassociativity fails at {lam}")
        for lam, mu in check_bialgebra(max_weight):
            witnesses.append(f"Delta(s{lam} s{mu}) != Delta(s{lam}) Delta(s{mu})")
        for lam in check_counit(max_weight):
            witnesses.append(f"counit law fails at {lam}")
        for lam in check_antipode(max_weight):
            witnesses.append(f"antipode identity fails at {lam}")
        checked = sum(len(partitions_of(n)) for n in range(max_weight + 1))
        return CaseReport("I", max_weight, not witnesses, True, checked, witnesses)

    if case not in ("II", "III", "IV"):
        raise ValueError(f"unknown case {case!r}; expected I, II, III or IV")
    product, coproduct = {
        "II": (outer_product, inner_coproduct),
        "III": (inner_product, outer_coproduct),
        "IV": (inner_product, inner_coproduct),
    }[case]
    witnesses: list[str] = []
    checked = 0
    for n in range(1, max_weight + 1):
        for m_ in range(1, max_weight + 1):
            checked += 1
            side_a = coproduct(product(_p(n), _p(m_)))
            side_b = _sw_middle(coproduct(_p(n)), coproduct(_p(m_)), product)
            if side_a == side_b:
                continue
            ratio = _tensor_ratio(side_b, side_a)
            shown = f"ratio b/a = {ratio}" if ratio is not None else "sides not proportional"
            witnesses.append(f"p{one_row(n)} ⊗ p{one_row(m_)}: a) {side_a}  b) {side_b}  ({shown})")
    notes = []
    if case in ("II", "III"):
        notes.append(antipode_obstruction(case, max_weight))
    return CaseReport(case, max_weight, not witnesses, case != "IV", checked, witnesses, notes)


def _tensor_ratio(num: TensorExp, den: TensorExp) -> Number | None:
    """The scalar r with num == r*den, or None."""
    if not den or set(num._terms) != set(den._terms):
        return None
    ratios = {Fraction(num._terms[k]) / den._terms[k] for k in den._terms}
    if len(ratios) != 1:
        return None
    r = ratios.pop()
    return r.numerator if r.denominator == 1 else r
