"""Branching operators ``f -> f/Phi = (phi ⊗ Id) Delta(f)`` and the deformed products they induce."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernels as K
from .cohomology import Cochain, counit, invert
from .errors import WeightCapError
from .outer_hopf import outer_product
from .partition import Partition, conjugate, contains, partitions_of, partitions_up_to
from .series import GENERIC, GROUP_LIKE, SeriesId, characteristic_cochain
from .symfunc import Basis, Number, SymFunc, clean


class BranchingOperator:
    """The linear map ``s_lam -> sum_alpha phi(s_alpha) s_{lam/alpha}``.

    Stores only the cochain and applies it lazily.  ``cap`` (optional)
    bounds the weight of accepted inputs.
    """

    def __init__(self, cochain: Cochain, cap: int | None = None):
        if cochain.arity != 1:
            raise ValueError("branching operators are built from 1-cochains")
        self.cochain = cochain
        self.cap = cap

    @classmethod
    def from_series(cls, sid: SeriesId | str, cap: int | None = None) -> BranchingOperator:
        return cls(characteristic_cochain(sid), cap)

    @classmethod
    def identity(cls) -> BranchingOperator:
        return cls(counit(1))

    def __call__(self, f: SymFunc) -> SymFunc:
        return apply_branch(self, f)

    def inverse(self) -> BranchingOperator:
        return inverse_branch(self)

    def __repr__(self) -> str:
        return f"BranchingOperator({self.cochain.label})"


def apply_branch(op: BranchingOperator, f: SymFunc) -> SymFunc:
    """``f/Phi``.  The input must be exact: every weight of the result depends on all higher weights of ``f``."""
    if f.cap is not None:
        raise WeightCapError("branching needs an exact (untruncated) input")
    if op.cap is not None and f.degree > op.cap:
        raise WeightCapError(f"input weight {f.degree} exceeds the operator cap {op.cap}")
    phi = op.cochain
    acc: dict[Partition, Number] = {}
    for lam, c in f.convert(Basis.S).terms.items():
        for (beta, alpha), m in K.schur_coproduct(lam):
            v = phi.value(alpha)
            if v:
                acc[beta] = acc.get(beta, 0) + c * m * v
    return SymFunc._raw(clean(acc), Basis.S).convert(f.basis)


def inverse_branch(op: BranchingOperator) -> BranchingOperator:
    return BranchingOperator(invert(op.cochain), op.cap)


def _operator(phi: Cochain | BranchingOperator) -> BranchingOperator:
    return phi if isinstance(phi, BranchingOperator) else BranchingOperator(phi)


def deformed_product(phi: Cochain | BranchingOperator, f: SymFunc, g: SymFunc) -> SymFunc:
    """``f ∘_phi g = Phi^{-1}(Phi(f) · Phi(g))``."""
    op = _operator(phi)
    return apply_branch(inverse_branch(op), outer_product(apply_branch(op, f), apply_branch(op, g)))


def deformed_counit(phi: Cochain | BranchingOperator, f: SymFunc) -> Number:
    """``eps(Phi(f))``, which equals ``phi(f)``."""
    return apply_branch(_operator(phi), f).constant_term


def counit_of_deformed_square(phi: Cochain) -> Number:
    """``eps(Phi^{-1}(Phi(s_1) · Phi(s_1)))`` evaluated from the definition."""
    op = BranchingOperator(phi)
    one = SymFunc._raw({Partition.trusted((1,)): 1}, Basis.S)
    image = apply_branch(op, one)
    return apply_branch(inverse_branch(op), outer_product(image, image)).constant_term


def counit_of_deformed_square_closed(phi: Cochain) -> Number:
    """Closed form of :func:`counit_of_deformed_square`.

    Expanding ``Phi(s_1)^2 = s_1^2 + 2 phi(1) s_1 + phi(1)^2`` and applying
    ``eps∘Phi^{-1} = phi^{-1}`` gives
    ``phi^{-1}(2) + phi^{-1}(1,1) + 2 phi(1) phi^{-1}(1) + phi(1)^2``,
    and ``phi^{-1}(1) = -phi(1)`` turns the last two terms into ``-phi(1)^2``.
    """
    inv = invert(phi)
    return inv.value((2,)) + inv.value((1, 1)) - phi.value((1,)) ** 2


def counit_of_deformed_square_three_term(phi: Cochain) -> Number:
    """The three-term expression ``phi^{-1}(1,1) + phi^{-1}(2) + phi(1)^2``."""
    inv = invert(phi)
    return inv.value((1, 1)) + inv.value((2,)) + phi.value((1,)) ** 2


# -- group-like and compensated identities ---------------------------------


@dataclass
class GroupLikeReport:
    """Result of checking (lam·mu)/Phi against the identity appropriate for a series."""

    id: SeriesId
    max_weight: int
    identity: str
    holds: bool
    checked: int
    witnesses: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "holds" if self.holds else "fails"
        text = f"{self.id}: {self.identity} {verdict} for |lam|+|mu| <= {self.max_weight} ({self.checked} pairs)"
        return "\n".join([text] + [f"  witness: {w}" for w in self.witnesses])


def _s(lam: Partition) -> SymFunc:
    return SymFunc._raw({lam: 1}, Basis.S)


def _skew_partition(lam: Partition, zeta: Partition) -> SymFunc:
    return SymFunc._raw(dict(K.schur_skew(lam, zeta)), Basis.S)


def compensated_rhs(op: BranchingOperator, lam: Partition, mu: Partition, signed: bool) -> SymFunc:
    """``sum_zeta (lam/zeta)/Phi · (mu/zeta)/Phi``; with ``signed`` the second zeta
    is transposed and the term carries (-1)^|zeta|."""
    total = SymFunc._raw({}, Basis.S)
    for zeta in partitions_up_to(min(sum(lam), sum(mu))):
        other = conjugate(zeta) if signed else zeta
        if not (contains(lam, zeta) and contains(mu, other)):
            continue
        left = apply_branch(op, _skew_partition(lam, zeta))
        right = apply_branch(op, _skew_partition(mu, other))
        term = outer_product(left, right)
        total = total + (-term if signed and sum(zeta) % 2 else term)
    return total


def check_group_like(sid: SeriesId | str, max_weight: int) -> GroupLikeReport:
    """Check the product rule for ``/Phi`` over all |lam|+|mu| <= max_weight.

    Group-like series (L, M, P, Q, R, S, V, W) must satisfy
    ``(lam·mu)/Phi = lam/Phi · mu/Phi``.  B, D, F, H must satisfy the
    compensated form with the sum over all zeta; A, C, E, G the signed form
    with zeta' in the second factor.
    """
    sid = SeriesId.of(sid)
    op = BranchingOperator.from_series(sid)
    if sid in GROUP_LIKE:
        identity = "(lam·mu)/Phi = lam/Phi · mu/Phi"
    elif sid in (SeriesId.B, SeriesId.D, SeriesId.F, SeriesId.H):
        identity = "(lam·mu)/Phi = sum_zeta lam/(zeta Phi) · mu/(zeta Phi)"
    else:
        identity = "(lam·mu)/Phi = sum_zeta (-1)^|zeta| lam/(zeta Phi) · mu/(zeta' Phi)"
    witnesses = []
    checked = 0
    for n in range(max_weight + 1):
        for k in range(n // 2 + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(n - k):
                    checked += 1
                    lhs = apply_branch(op, outer_product(_s(lam), _s(mu)))
                    if sid in GROUP_LIKE:
                        rhs = outer_product(apply_branch(op, _s(lam)), apply_branch(op, _s(mu)))
                    else:
                        rhs = compensated_rhs(op, lam, mu, signed=sid not in (SeriesId.B, SeriesId.D, SeriesId.F, SeriesId.H))
                    if lhs != rhs:
                        witnesses.append(f"lam={lam}, mu={mu}: lhs {lhs} != rhs {rhs}")
    return GroupLikeReport(sid, max_weight, identity, not witnesses, checked, witnesses)


def is_generic_series(sid: SeriesId | str) -> bool:
    return SeriesId.of(sid) in GENERIC
