"""The acceptance suite: ten exact checks, each bounded by min(stated bound, N).

Each ``criterion_k(n)`` returns a :class:`Report`; :func:`run_all` runs the
lot and :func:`format_table` renders the pass/fail table used by
``schurkit selftest``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product as cartesian

from . import _kernels as K
from .branching import (
    BranchingOperator,
    apply_branch,
    check_group_like,
    counit_of_deformed_square,
    counit_of_deformed_square_three_term,
    inverse_branch,
)
from .clifford import (
    circle_product,
    grade_contract,
    nl_by_branching,
    nl_by_coboundary,
    nl_product,
    variant_product,
)
from .cohomology import (
    classify1,
    coboundary,
    counit,
    from_table,
    sample_cochains,
    schur_pairing,
    schur_pairing_inverse,
)
from .expr import format_universal
from .inner_alg import inner_product
from .oracles import count_matrices, kostka_ssyt, lr_product_oracle, series_by_generating_product
from .outer_hopf import check_case, outer_coproduct, outer_product, skew
from .partition import Partition, partitions_of, partitions_up_to, z_value
from .series import CLOSED_FORM, GENERIC, GROUP_LIKE, INVERSE_PAIRS, PRIMARY, characteristic_cochain, series, series_product
from .symfunc import Basis, SymFunc, TensorExp, kostka, schur_scalar, transition_matrix


@dataclass
class Report:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _s(lam) -> SymFunc:
    return SymFunc._raw({Partition(lam): 1}, Basis.S)


def _pairs(total: int):
    """All (lam, mu) with |lam| + |mu| <= total."""
    for n in range(total + 1):
        for k in range(n + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(n - k):
                    yield lam, mu


def _report(number: int, title: str, failures: list[str], detail: str, start: float) -> Report:
    shown = detail if not failures else f"{detail}; {len(failures)} failure(s), first: {failures[0]}"
    return Report(number, title, not failures, shown, time.perf_counter() - start, failures)


# -- 1 -----------------------------------------------------------------------


def criterion_1(n: int = 8) -> Report:
    """Tableau-rule outer products equal brute-force monomial expansion, |lam|+|mu| <= 8."""
    start = time.perf_counter()
    bound = min(8, n)
    failures, checked = [], 0
    for lam, mu in _pairs(bound):
        checked += 1
        if dict(K.schur_product(lam, mu)) != dict(lr_product_oracle(lam, mu)):
            failures.append(f"s{lam}·s{mu}")
    return _report(1, "LR oracle equivalence", failures, f"{checked} products, |lam|+|mu| <= {bound}", start)


# -- 2 -----------------------------------------------------------------------


def criterion_2(n: int = 8) -> Report:
    """Case I: coassociativity, bialgebra compatibility, counit and antipode laws, |lam| <= 8."""
    start = time.perf_counter()
    bound = min(8, n)
    rep = check_case("I", bound)
    return _report(2, "Hopf axioms (Case I)", rep.witnesses, f"{rep.checked} partitions, weight <= {bound}", start)


# -- 3 -----------------------------------------------------------------------


def criterion_3(n: int = 8) -> Report:
    """II and III hold on p_n ⊗ p_m; IV fails with the two sides differing by z_n on p_n ⊗ p_n."""
    start = time.perf_counter()
    bound = min(8, n)
    failures = []
    for case in ("II", "III"):
        rep = check_case(case, bound)
        if not rep.holds:
            failures.append(f"Case {case} fails: {rep.witnesses[0]}")
    rep = check_case("IV", bound)
    expected = [f"(ratio b/a = {z_value(Partition((k,)))})" for k in range(2, bound + 1)]
    found = [w[w.rindex("("):] for w in rep.witnesses]
    if rep.holds:
        failures.append("Case IV unexpectedly holds")
    elif found != expected:
        failures.append(f"Case IV witnesses {found} differ from the expected z_n ratios {expected}")
    detail = f"II, III hold and IV fails with ratio z_n for 2 <= n <= {bound}"
    return _report(3, "Cases II/III hold, IV fails", failures, detail, start)


# -- 4 -----------------------------------------------------------------------


def _laplace_scalar(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    for lam in partitions_up_to(bound):
        cop = outer_coproduct(_s(lam))
        for mu, nu in _pairs(sum(lam)):
            if sum(mu) + sum(nu) != sum(lam):
                continue
            checked += 1
            prod = outer_product(_s(mu), _s(nu))
            lhs_a, lhs_b = schur_scalar(_s(lam), prod), schur_scalar(prod, _s(lam))
            rhs_a = schur_scalar(cop, TensorExp.tensor(_s(mu), _s(nu)))
            rhs_b = schur_scalar(TensorExp.tensor(_s(nu), _s(mu)), cop)
            if not lhs_a == lhs_b == rhs_a == rhs_b:
                failures.append(f"scalar Laplace at {lam}; {mu}, {nu}")
    return checked, failures


def _laplace_skew(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    for lam, mu in _pairs(bound):
        prod = outer_product(_s(lam), _s(mu))
        for nu in partitions_up_to(sum(lam) + sum(mu)):
            checked += 1
            lhs = skew(prod, _s(nu))
            rhs = SymFunc._raw({}, Basis.S)
            for (n1, n2), c in K.schur_coproduct(nu):
                rhs = rhs + outer_product(skew(_s(lam), _s(n1)), skew(_s(mu), _s(n2))).scale(c)
            if lhs != rhs:
                failures.append(f"partial Laplace at ({lam}·{mu})/{nu}")
    return checked, failures


def _laplace_inner(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    for lam in partitions_up_to(bound):
        for mu, nu in _pairs(sum(lam)):
            if sum(mu) + sum(nu) != sum(lam):
                continue
            checked += 1
            lhs = inner_product(_s(lam), outer_product(_s(mu), _s(nu)))
            rhs = SymFunc._raw({}, Basis.S)
            for (l1, l2), c in K.schur_coproduct(lam):
                if sum(l1) != sum(mu):
                    continue
                rhs = rhs + outer_product(inner_product(_s(l1), _s(mu)), inner_product(_s(l2), _s(nu))).scale(c)
            if lhs != rhs:
                failures.append(f"inner Laplace at s{lam} ⋆ (s{mu}·s{nu})")
    return checked, failures


def criterion_4(n: int = 8) -> Report:
    """Scalar (weight 8), partial-skew (7) and inner-product (6) Laplace identities."""
    start = time.perf_counter()
    b1, b2, b3 = min(8, n), min(7, n), min(6, n)
    c1, f1 = _laplace_scalar(b1)
    c2, f2 = _laplace_skew(b2)
    c3, f3 = _laplace_inner(b3)
    detail = f"scalar {c1} (<= {b1}), skew {c2} (<= {b2}), inner {c3} (<= {b3}) instances"
    return _report(4, "Laplace suite", f1 + f2 + f3, detail, start)


# -- 5 -----------------------------------------------------------------------


def criterion_5(n: int = 8) -> Report:
    """Kostka numbers against SSYT counts (<= 8); M(e,m) and M(h,m) against matrix counts (<= 6)."""
    start = time.perf_counter()
    b1, b2 = min(8, n), min(6, n)
    failures, checked = [], 0
    for w in range(b1 + 1):
        for mu in partitions_of(w):
            for lam in partitions_of(w):
                checked += 1
                if kostka(mu, lam) != kostka_ssyt(mu, lam):
                    failures.append(f"K({mu},{lam})")
    for w in range(b2 + 1):
        parts = partitions_of(w)
        me, mh = transition_matrix("e", "m", w), transition_matrix("h", "m", w)
        for i, lam in enumerate(parts):
            for j, mu in enumerate(parts):
                checked += 2
                if me[i][j] != count_matrices(lam, mu, zero_one=True):
                    failures.append(f"M(e,m)[{lam}][{mu}]")
                if mh[i][j] != count_matrices(lam, mu, zero_one=False):
                    failures.append(f"M(h,m)[{lam}][{mu}]")
    return _report(5, "Kostka and matrix counts", failures, f"{checked} entries (Kostka <= {b1}, matrices <= {b2})", start)


# -- 6 -----------------------------------------------------------------------


def criterion_6(n: int = 8) -> Report:
    """Inverse pairs multiply to 1 at cap 8; closed contents match generating products at cap 6."""
    start = time.perf_counter()
    b1, b2 = min(8, n), min(6, n)
    failures = []
    for a, b in INVERSE_PAIRS:
        if series_product(series(a, b1), series(b, b1)) != SymFunc.constant(1, cap=b1):
            failures.append(f"{a}{b} != 1")
    for sid in CLOSED_FORM:
        if series(sid, b2).expansion != series_by_generating_product(sid.value, b2):
            failures.append(f"content of {sid}")
    detail = f"{len(INVERSE_PAIRS)} inverse pairs at cap {b1}, {len(CLOSED_FORM)} contents at cap {b2}"
    return _report(6, "Series", failures, detail, start)


# -- 7 -----------------------------------------------------------------------


def criterion_7(n: int = 8) -> Report:
    """Group-like series give 1-cocycles (<= 8), the rest are generic with witnesses; dd = e (<= 5)."""
    start = time.perf_counter()
    b1, b2 = min(8, n), min(5, n)
    failures = []
    witnesses = {}
    for sid in GROUP_LIKE:
        verdict = classify1(characteristic_cochain(sid), b1)
        if verdict.verdict != "cocycle":
            failures.append(f"{sid}: {verdict}")
    for sid in GENERIC:
        verdict = classify1(characteristic_cochain(sid), b1)
        if verdict.verdict != "generic" or not verdict.witness:
            failures.append(f"{sid}: {verdict}")
        else:
            witnesses[sid] = verdict.witness
    eps3 = counit(3)
    for phi in sample_cochains(b2) + [characteristic_cochain(sid) for sid in PRIMARY]:
        for pi in (phi, coboundary(phi)):
            dd = coboundary(pi) if pi.arity == 2 else coboundary(coboundary(pi))
            if not dd.equals(eps3, b2):
                failures.append(f"dd({pi.label}) != e")
    detail = f"{len(GROUP_LIKE)} cocycles and {len(witnesses)} generic at weight <= {b1}, dd = e at <= {b2}"
    return _report(7, "Cochain classification", failures, detail, start)


# -- 8 -----------------------------------------------------------------------


def criterion_8(n: int = 8) -> Report:
    """Phi^-1 Phi = Id (<= 8) for the primary series; product rules for all sixteen (<= 6)."""
    start = time.perf_counter()
    b1, b2 = min(8, n), min(6, n)
    failures, checked = [], 0
    for sid in PRIMARY:
        op = BranchingOperator.from_series(sid)
        inv = inverse_branch(op)
        for lam in partitions_up_to(b1):
            checked += 1
            if apply_branch(inv, apply_branch(op, _s(lam))) != _s(lam):
                failures.append(f"/{sid} inverse at {lam}")
    for sid in GROUP_LIKE + GENERIC:
        rep = check_group_like(sid, b2)
        checked += rep.checked
        if not rep.holds:
            failures.append(f"{sid}: {rep.witnesses[0]}")
    detail = f"{checked} instances; inverses at weight <= {b1}, product rules at |lam|+|mu| <= {b2}"
    return _report(8, "Branching", failures, detail, start)


# -- 9 -----------------------------------------------------------------------


def criterion_9(n: int = 8) -> Report:
    """eps(Phi^-1(Phi(s_1)·Phi(s_1))) against phi^-1(1,1) + phi^-1(2) + phi(1)^2.

    Symbolically: both sides are quadratic in a = phi(1), b = phi(2),
    c = phi(1,1), so agreement on the grid {0,1,2}^3 is agreement as
    polynomials.  Numerically: the value for phi_M is expected to be 2.
    """
    start = time.perf_counter()
    failures = []
    for a, b, c in cartesian(range(3), repeat=3):
        phi = from_table({(1,): a, (2,): b, (1, 1): c}, 1, "grid")
        direct = counit_of_deformed_square(phi)
        expected = counit_of_deformed_square_three_term(phi)
        if direct != expected:
            failures.append(f"a={a}, b={b}, c={c}: definition gives {direct}, expected {expected}")
    value_m = counit_of_deformed_square(characteristic_cochain("M"))
    if value_m != 2:
        failures.insert(0, f"phi_M gives {value_m}, expected 2")
    return _report(9, "Deformed counit", failures, "27 symbolic grid points and phi_M", start)


# -- 10 ----------------------------------------------------------------------


def _associativity(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    for name, pairing in (("schur", schur_pairing()), ("schur-inv", schur_pairing_inverse())):
        for total in range(bound + 1):
            for i in range(total + 1):
                for j in range(total - i + 1):
                    for lam in partitions_of(i):
                        for mu in partitions_of(j):
                            for nu in partitions_of(total - i - j):
                                checked += 1
                                left = circle_product(circle_product(_s(lam), _s(mu), pairing), _s(nu), pairing)
                                right = circle_product(_s(lam), circle_product(_s(mu), _s(nu), pairing), pairing)
                                if left != right:
                                    failures.append(f"{name} at {lam}, {mu}, {nu}")
    return checked, failures


def _nl_paths(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    for lam in partitions_up_to(bound):
        for mu in partitions_up_to(bound):
            for flavor in ("sp", "o"):
                checked += 1
                a = nl_product(lam, mu, flavor)
                if not a == nl_by_coboundary(lam, mu, flavor) == nl_by_branching(lam, mu, flavor):
                    failures.append(f"NL paths ({flavor}) at {lam}, {mu}")
    return checked, failures


def _grade_contracts(bound: int) -> tuple[int, list[str]]:
    failures, checked = [], 0
    pairings = (schur_pairing(), schur_pairing_inverse())
    for k in range(1, 9):
        for lam in partitions_up_to(bound):
            for mu in partitions_up_to(bound):
                for pairing in pairings:
                    checked += 1
                    out = variant_product(k, _s(lam), _s(mu), pairing, sweedler_basis=Basis.P)
                    allowed = grade_contract(k, sum(lam), sum(mu))
                    if not out.weights() <= allowed:
                        failures.append(f"variant {k} at {lam}, {mu}: weights {sorted(out.weights())} not in {sorted(allowed)}")
    return checked, failures


def criterion_10(n: int = 8) -> Report:
    """Associativity (<= 6), NL three paths (<= 4), <1>⊗<1>, grade contracts (<= 5)."""
    start = time.perf_counter()
    b1, b2, b3 = min(6, n), min(4, n), min(5, n)
    c1, f1 = _associativity(b1)
    c2, f2 = _nl_paths(b2)
    text = format_universal(nl_product((1,), (1,), "sp"), "sp")
    f3 = [] if text == "<2> + <1,1> + <0>" else [f"<1>⊗<1> printed as {text}"]
    c4, f4 = _grade_contracts(b3)
    detail = f"{c1} triples (<= {b1}), {c2} NL pairs (<= {b2}), {c4} variant checks (<= {b3})"
    return _report(10, "Cliffordization", f1 + f2 + f3 + f4, detail, start)


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
)


def run_all(n: int = 8, only: list[int] | None = None) -> list[Report]:
    return [c(n) for i, c in enumerate(CRITERIA, 1) if not only or i in only]


def format_table(reports: list[Report]) -> str:
    lines = [r.line() for r in reports]
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} criteria passed")
    return "\n".join(lines)
