"""Sweedler cochains on the outer Hopf algebra of symmetric functions.

An n-cochain is a normalised scalar n-linear form, stored as a function of
n Schur indices and extended linearly.  Cochains form an abelian group
under convolution (slotwise outer coproduct) with unit the iterated counit,
and the coboundary is the alternating convolution of face maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Mapping

from . import _kernels as K
from .errors import SchurkitError
from .partition import EMPTY, Partition, conjugate, partitions_of, partitions_up_to
from .symfunc import Basis, Number, SymFunc, TensorExp, as_coeff

Key = tuple[Partition, ...]


def _norm(c: Number) -> Number:
    return c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c


class Cochain:
    """A normalised n-cochain given by its values ``fn(lam_1, ..., lam_n)`` on s_lam_1 ⊗ ... ⊗ s_lam_n.

    Values are memoised per cochain; the memo is a plain cache, so two
    concurrent evaluations may both compute an entry but agree on it.
    """

    def __init__(self, arity: int, fn: Callable[..., Number], label: str = "cochain"):
        if arity < 1:
            raise ValueError("cochains have arity >= 1")
        self.arity = arity
        self._fn = fn
        self.label = label
        self._memo: dict[Key, Number] = {}

    def value(self, *lams) -> Number:
        if len(lams) != self.arity:
            raise ValueError(f"{self.label} takes {self.arity} partitions, got {len(lams)}")
        key = tuple(x if isinstance(x, Partition) else Partition(x) for x in lams)
        try:
            return self._memo[key]
        except KeyError:
            pass
        v = _norm(as_coeff(self._fn(*key)))
        self._memo[key] = v
        return v

    def evaluate(self, x: SymFunc | TensorExp) -> Number:
        """Linear extension to a symmetric function (arity 1) or a tensor."""
        if isinstance(x, SymFunc):
            if self.arity != 1:
                raise ValueError(f"{self.label} has arity {self.arity}; pass a tensor")
            total = sum((c * self.value(lam) for lam, c in x.convert(Basis.S).terms.items()), 0)
        else:
            if x.arity != self.arity:
                raise ValueError("tensor arity does not match the cochain")
            xs = x.convert((Basis.S,) * x.arity)
            total = sum((c * self.value(*key) for key, c in xs.terms.items()), 0)
        return _norm(as_coeff(total))

    def __call__(self, *args) -> Number:
        if len(args) == 1 and isinstance(args[0], (SymFunc, TensorExp)):
            return self.evaluate(args[0])
        if args and all(isinstance(a, SymFunc) for a in args) and len(args) == self.arity:
            return self.evaluate(TensorExp.tensor(*[a.convert(Basis.S) for a in args]))
        return self.value(*args)

    def __mul__(self, other: Cochain) -> Cochain:
        if not isinstance(other, Cochain):
            return NotImplemented
        return convolve(self, other)

    def __invert__(self) -> Cochain:
        return invert(self)

    def table(self, max_weight: int) -> dict[Key, Number]:
        """Nonzero values on all index tuples of total weight <= max_weight."""
        out = {}
        for key in index_tuples(self.arity, max_weight):
            v = self.value(*key)
            if v:
                out[key] = v
        return out

    def equals(self, other: Cochain, max_weight: int) -> bool:
        """Agreement on all index tuples of total weight <= max_weight."""
        if other.arity != self.arity:
            return False
        return all(self.value(*k) == other.value(*k) for k in index_tuples(self.arity, max_weight))

    def __repr__(self) -> str:
        return f"Cochain(arity={self.arity}, {self.label})"


def index_tuples(arity: int, max_weight: int):
    """All tuples of ``arity`` partitions with total weight <= max_weight."""
    for n in range(max_weight + 1):
        yield from _tuples_of_weight(arity, n)


def _tuples_of_weight(arity: int, n: int):
    if arity == 1:
        for lam in partitions_of(n):
            yield (lam,)
        return
    for k in range(n + 1):
        for lam in partitions_of(k):
            for rest in _tuples_of_weight(arity - 1, n - k):
                yield (lam,) + rest


# -- constructors ----------------------------------------------------------


def counit(arity: int = 1) -> Cochain:
    """The convolution unit: 1 on the all-empty index, 0 elsewhere."""
    return Cochain(arity, lambda *lams: 0 if any(lams) else 1, "counit" if arity == 1 else f"counit^{arity}")


def from_table(table: Mapping, arity: int = 1, label: str = "table") -> Cochain:
    """A cochain with the given values and 0 elsewhere (1 on the all-empty index).

    Unitality requires the value to vanish whenever some but not all slots
    are empty; such entries and a non-unit value at the empty index are rejected.
    """
    values: dict[Key, Number] = {}
    for key, v in table.items():
        if arity == 1 and not (isinstance(key, tuple) and key and isinstance(key[0], tuple)):
            key = (key,)
        key = tuple(x if isinstance(x, Partition) else Partition(x) for x in key)
        if len(key) != arity:
            raise ValueError(f"table key {key} does not have {arity} slots")
        v = as_coeff(v)
        if not any(key):
            if v != 1:
                raise ValueError("a cochain is normalised: its value on 1⊗...⊗1 must be 1")
            continue
        if not all(key) and v:
            raise ValueError(f"unitality: value on {key} must be 0 when a slot is empty")
        if v:
            values[key] = v
    return Cochain(arity, lambda *lams: 1 if not any(lams) else values.get(lams, 0), label)


def schur_pairing() -> Cochain:
    """The Schur scalar product as a 2-cochain: ``delta(lam, mu)``."""
    return Cochain(2, lambda a, b: 1 if a == b else 0, "schur")


def schur_pairing_inverse() -> Cochain:
    """The convolutive inverse pairing ``(-1)^|mu| delta(lam, mu')``."""
    def value(a: Partition, b: Partition) -> int:
        if a != conjugate(b):
            return 0
        return -1 if sum(b) % 2 else 1

    return Cochain(2, value, "schur-inv")


# -- convolution group -----------------------------------------------------


def _slot_coproducts(key: Key):
    """Slotwise outer coproduct terms ``(first legs, second legs, coeff)``."""
    per_slot = [K.schur_coproduct(lam) for lam in key]
    for choice in cartesian(*per_slot):
        coeff = 1
        first, second = [], []
        for (beta, alpha), c in choice:
            coeff *= c
            first.append(beta)
            second.append(alpha)
        yield tuple(first), tuple(second), coeff


def convolve(a: Cochain, b: Cochain) -> Cochain:
    """(a*b)(x) = a(x_(1)) b(x_(2)) with the outer coproduct taken slotwise."""
    if a.arity != b.arity:
        raise ValueError("cannot convolve cochains of different arity")

    def value(*key: Partition) -> Number:
        return sum((c * a.value(*x) * b.value(*y) for x, y, c in _slot_coproducts(key)), 0)

    return Cochain(a.arity, value, f"({a.label})*({b.label})")


def convolve_all(cochains: list[Cochain]) -> Cochain:
    out = cochains[0]
    for c in cochains[1:]:
        out = convolve(out, c)
    return out


def invert(c: Cochain) -> Cochain:
    """The convolutive inverse, by recursion on total weight.

    From ``sum c^{-1}(x_(1)) c(x_(2)) = eps(x)`` and ``c(1) = 1``:
    ``c^{-1}(x) = eps(x) - sum_{x_(2) != 1} c^{-1}(x_(1)) c(x_(2))``.
    """
    inverse: Cochain

    def value(*key: Partition) -> Number:
        if not any(key):
            return 1
        total: Number = 0
        for x, y, coeff in _slot_coproducts(key):
            if any(y):
                total -= coeff * inverse.value(*x) * c.value(*y)
        return total

    inverse = Cochain(c.arity, value, f"inv({c.label})")
    return inverse


# -- face maps and coboundary ----------------------------------------------


def face(c: Cochain, i: int) -> Cochain:
    """The i-th face map, from arity n to n+1 (0 <= i <= n+1)."""
    n = c.arity
    if not 0 <= i <= n + 1:
        raise ValueError("face index out of range")

    if i == 0:
        def value(*key: Partition) -> Number:
            return 0 if key[0] else c.value(*key[1:])
    elif i == n + 1:
        def value(*key: Partition) -> Number:
            return 0 if key[-1] else c.value(*key[:-1])
    else:
        def value(*key: Partition) -> Number:
            head, tail = key[: i - 1], key[i + 1:]
            return sum((m * c.value(*head, nu, *tail) for nu, m in K.schur_product(key[i - 1], key[i])), 0)

    return Cochain(n + 1, value, f"d{i}({c.label})")


def coboundary(c: Cochain) -> Cochain:
    """``dc = d0 c * (d1 c)^{-1} * d2 c * ...`` with alternating inverses.

    ``(d_i c)^{-1} = d_i(c^{-1})`` because the face maps are built from
    algebra maps, so each inverse face is one face of the inverse cochain.
    """
    if c.arity not in (1, 2):
        raise SchurkitError("the coboundary is implemented for 1- and 2-cochains")
    inverse = invert(c)
    faces = [face(c if i % 2 == 0 else inverse, i) for i in range(c.arity + 2)]
    out = convolve_all(faces)
    out.label = f"d({c.label})"
    return out


def coboundary_closed_form(phi: Cochain) -> Cochain:
    """For a 1-cochain: ``dphi(x, y) = sum phi(x_(1)) phi(y_(1)) phi^{-1}(x_(2) y_(2))``."""
    if phi.arity != 1:
        raise ValueError("closed form is for 1-cochains")
    inverse = invert(phi)

    def value(a: Partition, b: Partition) -> Number:
        total: Number = 0
        for (b1, a1), c1 in K.schur_coproduct(a):
            fa = phi.value(b1)
            if not fa:
                continue
            for (b2, a2), c2 in K.schur_coproduct(b):
                fb = phi.value(b2)
                if not fb:
                    continue
                inner = sum((m * inverse.value(nu) for nu, m in K.schur_product(a1, a2)), 0)
                total += c1 * c2 * fa * fb * inner
        return total

    return Cochain(2, value, f"d({phi.label})")


# -- classification ----------------------------------------------------------


@dataclass
class Classification:
    """A verdict valid up to ``max_weight``, with a witness when the stronger property fails."""

    verdict: str
    max_weight: int
    witness: str | None = None
    preimage: Cochain | None = None
    notes: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        text = f"{self.verdict} (up to weight {self.max_weight})"
        if self.witness:
            text += f"; witness: {self.witness}"
        return text


def _is_trivial(c: Cochain, max_weight: int) -> str | None:
    """None if c agrees with the counit up to max_weight, else a description."""
    for key in index_tuples(c.arity, max_weight):
        if any(key) and c.value(*key):
            return f"value {c.value(*key)} on {' ⊗ '.join(map(str, key))}"
    return None


def classify1(phi: Cochain, max_weight: int) -> Classification:
    """trivial / cocycle / generic; a 1-cocycle is multiplicative: phi(xy) = phi(x) phi(y)."""
    if phi.arity != 1:
        raise ValueError("classify1 takes a 1-cochain")
    nontrivial = _is_trivial(phi, max_weight)
    if nontrivial is None:
        return Classification("trivial", max_weight)
    for n in range(2, max_weight + 1):
        for k in range(1, n // 2 + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(n - k):
                    lhs = sum((c * phi.value(nu) for nu, c in K.schur_product(lam, mu)), 0)
                    rhs = phi.value(lam) * phi.value(mu)
                    if lhs != rhs:
                        return Classification(
                            "generic",
                            max_weight,
                            f"phi(s{lam}·s{mu}) = {_norm(as_coeff(lhs))} but phi(s{lam})·phi(s{mu}) = {rhs}",
                        )
    return Classification("cocycle", max_weight, notes=[f"nontrivial: {nontrivial}"])


def cocycle_defect(pi: Cochain, max_weight: int) -> str | None:
    """None when dpi agrees with the counit up to max_weight, else the first failing triple."""
    d = coboundary(pi)
    for key in index_tuples(3, max_weight):
        expected = 0 if any(key) else 1
        v = d.value(*key)
        if v != expected:
            return f"d(pi)({', '.join(map(str, key))}) = {v}, expected {expected}"
    return None


def solve_coboundary(pi: Cochain, max_weight: int) -> tuple[Cochain | None, str | None]:
    """Find a normalised phi with d(phi) = pi up to max_weight, grade by grade.

    At grade n the unknowns phi(nu), |nu| = n, enter d(phi)(lam, mu) with
    |lam| + |mu| = n only through the term phi^{-1}(s_lam s_mu), i.e. as
    ``-sum_nu C^nu_{lam mu} phi(nu)``.  Each grade is an exact linear system;
    free unknowns are set to 0.  Returns (phi, None) or (None, witness).
    """
    if pi.arity != 2:
        raise ValueError("solve_coboundary takes a 2-cochain")
    for n in range(1, max_weight + 1):
        for lam in partitions_of(n):
            for key in ((lam, EMPTY), (EMPTY, lam)):
                if pi.value(*key):
                    return None, f"pi{key} = {pi.value(*key)} breaks unitality"
    values: dict[Partition, Number] = {}
    for n in range(2, max_weight + 1):
        trial = from_table({lam: v for lam, v in values.items()}, 1, "trial")
        d = coboundary_closed_form(trial)
        unknowns = list(partitions_of(n))
        col = {nu: j for j, nu in enumerate(unknowns)}
        rows: list[tuple[list[Fraction], Fraction, str]] = []
        for k in range(1, n // 2 + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(n - k):
                    coeffs = [Fraction(0)] * len(unknowns)
                    for nu, c in K.schur_product(lam, mu):
                        coeffs[col[nu]] -= c
                    rhs = Fraction(pi.value(lam, mu)) - d.value(lam, mu)
                    rows.append((coeffs, rhs, f"pi(s{lam} ⊗ s{mu}) = {pi.value(lam, mu)}"))
                    # the system is symmetric in lam, mu; the swapped pair must agree
                    if pi.value(lam, mu) != pi.value(mu, lam):
                        return None, f"pi(s{lam} ⊗ s{mu}) != pi(s{mu} ⊗ s{lam})"
        solution, bad = _solve_exact(rows, len(unknowns))
        if solution is None:
            return None, f"grade {n} is inconsistent at {bad}"
        for nu, v in zip(unknowns, solution):
            if v:
                values[nu] = _norm(v)
    phi = from_table(values, 1, "preimage")
    return phi, None


def _solve_exact(rows, width: int):
    """Gaussian elimination over Q; free variables 0.  Returns (x, None) or (None, label)."""
    pivots: list[tuple[int, list[Fraction], Fraction]] = []
    for coeffs, rhs, label in rows:
        coeffs = list(coeffs)
        for j, prow, prhs in pivots:
            if coeffs[j]:
                f = coeffs[j]
                coeffs = [a - f * b for a, b in zip(coeffs, prow)]
                rhs -= f * prhs
        lead = next((j for j, a in enumerate(coeffs) if a), None)
        if lead is None:
            if rhs:
                return None, label
            continue
        f = coeffs[lead]
        coeffs = [a / f for a in coeffs]
        rhs /= f
        # keep earlier pivot rows reduced in the new pivot column
        reduced = []
        for j, prow, prhs in pivots:
            g = prow[lead]
            if g:
                prow = [a - g * b for a, b in zip(prow, coeffs)]
                prhs -= g * rhs
            reduced.append((j, prow, prhs))
        pivots = reduced + [(lead, coeffs, rhs)]
    x = [Fraction(0)] * width
    for j, prow, prhs in pivots:
        x[j] = prhs  # fully reduced: other pivot columns are zero, free columns are 0
    return x, None


def classify2(pi: Cochain, max_weight: int) -> Classification:
    """trivial / coboundary / cocycle / generic, each meant up to max_weight.

    A coboundary is in particular a cocycle; the cocycle property of the
    recovered form is recorded in the notes.
    """
    if pi.arity != 2:
        raise ValueError("classify2 takes a 2-cochain")
    if _is_trivial(pi, max_weight) is None:
        return Classification("trivial", max_weight)
    phi, why_not = solve_coboundary(pi, max_weight)
    if phi is not None:
        check = coboundary_closed_form(phi)
        if not check.equals(pi, max_weight):
            raise SchurkitError("coboundary solver produced an inconsistent preimage")
        defect = cocycle_defect(pi, max_weight)
        notes = ["d(pi) = e verified" if defect is None else f"cocycle check failed: {defect}"]
        return Classification("coboundary", max_weight, preimage=phi, notes=notes)
    defect = cocycle_defect(pi, max_weight)
    if defect is None:
        return Classification("cocycle", max_weight, notes=[f"not a coboundary: {why_not}"])
    return Classification("generic", max_weight, witness=defect, notes=[f"not a coboundary: {why_not}"])


def is_cocycle1(phi: Cochain, max_weight: int) -> bool:
    return classify1(phi, max_weight).verdict in ("trivial", "cocycle")


def sample_cochains(max_weight: int) -> list[Cochain]:
    """A few deterministic non-multiplicative 1-cochains used by property checks."""
    out = []
    for seed in (1, 2, 3):
        table = {}
        for i, lam in enumerate(partitions_up_to(max_weight)):
            if lam:
                table[lam] = Fraction((seed * (i + 3)) % 5 - 2, 1 + (i % seed))
        out.append(from_table(table, 1, f"sample{seed}"))
    return out
