"""The S-function series L, M, P, Q, A, B, C, D, E, F, G, H, R, S, V, W.

Ten series have closed Schur contents and are built term by term; the rest
are truncated products: E = LA, F = MB, G = QA, H = PB, R = LP, S = MQ.

Generating products (for reference and for the oracle in ``oracles``):

    L = prod (1 - x_i)            M = 1/L
    P = prod (1 + x_i)^-1         Q = 1/P
    A = prod_{i<j} (1 - x_i x_j)  B = 1/A
    C = prod_{i<=j} (1 - x_i x_j) D = 1/C
    V = prod (1 - x_i^2)          W = 1/V
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .cohomology import Cochain
from .errors import WeightCapError
from .outer_hopf import outer_product
from .partition import Partition, conjugate, partitions_up_to, to_frobenius
from .symfunc import Basis, Number, SymFunc, min_cap


class SeriesId(str, Enum):
    L = "L"
    M = "M"
    P = "P"
    Q = "Q"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    R = "R"
    S = "S"
    V = "V"
    W = "W"

    @classmethod
    def of(cls, tag) -> SeriesId:
        if isinstance(tag, SeriesId):
            return tag
        try:
            return cls(str(tag).strip().upper())
        except ValueError:
            raise ValueError(f"unknown series {tag!r}; expected one of {', '.join(x.value for x in cls)}") from None

    def __str__(self) -> str:
        return self.value


SID = SeriesId
INVERSE = {
    SID.L: SID.M, SID.M: SID.L, SID.P: SID.Q, SID.Q: SID.P,
    SID.A: SID.B, SID.B: SID.A, SID.C: SID.D, SID.D: SID.C,
    SID.E: SID.F, SID.F: SID.E, SID.G: SID.H, SID.H: SID.G,
    SID.R: SID.S, SID.S: SID.R, SID.V: SID.W, SID.W: SID.V,
}
INVERSE_PAIRS = ((SID.L, SID.M), (SID.P, SID.Q), (SID.A, SID.B), (SID.C, SID.D),
                 (SID.E, SID.F), (SID.G, SID.H), (SID.R, SID.S), (SID.V, SID.W))
PRIMARY = (SID.L, SID.M, SID.P, SID.Q, SID.A, SID.B, SID.C, SID.D)
CLOSED_FORM = PRIMARY + (SID.V, SID.W)
GROUP_LIKE = (SID.L, SID.M, SID.P, SID.Q, SID.R, SID.S, SID.V, SID.W)
GENERIC = (SID.A, SID.B, SID.C, SID.D, SID.E, SID.F, SID.G, SID.H)
PRODUCTS = {
    SID.E: (SID.L, SID.A), SID.F: (SID.M, SID.B), SID.G: (SID.Q, SID.A),
    SID.H: (SID.P, SID.B), SID.R: (SID.L, SID.P), SID.S: (SID.M, SID.Q),
}


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def closed_coefficient(sid: SeriesId | str, lam) -> int:
    """Coefficient of s_lam in one of the ten series with a closed content."""
    sid = SeriesId.of(sid)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    n = sum(lam)
    if sid in (SID.L, SID.Q):
        if any(x != 1 for x in lam):
            return 0
        return _sign(n) if sid is SID.L else 1
    if sid in (SID.M, SID.P):
        if len(lam) > 1:
            return 0
        return _sign(n) if sid is SID.P else 1
    if sid in (SID.A, SID.C):
        arms, legs = to_frobenius(lam)
        shift = (0, 1) if sid is SID.A else (1, 0)
        # A: (a_1 ... a_r | a_1+1 ... a_r+1); C: (a_1+1 ... | a_1 ...)
        if all(b + shift[0] == a + shift[1] for a, b in zip(arms, legs)):
            return _sign(n // 2)
        return 0
    if sid is SID.D:
        return 1 if all(x % 2 == 0 for x in lam) else 0
    if sid is SID.B:
        return 1 if all(x % 2 == 0 for x in conjugate(lam)) else 0
    if sid in (SID.V, SID.W):
        shape = conjugate(lam) if sid is SID.V else lam
        if len(shape) > 2 or (shape and (shape[0] - (shape[1] if len(shape) > 1 else 0)) % 2):
            return 0
        return _sign(shape[1] if len(shape) > 1 else 0)
    raise ValueError(f"series {sid} is defined as a product, not by a closed content")


@lru_cache(maxsize=None)
def _expansion(sid: SeriesId, cap: int) -> SymFunc:
    if sid in CLOSED_FORM:
        terms = {}
        for lam in partitions_up_to(cap):
            c = closed_coefficient(sid, lam)
            if c:
                terms[lam] = c
        return SymFunc._raw(terms, Basis.S, cap)
    left, right = PRODUCTS[sid]
    return outer_product(_expansion(left, cap), _expansion(right, cap))


@dataclass(frozen=True)
class TruncatedSeries:
    """A series expanded in the Schur basis up to weight ``cap``."""

    id: SeriesId
    cap: int
    expansion: SymFunc

    def coefficient(self, lam) -> Number:
        lam = Partition(lam)
        if sum(lam) > self.cap:
            raise WeightCapError(f"series {self.id} is truncated at weight {self.cap}")
        return self.expansion.coefficient(lam)

    @property
    def inverse_id(self) -> SeriesId:
        return INVERSE[self.id]

    def __str__(self) -> str:
        return str(self.expansion)


def series(sid: SeriesId | str, cap: int) -> TruncatedSeries:
    """The Schur expansion of a series, truncated at weight ``cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    sid = SeriesId.of(sid)
    return TruncatedSeries(sid, cap, _expansion(sid, cap))


def series_product(a: TruncatedSeries | SymFunc, b: TruncatedSeries | SymFunc) -> SymFunc:
    """Outer product truncated to the smaller cap."""
    fa = a.expansion if isinstance(a, TruncatedSeries) else a
    fb = b.expansion if isinstance(b, TruncatedSeries) else b
    cap = min_cap(fa.cap, fb.cap)
    return outer_product(fa, fb).truncate(cap)


_BLOCK = 8


def coefficient(sid: SeriesId | str, lam) -> Number:
    """Coefficient of s_lam in the (untruncated) series."""
    sid = SeriesId.of(sid)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if sid in CLOSED_FORM:
        return closed_coefficient(sid, lam)
    n = sum(lam)
    cap = max(_BLOCK, -(-n // 4) * 4)  # reuse expansions in blocks of 4
    return _expansion(sid, cap).coefficient(lam)


def characteristic_cochain(sid: SeriesId | str, cap: int | None = None) -> Cochain:
    """phi(s_lam) = signed coefficient of s_lam in the series.

    Skewing by this cochain is skewing by the series.  With a ``cap`` the
    cochain refuses arguments above it.
    """
    sid = SeriesId.of(sid)

    def value(lam: Partition) -> Number:
        if cap is not None and sum(lam) > cap:
            raise WeightCapError(f"characteristic cochain of {sid} is capped at weight {cap}")
        return coefficient(sid, lam)

    return Cochain(1, value, f"series:{sid}")


def self_conjugate_sign(lam: Partition) -> int:
    """Coefficient of s_eps in E = LA: (-1)^((|eps| + rank)/2) on self-conjugate eps, else 0."""
    lam = Partition(lam)
    if conjugate(lam) != lam:
        return 0
    return _sign((sum(lam) + len(to_frobenius(lam).arms)) // 2)
