"""Symmetric functions as sparse exact linear combinations over one of five bases.

A :class:`SymFunc` maps partitions to exact coefficients (``int`` or
``Fraction``) and carries a basis tag and an optional weight cap.  ``cap=None``
means the value is exact; a numeric cap means every term above that weight
has been discarded, and operations propagate the smaller cap of their inputs.

Conversions go through the Schur basis: characters for s<->p, Jacobi-Trudi
for s->h and s->e, products of one-row (one-column) functions for h->s
(e->s), and the unitriangular Kostka matrix for s<->m.
"""

from __future__ import annotations

import numbers
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from . import _kernels as K
from .partition import (
    EMPTY,
    Partition,
    conjugate,
    one_column,
    one_row,
    partitions_of,
    sort_key,
    z_value,
)

Number = Union[int, Fraction]


class Basis(str, Enum):
    S = "s"
    H = "h"
    E = "e"
    M = "m"
    P = "p"

    @classmethod
    def of(cls, tag) -> Basis:
        if isinstance(tag, Basis):
            return tag
        try:
            return cls(str(tag).strip().lower())
        except ValueError:
            raise ValueError(f"unknown basis {tag!r}; expected one of s, h, e, m, p") from None

    def __str__(self) -> str:
        return self.value


def as_coeff(value) -> Number:
    """Normalise a coefficient to ``int`` or a non-integral ``Fraction``."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_coeff(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not supported; use Fraction")
    if isinstance(value, numbers.Rational):
        return as_coeff(Fraction(value.numerator, value.denominator))
    raise TypeError(f"cannot use {value!r} as an exact coefficient")


def min_cap(*caps: int | None) -> int | None:
    known = [c for c in caps if c is not None]
    return min(known) if known else None


def clean(acc: Mapping[Partition, Number], cap: int | None = None) -> dict[Partition, Number]:
    """Drop zero entries (and entries above ``cap``), normalising Fractions."""
    out = {}
    for lam, c in acc.items():
        if not c or (cap is not None and sum(lam) > cap):
            continue
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        out[lam] = c
    return out


def format_coefficient(c: Number) -> str:
    return str(c)


class SymFunc:
    """A finite exact linear combination of basis functions indexed by partitions."""

    __slots__ = ("basis", "_terms", "cap")

    def __init__(
        self,
        terms: Mapping | Iterable[tuple] | None = None,
        basis: Basis | str = Basis.S,
        cap: int | None = None,
    ):
        if cap is not None and cap < 0:
            raise ValueError("weight cap must be non-negative")
        self.basis = Basis.of(basis)
        self.cap = cap
        acc: dict[Partition, Number] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            acc[lam] = acc.get(lam, 0) + as_coeff(c)
        self._terms = clean(acc, cap)

    @classmethod
    def _raw(cls, terms: dict, basis: Basis, cap: int | None = None) -> SymFunc:
        """Wrap an already clean term dict without copying or validating."""
        obj = object.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        obj.cap = cap
        return obj

    @classmethod
    def constant(cls, c: Number = 1, basis: Basis | str = Basis.S, cap: int | None = None) -> SymFunc:
        return cls({EMPTY: c}, basis, cap)

    @classmethod
    def zero(cls, basis: Basis | str = Basis.S, cap: int | None = None) -> SymFunc:
        return cls({}, basis, cap)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Partition, Number]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Partition, Number]]:
        """Terms in canonical order: weight ascending, reverse-lex within a weight."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def coefficient(self, lam) -> Number:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return self._terms.get(lam, 0)

    @property
    def constant_term(self) -> Number:
        return self._terms.get(EMPTY, 0)

    def weights(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    @property
    def degree(self) -> int:
        """Largest weight present, or -1 for the zero function."""
        return max((sum(lam) for lam in self._terms), default=-1)

    def is_homogeneous(self, n: int | None = None) -> bool:
        w = self.weights()
        return len(w) <= 1 and (n is None or not w or w == {n})

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    @property
    def is_exact(self) -> bool:
        return self.cap is None

    def component(self, n: int) -> SymFunc:
        """Homogeneous component of weight ``n``."""
        return SymFunc._raw({k: v for k, v in self._terms.items() if sum(k) == n}, self.basis, self.cap)

    def truncate(self, cap: int | None) -> SymFunc:
        cap = min_cap(self.cap, cap)
        return SymFunc._raw(clean(self._terms, cap), self.basis, cap)

    def with_cap(self, cap: int | None) -> SymFunc:
        """Same terms with the cap replaced (terms above a new numeric cap dropped)."""
        return SymFunc._raw(clean(self._terms, cap), self.basis, cap)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(lam for lam, _ in self.items())

    # -- conversion -------------------------------------------------------

    def convert(self, target: Basis | str) -> SymFunc:
        return convert(self, target)

    to = convert

    def map_coefficients(self, fn) -> SymFunc:
        return SymFunc._raw(clean({k: fn(v) for k, v in self._terms.items()}), self.basis, self.cap)

    def map_partitions(self, fn) -> SymFunc:
        """Apply ``fn(lam) -> (new_lam, factor)`` termwise, collecting like terms."""
        acc: dict[Partition, Number] = {}
        for lam, c in self._terms.items():
            new, factor = fn(lam)
            acc[new] = acc.get(new, 0) + c * factor
        return SymFunc._raw(clean(acc, self.cap), self.basis, self.cap)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> SymFunc | None:
        if isinstance(other, SymFunc):
            return other if other.basis == self.basis else other.convert(self.basis)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SymFunc._raw(clean({EMPTY: other}), self.basis, None)
        return None

    def __add__(self, other) -> SymFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cap = min_cap(self.cap, other.cap)
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return SymFunc._raw(clean(acc, cap), self.basis, cap)

    __radd__ = __add__

    def __neg__(self) -> SymFunc:
        return SymFunc._raw({k: -v for k, v in self._terms.items()}, self.basis, self.cap)

    def __sub__(self, other) -> SymFunc:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> SymFunc:
        return (-self) + other

    def scale(self, factor) -> SymFunc:
        factor = as_coeff(factor)
        return self.map_coefficients(lambda c: c * factor)

    def __mul__(self, other) -> SymFunc:
        if isinstance(other, SymFunc):
            from .outer_hopf import outer_product

            return outer_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> SymFunc:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> SymFunc:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int) -> SymFunc:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = SymFunc.constant(1, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cap = min_cap(self.cap, other.cap)
        return clean(self._terms, cap) == clean(other._terms, cap)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return format_terms(self.items(), _element_renderer(self.basis))

    def __repr__(self) -> str:
        cap = "" if self.cap is None else f", cap={self.cap}"
        return f"SymFunc({str(self)!r}{cap})"


def format_terms(items: Iterable[tuple[object, Number]], render) -> str:
    """Render ``c*body`` terms joined by `` + `` / `` - ``; constants print bare.

    ``render(key)`` returns the body text, or ``""`` for the unit term.
    """
    pieces: list[str] = []
    for key, c in items:
        body = render(key)
        mag = -c if c < 0 else c
        if not body:
            text = format_coefficient(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{format_coefficient(mag)}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if c < 0 else text)
        else:
            pieces.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(pieces) if pieces else "0"


def _element_renderer(basis: Basis):
    # the unit prints as a bare number in every basis
    return lambda lam: f"{basis.value}{lam}" if lam else ""


def basis_element(lam, basis: Basis | str = Basis.S, cap: int | None = None) -> SymFunc:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return SymFunc({lam: 1}, basis, cap)


def _element_factory(tag: Basis):
    def make(*parts) -> SymFunc:
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return SymFunc._raw({Partition(parts): 1}, tag)

    make.__name__ = tag.value
    make.__doc__ = f"``{tag.value}(2, 1)`` or ``{tag.value}([2, 1])``: the {tag.name} basis element."
    return make


s = _element_factory(Basis.S)
h = _element_factory(Basis.H)
e = _element_factory(Basis.E)
m = _element_factory(Basis.M)
p = _element_factory(Basis.P)


# -- tensors ---------------------------------------------------------------


class TensorExp:
    """A finite exact linear combination of tensor products of basis functions.

    Keys are tuples of partitions, one per slot; ``bases`` gives the basis of
    each slot.  Used for coproduct values (arity 2) and their iterates.
    """

    __slots__ = ("bases", "_terms")

    def __init__(self, terms: Mapping | Iterable[tuple] | None = None, bases=("s", "s")):
        if isinstance(bases, (str, Basis)):
            raise TypeError("bases must be a sequence with one basis per slot")
        self.bases = tuple(Basis.of(b) for b in bases)
        if not self.bases:
            raise ValueError("a tensor needs at least one slot")
        acc: dict[tuple[Partition, ...], Number] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for key, c in items:
            key = tuple(k if isinstance(k, Partition) else Partition(k) for k in key)
            if len(key) != len(self.bases):
                raise ValueError(f"term {key} does not have {len(self.bases)} slots")
            acc[key] = acc.get(key, 0) + as_coeff(c)
        self._terms = clean_tensor(acc)

    @classmethod
    def _raw(cls, terms: dict, bases: tuple[Basis, ...]) -> TensorExp:
        obj = object.__new__(cls)
        obj.bases = bases
        obj._terms = terms
        return obj

    @classmethod
    def tensor(cls, *factors: SymFunc) -> TensorExp:
        """The elementary tensor f1 ⊗ f2 ⊗ ... expanded termwise."""
        terms: dict = {(): 1}
        for f in factors:
            terms = {k + (lam,): c * d for k, c in terms.items() for lam, d in f._terms.items()}
        return cls._raw(clean_tensor(terms), tuple(f.basis for f in factors))

    @property
    def arity(self) -> int:
        return len(self.bases)

    @property
    def terms(self) -> Mapping[tuple[Partition, ...], Number]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[tuple[Partition, ...], Number]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(sort_key(x) for x in kv[0]))

    def coefficient(self, *slots) -> Number:
        key = tuple(x if isinstance(x, Partition) else Partition(x) for x in slots)
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def convert(self, bases) -> TensorExp:
        if isinstance(bases, (str, Basis)):
            bases = (bases,) * self.arity
        bases = tuple(Basis.of(b) for b in bases)
        if bases == self.bases:
            return self
        acc: dict = {}
        for key, c in self._terms.items():
            parts: dict = {(): c}
            for lam, src, dst in zip(key, self.bases, bases):
                expansion = _convert_element(src, dst, lam)
                parts = {k + (mu,): a * b for k, a in parts.items() for mu, b in expansion}
            for k, v in parts.items():
                acc[k] = acc.get(k, 0) + v
        return TensorExp._raw(clean_tensor(acc), bases)

    def permute(self, order: Iterable[int]) -> TensorExp:
        """Reorder slots: slot i of the result is slot ``order[i]`` of self."""
        order = tuple(order)
        if sorted(order) != list(range(self.arity)):
            raise ValueError(f"{order} is not a permutation of the slots")
        return TensorExp._raw(
            {tuple(key[i] for i in order): c for key, c in self._terms.items()},
            tuple(self.bases[i] for i in order),
        )

    def swap(self) -> TensorExp:
        if self.arity != 2:
            raise ValueError("swap needs a 2-tensor")
        return self.permute((1, 0))

    def _coerce(self, other) -> TensorExp | None:
        if not isinstance(other, TensorExp):
            return None
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        return other.convert(self.bases)

    def __add__(self, other) -> TensorExp:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TensorExp._raw(clean_tensor(acc), self.bases)

    def __neg__(self) -> TensorExp:
        return TensorExp._raw({k: -v for k, v in self._terms.items()}, self.bases)

    def __sub__(self, other) -> TensorExp:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> TensorExp:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TensorExp._raw(clean_tensor({k: v * other for k, v in self._terms.items()}), self.bases)
        if isinstance(other, TensorExp):
            from .outer_hopf import outer_product

            other = self._coerce(other)
            acc: dict = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    parts: dict = {(): c1 * c2}
                    for a, b, basis in zip(k1, k2, self.bases):
                        prod = outer_product(SymFunc._raw({a: 1}, basis), SymFunc._raw({b: 1}, basis))
                        parts = {k + (mu,): x * y for k, x in parts.items() for mu, y in prod._terms.items()}
                    for k, v in parts.items():
                        acc[k] = acc.get(k, 0) + v
            return TensorExp._raw(clean_tensor(acc), self.bases)
        return NotImplemented

    def __rmul__(self, other) -> TensorExp:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorExp):
            return NotImplemented
        if other.arity != self.arity:
            return False
        return self._terms == other.convert(self.bases)._terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        def render(key):
            slots = [f"{b.value}{lam}" if lam else "1" for lam, b in zip(key, self.bases)]
            return " ⊗ ".join(slots)

        pieces = []
        for key, c in self.items():
            body = render(key)
            mag = -c if c < 0 else c
            text = body if mag == 1 else f"{mag}*{body}"
            if not pieces:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f"- {text}" if c < 0 else f"+ {text}")
        return " ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"TensorExp({str(self)!r})"


def clean_tensor(acc: Mapping) -> dict:
    out = {}
    for k, c in acc.items():
        if c:
            out[k] = c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
    return out


# -- basis conversion ------------------------------------------------------


@lru_cache(maxsize=None)
def kostka_matrix_inverse(n: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of the Kostka matrix ``K[i][j] = K_{P_i, P_j}`` on partitions_of(n).

    K is upper unitriangular in reverse-lex order (dominance refines it), so
    back substitution stays in the integers.
    """
    idx = partitions_of(n)
    size = len(idx)
    kmat = [[kostka(idx[i], idx[j]) if i <= j else 0 for j in range(size)] for i in range(size)]
    inv = []
    for i in range(size):
        row = [0] * size
        row[i] = 1
        for j in range(i + 1, size):
            row[j] = -sum(row[k] * kmat[k][j] for k in range(i, j))
        inv.append(tuple(row))
    return tuple(inv)


@lru_cache(maxsize=None)
def _jacobi_trudi(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """h-basis expansion of s_lam from det(h_{lam_i - i + j})."""
    n = len(lam)
    acc: dict[Partition, int] = {}
    used = [False] * n

    def expand(i: int, parts: list[int], sign: int) -> None:
        if i == n:
            key = Partition.trusted(sorted(parts, reverse=True))
            acc[key] = acc.get(key, 0) + sign
            return
        for j in range(n):
            if used[j]:
                continue
            k = lam[i] - i + j
            if k < 0:
                continue
            flips = sum(1 for t in range(j + 1, n) if used[t])
            used[j] = True
            expand(i + 1, parts + [k] if k else parts, -sign if flips % 2 else sign)
            used[j] = False

    expand(0, [], 1)
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def _to_schur(basis: Basis, lam: Partition) -> tuple[tuple[Partition, Number], ...]:
    if basis is Basis.S or not lam:
        return ((lam, 1),)
    if basis in (Basis.H, Basis.E):
        factor = one_row if basis is Basis.H else one_column
        head = dict(_to_schur(basis, Partition.trusted(lam[:-1])))
        acc: dict[Partition, int] = {}
        last = factor(lam[-1])
        for mu, c in head.items():
            for nu, d in K.schur_product(mu, last):
                acc[nu] = acc.get(nu, 0) + c * d
        return tuple(clean(acc).items())
    if basis is Basis.P:
        return tuple((mu, c) for mu in partitions_of(sum(lam)) if (c := K.sn_character(mu, lam)))
    idx = partitions_of(sum(lam))
    row = kostka_matrix_inverse(sum(lam))[idx.index(lam)]
    return tuple((idx[j], c) for j, c in enumerate(row) if c)


@lru_cache(maxsize=None)
def _from_schur(basis: Basis, lam: Partition) -> tuple[tuple[Partition, Number], ...]:
    if basis is Basis.S or not lam:
        return ((lam, 1),)
    if basis is Basis.H:
        return _jacobi_trudi(lam)
    if basis is Basis.E:
        return _jacobi_trudi(conjugate(lam))
    if basis is Basis.P:
        out = []
        for rho in partitions_of(sum(lam)):
            c = K.sn_character(lam, rho)
            if c:
                out.append((rho, as_coeff(Fraction(c, z_value(rho)))))
        return tuple(out)
    return tuple((mu, c) for mu in partitions_of(sum(lam)) if (c := kostka(lam, mu)))


@lru_cache(maxsize=None)
def _convert_element(src: Basis, dst: Basis, lam: Partition) -> tuple[tuple[Partition, Number], ...]:
    if src is dst:
        return ((lam, 1),)
    acc: dict[Partition, Number] = {}
    for mu, c in _to_schur(src, lam):
        for nu, d in _from_schur(dst, mu):
            acc[nu] = acc.get(nu, 0) + c * d
    return tuple(clean(acc).items())


def convert(f: SymFunc, target: Basis | str) -> SymFunc:
    """Re-express ``f`` in the ``target`` basis (weights, hence the cap, are preserved)."""
    target = Basis.of(target)
    if f.basis is target:
        return f
    acc: dict[Partition, Number] = {}
    for lam, c in f._terms.items():
        for mu, d in _convert_element(f.basis, target, lam):
            acc[mu] = acc.get(mu, 0) + c * d
    return SymFunc._raw(clean(acc), target, f.cap)


def to_schur(f: SymFunc) -> SymFunc:
    return convert(f, Basis.S)


# -- scalar product, Kostka and transition matrices ------------------------


def schur_scalar(f: SymFunc | TensorExp, g: SymFunc | TensorExp) -> Number:
    """The Schur scalar product; on tensors it is taken slot by slot."""
    if isinstance(f, TensorExp) or isinstance(g, TensorExp):
        if not (isinstance(f, TensorExp) and isinstance(g, TensorExp)):
            raise TypeError("cannot pair a tensor with a symmetric function")
        if f.arity != g.arity:
            raise ValueError("tensor arity mismatch")
        a = f.convert((Basis.S,) * f.arity)._terms
        b = g.convert((Basis.S,) * g.arity)._terms
        small, large = (a, b) if len(a) <= len(b) else (b, a)
        return as_coeff(sum((c * large.get(k, 0) for k, c in small.items()), 0))
    if f.basis is Basis.P and g.basis is Basis.P:
        return as_coeff(sum((c * g._terms.get(k, 0) * z_value(k) for k, c in f._terms.items()), 0))
    a, b = to_schur(f)._terms, to_schur(g)._terms
    return as_coeff(sum((c * b.get(k, 0) for k, c in a.items()), 0))


def schur_scalar_inverse(lam, mu) -> int:
    """Convolutive inverse pairing ``(s_lam | s_mu)^{-1} = (-1)^{|mu|} delta(lam, mu')``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam != conjugate(mu):
        return 0
    return -1 if sum(mu) % 2 else 1


@lru_cache(maxsize=None)
def _kostka(mu: Partition, lam: Partition) -> int:
    if not lam:
        return 1 if not mu else 0
    rest = Partition.trusted(lam[1:])
    return sum(c * _kostka(alpha, rest) for alpha, c in K.schur_skew(mu, one_row(lam[0])))


def kostka(mu, lam) -> int:
    """Kostka number ``K_{mu,lam} = (s_mu | h_lam)``, via iterated skewing by rows."""
    mu, lam = Partition(mu), Partition(lam)
    if sum(mu) != sum(lam):
        return 0
    return _kostka(mu, lam)


@lru_cache(maxsize=None)
def _transition(src: Basis, dst: Basis, n: int) -> tuple[tuple[Number, ...], ...]:
    idx = partitions_of(n)
    rows = []
    for lam in idx:
        expansion = dict(_convert_element(src, dst, lam))
        rows.append(tuple(expansion.get(mu, 0) for mu in idx))
    return tuple(rows)


def transition_matrix(src: Basis | str, dst: Basis | str, n: int) -> list[list[Number]]:
    """Matrix M with ``src_lam = sum_mu M[lam][mu] dst_mu``, indexed by partitions_of(n).

    With this convention M(a, c) = M(a, b) M(b, c) and M(s, m) is the Kostka matrix.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    return [list(row) for row in _transition(Basis.of(src), Basis.of(dst), n)]


def matrix_count_check(kind: str, lam, mu) -> int:
    """Brute-force count of matrices with row sums ``lam`` and column sums ``mu``.

    ``kind`` is ``"zero-one"`` (entries 0/1) or ``"non-negative"`` (entries in N).
    """
    if kind not in ("zero-one", "non-negative"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    lam, mu = Partition(lam), Partition(mu)
    if sum(lam) != sum(mu):
        return 0
    bound = 1 if kind == "zero-one" else None

    def rows(i: int, cols: tuple[int, ...]) -> int:
        if i == len(lam):
            return 1 if not any(cols) else 0
        return sum(rows(i + 1, rest) for rest in _fill_row(lam[i], cols, bound))

    return rows(0, tuple(mu))


def _fill_row(total: int, cols: tuple[int, ...], bound: int | None) -> Iterator[tuple[int, ...]]:
    """Ways to place ``total`` into columns with remaining capacities ``cols``."""
    if not cols:
        if total == 0:
            yield ()
        return
    top = cols[0] if bound is None else min(cols[0], bound)
    for x in range(min(top, total) + 1):
        for rest in _fill_row(total - x, cols[1:], bound):
            yield (cols[0] - x,) + rest
