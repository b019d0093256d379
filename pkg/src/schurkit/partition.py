"""Integer partitions: canonical form, conjugation, Frobenius and multiplicity forms."""

from __future__ import annotations

import re
from collections import Counter
from functools import cache, cached_property
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A partition stored as its non-increasing tuple of positive parts.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    and ``Partition((2, 1))`` are the same key.  Since it is a tuple
    subclass, plain tuples with the same parts compare and hash equal.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"partition parts must be non-increasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def trusted(cls, parts: Iterable[int]) -> Partition:
        """Wrap parts already known to be canonical (no validation)."""
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``[5,4,2]``, ``(5,4,2)``, ``5,4,2``, ``[]`` or ``0``."""
        body = text.strip()
        if body in ("", "0", "[]", "()", "[0]", "(0)"):
            return cls(())
        if body[0] in "[(":
            closing = "]" if body[0] == "[" else ")"
            if body[-1] != closing:
                raise ValueError(f"unbalanced brackets in partition {text!r}")
            body = body[1:-1]
        if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*,?\s*", body):
            raise ValueError(f"not a partition: {text!r}")
        return cls(int(x) for x in body.split(",") if x.strip())

    @cached_property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = Partition(())


class FrobeniusForm(NamedTuple):
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.arms)) + "|" + ",".join(map(str, self.legs)) + ")"


@cache
def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram: ``result[k] = #{i : lam[i] > k}``."""
    if not lam:
        return EMPTY
    return Partition.trusted(sum(1 for x in lam if x > k) for k in range(lam[0]))


def to_frobenius(lam: Partition) -> FrobeniusForm:
    lam = Partition(lam)
    conj = conjugate(lam)
    rank = sum(1 for i, x in enumerate(lam) if x > i)
    arms = tuple(lam[i] - i - 1 for i in range(rank))
    legs = tuple(conj[i] - i - 1 for i in range(rank))
    return FrobeniusForm(arms, legs)


def from_frobenius(arms: Iterable[int], legs: Iterable[int] | None = None) -> Partition:
    """Inverse of :func:`to_frobenius`; also accepts a single FrobeniusForm."""
    if legs is None:
        arms, legs = arms  # type: ignore[misc]
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have the same length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"Frobenius coordinates must be strictly decreasing and >= 0: {seq}")
    r = len(arms)
    rows = [arms[i] + i + 1 for i in range(r)]
    # rows below the diagonal square are read off the legs
    cols = [legs[i] + i + 1 for i in range(r)]
    depth = cols[0] if cols else 0
    for j in range(r, depth):
        rows.append(sum(1 for c in cols if c > j))
    return Partition(rows)


def multiplicities(lam: Partition) -> dict[int, int]:
    """Multiplicity form: part size ``i`` -> number of parts equal to ``i``."""
    return dict(sorted(Counter(lam).items()))


def from_multiplicities(counts: dict[int, int]) -> Partition:
    parts: list[int] = []
    for i in sorted(counts, reverse=True):
        if counts[i] < 0:
            raise ValueError("multiplicities must be non-negative")
        parts.extend([i] * counts[i])
    return Partition(parts)


@cache
def z_value(lam: Partition) -> int:
    """Centralizer order ``prod_i i**r_i * r_i!``."""
    z = 1
    for i, r in Counter(lam).items():
        z *= i**r * factorial(r)
    return z


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return ()
    return tuple(Partition.trusted(p) for p in _revlex(n, n))


def _revlex(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _revlex(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> Iterator[Partition]:
    """Partitions of weight ``0..n``, weights ascending, reverse-lex within a weight."""
    for k in range(n + 1):
        yield from partitions_of(k)


def sort_key(lam: Partition) -> tuple:
    """Canonical output order: weight ascending, reverse-lex within a weight."""
    return (sum(lam), tuple(-x for x in lam))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def one_row(n: int) -> Partition:
    return Partition.trusted((n,) if n else ())


def one_column(n: int) -> Partition:
    return Partition.trusted((1,) * n)
