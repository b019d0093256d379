"""Memoized combinatorial kernels shared by the basis, product and coproduct code.

Everything here works on bare partitions and returns integer tables.
``functools.lru_cache`` gives the shared get-or-compute caches: concurrent
callers may compute an entry twice but always store the same value.
"""

from __future__ import annotations

from functools import lru_cache

from .partition import Partition, contains, partitions_of, partitions_up_to

Terms = tuple[tuple[Partition, int], ...]


def _canon(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of s_nu in s_lam * s_mu."""
    lam, mu, nu = _canon(lam), _canon(mu), _canon(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if not (contains(nu, lam) and contains(nu, mu)):
        return 0
    if not mu or not lam:
        return 1
    # fill the skew shape whose content is the smaller partition
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    return _count_lr_tableaux(nu, lam, mu)


def _count_lr_tableaux(outer: Partition, inner: Partition, content: Partition) -> int:
    """Count semistandard fillings of outer/inner with the given content whose
    reverse reading word (rows top to bottom, right to left) is a lattice word."""
    inner_ext = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner_ext[r] - 1, -1)]
    top = len(content)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (top + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = filling.get((r, c + 1), top)
        lo = filling.get((r - 1, c), 0) + 1
        found = 0
        for v in range(lo, min(hi, r + 1) + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += place(k + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return found

    return place(0)


@lru_cache(maxsize=None)
def schur_product(lam: Partition, mu: Partition) -> Terms:
    """Schur expansion of s_lam * s_mu."""
    lam, mu = _canon(lam), _canon(mu)
    if not lam:
        return ((mu, 1),)
    if not mu:
        return ((lam, 1),)
    if (sum(lam), lam) < (sum(mu), mu):
        return schur_product(mu, lam)
    n = sum(lam) + sum(mu)
    width = lam[0] + mu[0]
    depth = len(lam) + len(mu)
    out = []
    for nu in partitions_of(n):
        if nu[0] > width or len(nu) > depth or not contains(nu, lam) or not contains(nu, mu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def schur_skew(lam: Partition, mu: Partition) -> Terms:
    """Schur expansion of the skew function s_{lam/mu}."""
    lam, mu = _canon(lam), _canon(mu)
    if not contains(lam, mu):
        return ()
    if not mu:
        return ((lam, 1),)
    out = []
    for nu in partitions_of(sum(lam) - sum(mu)):
        if contains(lam, nu):
            c = lr_coefficient(mu, nu, lam)
            if c:
                out.append((nu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def schur_coproduct(lam: Partition) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
    """Outer coproduct terms ``((lam/alpha part, alpha), coeff)`` of s_lam."""
    lam = _canon(lam)
    out = []
    for alpha in partitions_up_to(sum(lam)):
        if not contains(lam, alpha):
            continue
        for beta, c in schur_skew(lam, alpha):
            out.append(((beta, alpha), c))
    return tuple(out)


@lru_cache(maxsize=None)
def iterated_coproduct(lam: Partition, k: int) -> tuple[tuple[tuple[Partition, ...], int], ...]:
    """Terms of the (k-1)-fold iterated outer coproduct of s_lam into k slots."""
    lam = _canon(lam)
    if k == 1:
        return (((lam,), 1),)
    acc: dict[tuple[Partition, ...], int] = {}
    for (beta, alpha), c in schur_coproduct(lam):
        for rest, d in iterated_coproduct(alpha, k - 1):
            key = (beta,) + rest
            acc[key] = acc.get(key, 0) + c * d
    return tuple((key, c) for key, c in acc.items() if c)


@lru_cache(maxsize=None)
def sn_character(lam: Partition, rho: Partition) -> int:
    """Irreducible S_n character chi^lam at cycle type rho (Murnaghan-Nakayama).

    Rim hooks are removed on the beta-set (abacus) of ``lam``: a hook of
    length r is a bead moved from b to b - r onto an empty position, with
    sign (-1)^(beads jumped over).
    """
    lam, rho = _canon(lam), _canon(rho)
    if sum(lam) != sum(rho):
        return 0
    if not rho:
        return 1
    r, rest = rho[0], Partition.trusted(rho[1:])
    n = len(lam)
    beads = [lam[i] + n - 1 - i for i in range(n)]
    occupied = set(beads)
    total = 0
    for b in beads:
        t = b - r
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for x in beads if t < x < b)
        moved = sorted((occupied - {b}) | {t}, reverse=True)
        parts = [x - (n - 1 - i) for i, x in enumerate(moved)]
        while parts and parts[-1] == 0:
            parts.pop()
        value = sn_character(Partition.trusted(parts), rest)
        total += -value if jumped % 2 else value
    return total
