"""Independent brute-force oracles used by the tests and the acceptance suite.

None of these share code with the kernels they check: Kostka numbers come
from filling tableaux cell by cell, products from monomial expansions,
series from their generating products in finitely many variables.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as cartesian

from . import _kernels as K
from .partition import Partition, partitions_of
from .symfunc import Basis, Number, SymFunc, clean

Monomial = tuple[int, ...]
Poly = dict[Monomial, Number]


# -- tableaux ----------------------------------------------------------------


@lru_cache(maxsize=None)
def ssyt_count(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content`` (any composition).

    Cells are filled row by row, left to right; rows weakly increase and
    columns strictly increase.
    """
    shape = Partition(shape)
    if sum(shape) != sum(content):
        return 0
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    grid: dict[tuple[int, int], int] = {}
    left = list(content)

    def fill(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        low = max(grid.get((r, c - 1), 0), grid.get((r - 1, c), -1) + 1)
        total = 0
        for v in range(max(low, 0), len(left)):
            if left[v]:
                left[v] -= 1
                grid[(r, c)] = v
                total += fill(i + 1)
                left[v] += 1
        grid.pop((r, c), None)
        return total

    return fill(0)


def kostka_ssyt(shape, content) -> int:
    """K_{shape, content} by tableau enumeration."""
    return ssyt_count(Partition(shape), tuple(content))


def _sorted_content(alpha) -> Partition:
    return Partition(sorted((a for a in alpha if a), reverse=True))


# -- Littlewood-Richardson by monomial expansion -----------------------------


def _compositions_below(nu: Partition):
    """All pairs (alpha, nu - alpha) with 0 <= alpha_i <= nu_i."""
    for alpha in cartesian(*(range(x + 1) for x in nu)):
        yield alpha, tuple(x - a for x, a in zip(nu, alpha))


def _schur_from_monomials(coeffs: dict[Partition, Number], n: int) -> dict[Partition, Number]:
    """Solve ``sum_nu a_nu s_nu = sum_kappa coeffs[kappa] m_kappa`` by unitriangularity.

    Partitions are processed from the top of reverse-lex order, which
    refines dominance, so each leading coefficient is read off directly.
    """
    rest = dict(coeffs)
    out: dict[Partition, Number] = {}
    for nu in partitions_of(n):
        a = rest.get(nu, 0)
        if not a:
            continue
        out[nu] = a
        for kappa in partitions_of(n):
            k = kostka_ssyt(nu, kappa)
            if k:
                rest[kappa] = rest.get(kappa, 0) - a * k
    if any(rest.values()):
        raise ArithmeticError("monomial expansion is not a Schur combination")
    return out


@lru_cache(maxsize=None)
def lr_product_oracle(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """s_lam · s_mu expanded through monomials in |lam|+|mu| variables.

    The coefficient of x^nu in s_lam(x) s_mu(x) is
    ``sum_{alpha + beta = nu} K_{lam,alpha} K_{mu,beta}``; only dominant
    exponents nu are needed since the product is symmetric.
    """
    lam, mu = Partition(lam), Partition(mu)
    n = sum(lam) + sum(mu)
    coeffs: dict[Partition, int] = {}
    for nu in partitions_of(n):
        total = 0
        for alpha, beta in _compositions_below(nu):
            if sum(alpha) != sum(lam):
                continue
            a = kostka_ssyt(lam, _sorted_content(alpha))
            if a:
                total += a * kostka_ssyt(mu, _sorted_content(beta))
        if total:
            coeffs[nu] = total
    return tuple(sorted(_schur_from_monomials(coeffs, n).items()))


# -- partition counts ----------------------------------------------------------


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


# -- matrix counts -------------------------------------------------------------


def count_matrices(rows, cols, zero_one: bool) -> int:
    """Number of matrices with the given row and column sums, entries in {0,1} or N.

    Plain recursion over entries, independent of ``symfunc.matrix_count_check``.
    """
    rows, cols = list(rows), list(cols)
    if sum(rows) != sum(cols):
        return 0
    r, c = len(rows), len(cols)

    def go(i: int, j: int, col_left: tuple[int, ...], row_left: int) -> int:
        if i == r:
            return 1 if not any(col_left) else 0
        if j == c:
            return go(i + 1, 0, col_left, rows[i + 1] if i + 1 < r else 0) if row_left == 0 else 0
        top = min(row_left, col_left[j], 1 if zero_one else row_left)
        total = 0
        for v in range(top + 1):
            nxt = col_left[:j] + (col_left[j] - v,) + col_left[j + 1:]
            total += go(i, j + 1, nxt, row_left - v)
        return total

    if r == 0:
        return 1 if not any(cols) else 0
    return go(0, 0, tuple(cols), rows[0])


# -- polynomial series ----------------------------------------------------------


def _poly_mul(a: Poly, b: Poly, cap: int) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        da = sum(ma)
        for mb, cb in b.items():
            if da + sum(mb) > cap:
                continue
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _geometric(mono: Monomial, sign: int, power: int, cap: int) -> Poly:
    """(1 - sign*x^mono)^power truncated at total degree cap; power is +1 or -1."""
    d = sum(mono)
    if power == 1:
        return {tuple(0 for _ in mono): 1, mono: -sign}
    out: Poly = {}
    k = 0
    while k * d <= cap:
        out[tuple(k * x for x in mono)] = sign ** k
        k += 1
    return out


def _unit_vector(n: int, *idx: int) -> Monomial:
    v = [0] * n
    for i in idx:
        v[i] += 1
    return tuple(v)


_GENERATORS = {
    # name: (factor kind, sign s in (1 - s*x), power)
    "L": ("single", 1, 1),
    "M": ("single", 1, -1),
    "P": ("single", -1, -1),
    "Q": ("single", -1, 1),
    "A": ("pairs<", 1, 1),
    "B": ("pairs<", 1, -1),
    "C": ("pairs<=", 1, 1),
    "D": ("pairs<=", 1, -1),
    "V": ("squares", 1, 1),
    "W": ("squares", 1, -1),
}


@lru_cache(maxsize=None)
def series_by_generating_product(name: str, cap: int) -> SymFunc:
    """Expand the generating product of a series in ``cap`` variables and read off Schur contents."""
    kind, sign, power = _GENERATORS[name]
    n = max(cap, 1)
    if kind == "single":
        monos = [_unit_vector(n, i) for i in range(n)]
    elif kind == "squares":
        monos = [_unit_vector(n, i, i) for i in range(n)]
    elif kind == "pairs<":
        monos = [_unit_vector(n, i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        monos = [_unit_vector(n, i, j) for i in range(n) for j in range(i, n)]
    poly: Poly = {tuple([0] * n): 1}
    for mono in monos:
        poly = _poly_mul(poly, _geometric(mono, sign, power, cap), cap)
    terms: dict[Partition, Number] = {}
    for w in range(cap + 1):
        coeffs = {}
        for kappa in partitions_of(w):
            mono = tuple(kappa) + (0,) * (n - len(kappa))
            if mono in poly:
                coeffs[kappa] = poly[mono]
        terms.update(_schur_from_monomials(coeffs, w))
    return SymFunc._raw(clean(terms), Basis.S, cap)


# -- antipode ------------------------------------------------------------------


@lru_cache(maxsize=None)
def antipode_recursive(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """S(s_lam) from the recursion sum S(x_(1)) x_(2) = eps(x) of a connected graded bialgebra."""
    lam = Partition(lam)
    if not lam:
        return ((lam, 1),)
    acc: Counter = Counter()
    for (beta, alpha), c in K.schur_coproduct(lam):
        if not alpha:
            continue  # the unknown term S(s_lam)·1
        for gamma, d in antipode_recursive(beta):
            for nu, e in K.schur_product(gamma, alpha):
                acc[nu] -= c * d * e
    return tuple(sorted((k, v) for k, v in acc.items() if v))
