"""Schur polynomials: exact evaluation and monomial expansion.

Three independent routes are provided:

* :func:`schur_jacobi_trudi` -- determinant of complete homogeneous values.
  Works at repeated coordinates; this is the production path.
* :func:`schur_bialternant` -- ratio of alternants; needs distinct coordinates.
* :func:`schur_expand` -- sum over semistandard Young tableaux.

Both determinant routes scale a rational point to an integer one by the common
denominator ``L`` and use ``s_lam(L x) = L^|lam| s_lam(x)``, so the
elimination runs entirely on Python integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import SparsePoly, common_denominator
from .partitions import Partition

DEFAULT_TABLEAU_CAP = 10**6


class SchurCapExceeded(RuntimeError):
    pass


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return q
    return a / b


def det_bareiss(matrix: Sequence[Sequence]) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = _exact_div(rowi[j] * akk - aik * rowk[j], prev)
        prev = akk
    return sign * a[n - 1][n - 1]


def _as_fractions(point: Iterable) -> list[Fraction]:
    return [Fraction(v) for v in point]


def _scale(point: Sequence[Fraction]) -> tuple[list[int], int]:
    L = common_denominator(point)
    return [int(v * L) for v in point], L


def vandermonde(point: Sequence) -> Fraction:
    """``prod_{i<j} (x_i - x_j)``; 1 for fewer than two coordinates."""
    pt = _as_fractions(point)
    out = Fraction(1)
    for i in range(len(pt)):
        for j in range(i + 1, len(pt)):
            out *= pt[i] - pt[j]
    return out


def complete_homogeneous(point: Sequence, kmax: int) -> list:
    """``[h_0, ..., h_kmax]`` at ``point`` by the one-variable-at-a-time recurrence.

    Exact for ints and Fractions; O(n * kmax) operations.
    """
    h = [1] + [0] * kmax
    for x in point:
        for k in range(1, kmax + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def _check_arity(lam: Partition, n: int) -> None:
    if len(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} parts")


def jacobi_trudi_from_h(lam: Partition, h: Sequence) -> int | Fraction:
    ell = len(lam)
    kmax = len(h) - 1

    def hk(k: int):
        if k < 0:
            return 0
        if k > kmax:
            raise IndexError(f"h_{k} not tabulated")
        return h[k]

    return det_bareiss([[hk(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


def schur_jacobi_trudi(lam: Iterable[int], point: Sequence) -> Fraction:
    """``s_lam(point)`` as ``det(h_{lam_i - i + j})``.

    Defined at repeated coordinates; a partition with more parts than
    coordinates gives 0.
    """
    lam = Partition(lam)
    pt = _as_fractions(point)
    if len(lam) > len(pt):
        return Fraction(0)
    if not lam:
        return Fraction(1)
    ints, L = _scale(pt)
    h = complete_homogeneous(ints, lam[0] + len(lam))
    return Fraction(jacobi_trudi_from_h(lam, h), L ** lam.size)


def schur_bialternant(lam: Iterable[int], point: Sequence) -> Fraction:
    """``a_{lam+delta}(x) / a_delta(x)``; coordinates must be pairwise distinct."""
    lam = Partition(lam)
    pt = _as_fractions(point)
    n = len(pt)
    _check_arity(lam, n)
    if len(set(pt)) != n:
        raise ValueError(
            "bialternant is 0/0 at repeated coordinates; use schur_jacobi_trudi")
    if not lam:
        return Fraction(1)
    ints, L = _scale(pt)
    parts = lam.padded(n)
    num = det_bareiss([[x ** (parts[j] + n - 1 - j) for x in ints] for j in range(n)])
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            den *= ints[i] - ints[j]
    value = Fraction(num, den)
    # a_{lam+delta}(Lx)/a_delta(Lx) = L^|lam| s_lam(x)
    return value / L ** lam.size


class SchurTable:
    """Reusable Jacobi-Trudi evaluator for many partitions at one point.

    ``integer(lam)`` returns ``s_lam`` at the integer-scaled point
    ``scale * point``; ``value(lam)`` rescales back to the rational value.
    """

    def __init__(self, point: Sequence, kmax: int, scale: int | None = None):
        self.point = _as_fractions(point)
        self.scale = common_denominator(self.point) if scale is None else scale
        ints = [v * self.scale for v in self.point]
        if any(v.denominator != 1 for v in ints):
            raise ValueError("scale does not clear the denominators of point")
        self.h = complete_homogeneous([int(v) for v in ints], kmax)
        self._cache: dict[Partition, int] = {}

    def integer(self, lam: Partition) -> int:
        try:
            return self._cache[lam]
        except KeyError:
            pass
        if len(lam) > len(self.point):
            val = 0
        elif not lam:
            val = 1
        else:
            val = jacobi_trudi_from_h(lam, self.h)
        self._cache[lam] = val
        return val

    def value(self, lam: Iterable[int]) -> Fraction:
        lam = Partition(lam)
        return Fraction(self.integer(lam), self.scale ** lam.size)


def semistandard_tableaux(lam: Iterable[int], n: int, cap: int = DEFAULT_TABLEAU_CAP):
    """Yield SSYT of shape ``lam`` with entries in ``1..n`` as tuples of rows.

    Raises :class:`SchurCapExceeded` once more than ``cap`` tableaux are produced.
    """
    lam = Partition(lam)
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid = [[0] * row for row in lam]
    count = 0

    def fill(idx: int):
        nonlocal count
        if idx == len(cells):
            count += 1
            if count > cap:
                raise SchurCapExceeded(
                    f"more than {cap} tableaux of shape {tuple(lam)} in {n} letters")
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for r in range(i + 1, len(lam)) if lam[r] > j)
        for v in range(lo, n - below + 1):
            grid[i][j] = v
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


def schur_expand(lam: Iterable[int], n: int, variables: Sequence[str] | None = None,
                 cap: int = DEFAULT_TABLEAU_CAP) -> SparsePoly:
    """Monomial expansion of ``s_lam(x_1..x_n)`` by tableau weights."""
    lam = Partition(lam)
    _check_arity(lam, n)
    if variables is None:
        variables = [f"x{i + 1}" for i in range(n)]
    if len(variables) != n:
        raise ValueError("need one variable name per coordinate")
    terms: dict[tuple[int, ...], int] = {}
    for tab in semistandard_tableaux(lam, n, cap):
        exps = [0] * n
        for row in tab:
            for v in row:
                exps[v - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return SparsePoly(variables, terms)
