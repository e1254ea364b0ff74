"""Exact Fubini-Study volume of quadric domains in CP^n.

For a Hermitian matrix with positive eigenvalues ``mu`` (p of them), negative
eigenvalues ``-nu`` (q of them) and r zeros, the domain where the form is
positive has volume ``pi^n / n! * S(mu, nu) / D(mu, nu)`` with
``n = p + q + r - 1``. ``D`` is the product of all ``mu_j + nu_k``; ``S`` is a
sum of products of Schur polynomials over box partitions with first part q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import SparsePoly, common_denominator, format_rational, parse_rational
from .partitions import enumerate_B, enumerate_C, star
from .schur import DEFAULT_TABLEAU_CAP, SchurTable, schur_expand

Vector = Sequence[Fraction]


def _fr(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Spectrum:
    """Nonzero eigenvalue data of the defining matrix.

    ``negatives`` holds magnitudes, so every stored value is positive.
    """

    positives: tuple[Fraction, ...] = ()
    negatives: tuple[Fraction, ...] = ()
    zeros: int = 0

    def __post_init__(self):
        object.__setattr__(self, "positives", _fr(self.positives))
        object.__setattr__(self, "negatives", _fr(self.negatives))
        if any(v <= 0 for v in self.positives + self.negatives):
            raise ValueError("spectrum entries must be strictly positive "
                             "(negative eigenvalues are stored as magnitudes)")
        if self.zeros < 0:
            raise ValueError("zero count must be nonnegative")
        if self.p + self.q + self.zeros < 1:
            raise ValueError("spectrum must contain at least one eigenvalue")

    @property
    def p(self) -> int:
        return len(self.positives)

    @property
    def q(self) -> int:
        return len(self.negatives)

    @property
    def r(self) -> int:
        return self.zeros

    @property
    def n(self) -> int:
        return self.p + self.q + self.zeros - 1

    def eigenvalues(self) -> list[Fraction]:
        """The diagonal form ``diag(mu, -nu, 0, ..., 0)``."""
        return [*self.positives, *(-v for v in self.negatives), *[Fraction(0)] * self.zeros]

    def to_json(self) -> dict:
        return {"pos": [format_rational(v) for v in self.positives],
                "neg": [format_rational(v) for v in self.negatives],
                "zeros": self.zeros}

    @classmethod
    def from_json(cls, data: dict) -> Spectrum:
        return cls(tuple(parse_rational(v) for v in data.get("pos", [])),
                   tuple(parse_rational(v) for v in data.get("neg", [])),
                   int(data.get("zeros", 0)))


@dataclass(frozen=True)
class ExactVolume:
    ratio: Fraction
    dimension: int
    spectrum: Spectrum | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.dimension

    @property
    def volume_over_pi_n(self) -> Fraction:
        return self.ratio / math.factorial(self.dimension)

    @property
    def decimal(self) -> float:
        return float(self.volume_over_pi_n) * math.pi ** self.dimension

    def volume_text(self) -> str:
        return format_pi_multiple(self.volume_over_pi_n, self.dimension)

    def to_json(self) -> dict:
        return {"ratio": format_rational(self.ratio),
                "n": self.dimension,
                "volume_over_pi_n": format_rational(self.volume_over_pi_n),
                "decimal": self.decimal}


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_pi_multiple(coef: Fraction, n: int) -> str:
    """Render ``coef * pi^n``, e.g. ``11/40·π²`` or ``π³/6``."""
    coef = Fraction(coef)
    if coef == 0:
        return "0"
    if n == 0:
        return format_rational(coef)
    pi = "π" if n == 1 else "π" + str(n).translate(_SUPERSCRIPT)
    if coef.numerator == 1:
        return pi if coef.denominator == 1 else f"{pi}/{coef.denominator}"
    return f"{format_rational(coef)}·{pi}"


def denom_D(x: Vector, y: Vector) -> Fraction:
    """``prod_k prod_j (x_j + y_k)``; the empty product is 1."""
    out = Fraction(1)
    for yk in y:
        for xj in x:
            out *= Fraction(xj) + Fraction(yk)
    return out


def _schur_pair_sum(x: Vector, y: Vector, partitions) -> Fraction:
    """``sum s_lam(x) s_{lam*}(y)`` over ``partitions`` of the p x q box.

    Every term has total degree pq, so evaluating at ``(L x, L y)`` with a
    shared denominator ``L`` and dividing by ``L^{pq}`` at the end is exact.
    """
    x, y = _fr(x), _fr(y)
    p, q = len(x), len(y)
    L = common_denominator(x + y)
    sx = SchurTable(x, q + p, scale=L)
    sy = SchurTable(y, p + q, scale=L)
    total = 0
    for lam in partitions:
        total += sx.integer(lam) * sy.integer(star(lam, p, q))
    return Fraction(total, L ** (p * q))


def numer_S(x: Vector, y: Vector) -> Fraction:
    """Numerator ``S_(p,q)(x, y)`` as a partition sum over first-part-q partitions.

    Valid at repeated coordinates. ``S_(0,0) = 0``, ``S_(p,0) = 1`` for p >= 1
    and ``S_(0,q) = 0`` for q >= 1.
    """
    return _schur_pair_sum(x, y, enumerate_C(len(x), len(y)))


def dual_cauchy_sum(x: Vector, y: Vector) -> Fraction:
    """Same pair sum over the whole box; equals :func:`denom_D`."""
    return _schur_pair_sum(x, y, enumerate_B(len(x), len(y)))


def entry_drop(x: Sequence, ell: int) -> tuple:
    """Remove the ``ell``-th entry (1-based)."""
    if not 1 <= ell <= len(x):
        raise IndexError(f"index {ell} out of range for length {len(x)}")
    return tuple(x[:ell - 1]) + tuple(x[ell:])


def numer_S_partialfrac(x: Vector, y: Vector) -> Fraction:
    """``S_(p,q)`` without Schur polynomials, as a sum over the x coordinates.

    ``sum_l x_l^{p+q-1} / prod_{k != l}(x_l - x_k) * D_(p-1,q)(x[l], y)``.
    Needs p >= 1 and pairwise distinct x.
    """
    x, y = _fr(x), _fr(y)
    p, q = len(x), len(y)
    if p < 1:
        raise ValueError("partial-fraction form needs at least one x coordinate")
    if len(set(x)) != p:
        raise ValueError("partial-fraction form needs distinct x; use numer_S")
    total = Fraction(0)
    for ell in range(1, p + 1):
        xl = x[ell - 1]
        den = Fraction(1)
        for k, xk in enumerate(x, start=1):
            if k != ell:
                den *= xl - xk
        total += xl ** (p + q - 1) / den * denom_D(entry_drop(x, ell), y)
    return total


def factor_T(x: Vector, y: Vector) -> Fraction:
    """Recursion factor ``y_q^-(pq-2p-q+1) prod(y_q+x_j)^(q-1) prod_{k<q}(y_q-y_k)^(p-1)``.

    The exponent of ``y_q`` may be negative, which is fine since ``y_q > 0``.
    """
    x, y = _fr(x), _fr(y)
    p, q = len(x), len(y)
    if q < 1:
        raise ValueError("factor_T needs q >= 1")
    if any(v <= 0 for v in y):
        raise ValueError("factor_T needs positive y")
    yq = y[-1]
    out = yq ** -(p * q - 2 * p - q + 1)
    for xj in x:
        out *= (yq + xj) ** (q - 1)
    for yk in y[:-1]:
        out *= (yq - yk) ** (p - 1)
    return out


def map_alpha(x: Vector, y: Vector) -> tuple[Fraction, ...]:
    x, y = _fr(x), _fr(y)
    if not y:
        raise ValueError("map_alpha needs q >= 1")
    yq = y[-1]
    return tuple(xj / (yq + xj) for xj in x)


def _check_increasing(y: Sequence[Fraction]) -> None:
    if any(a >= b for a, b in zip(y, y[1:])):
        raise ValueError(f"y must be strictly increasing, got {[format_rational(v) for v in y]}")


def map_beta(y: Vector) -> tuple[Fraction, ...]:
    y = _fr(y)
    if not y:
        raise ValueError("map_beta needs q >= 1")
    _check_increasing(y)
    yq = y[-1]
    return tuple(yk / (yq - yk) for yk in y[:-1])


def recursion_rhs(x: Vector, y: Vector) -> Fraction:
    """Right side of the q -> q-1 recursion; equals ``numer_S(x, y)``.

    ``y`` is sorted first (S is symmetric in y); ties are rejected because the
    recursion is only stated for distinct y.
    """
    x = _fr(x)
    y = tuple(sorted(_fr(y)))
    if not y:
        raise ValueError("recursion needs q >= 1")
    if any(v <= 0 for v in x + y):
        raise ValueError("recursion needs positive inputs")
    _check_increasing(y)
    yq = y[-1]
    lead = Fraction(1)
    for xj in x:
        lead *= xj + yq
    first = lead * numer_S(x, y[:-1])
    second = factor_T(x, y) * numer_S(map_alpha(x, y), map_beta(y))
    return first - second


def duality_gap(x: Vector, y: Vector) -> Fraction:
    """``S_(p,q)(x,y) + S_(q,p)(y,x) - D_(p,q)(x,y)``; always zero."""
    if not x and not y:
        raise ValueError("duality is not asserted for (p, q) = (0, 0)")
    return numer_S(x, y) + numer_S(y, x) - denom_D(x, y)


def volume(spec: Spectrum) -> ExactVolume:
    """Exact volume ratio and dimension for a spectrum.

    Zero eigenvalues only raise the dimension. The zero matrix has an empty
    domain and gets ratio 0.
    """
    if spec.p == 0:
        ratio = Fraction(0)
    else:
        ratio = numer_S(spec.positives, spec.negatives) / denom_D(spec.positives, spec.negatives)
    return ExactVolume(ratio, spec.n, spec)


def ratio_float(positives: Sequence[float], negatives: Sequence[float]) -> float:
    """Volume ratio for floating eigenvalues, returned as a float.

    Each double is converted to its exact binary value, so no error is added
    beyond the input rounding; the result is deliberately not reported as a
    rational.
    """
    pos = tuple(Fraction(float(v)) for v in positives)
    neg = tuple(Fraction(float(v)) for v in negatives)
    if not pos:
        return 0.0
    return float(numer_S(pos, neg) / denom_D(pos, neg))


def variable_names(p: int, q: int) -> tuple[list[str], list[str]]:
    return [f"x{j + 1}" for j in range(p)], [f"y{k + 1}" for k in range(q)]


def expand_D(p: int, q: int) -> SparsePoly:
    xs, ys = variable_names(p, q)
    names = xs + ys
    out = SparsePoly.constant(names, 1)
    for yk in ys:
        for xj in xs:
            out = out * (SparsePoly.gen(names, xj) + SparsePoly.gen(names, yk))
    return out


def expand_S(p: int, q: int, cap: int = DEFAULT_TABLEAU_CAP) -> SparsePoly:
    """Monomial expansion of ``S_(p,q)`` in ``x1..xp, y1..yq`` via tableaux."""
    xs, ys = variable_names(p, q)
    names = xs + ys
    out = SparsePoly.zero(names)
    for lam in enumerate_C(p, q):
        sx = schur_expand(lam, p, xs, cap).embed(names)
        sy = schur_expand(star(lam, p, q), q, ys, cap).embed(names)
        out = out + sx * sy
    return out


def coefficient_violations(small: SparsePoly, big: SparsePoly) -> list[tuple[tuple[int, ...], Fraction, Fraction]]:
    """Monomials where ``small`` has a larger coefficient than ``big``."""
    bad = []
    for exps, c in small.terms.items():
        if c > big.coefficient(exps):
            bad.append((exps, c, big.coefficient(exps)))
    for exps, c in big.terms.items():
        if c < 0 and exps not in small.terms:
            bad.append((exps, Fraction(0), c))
    return bad
