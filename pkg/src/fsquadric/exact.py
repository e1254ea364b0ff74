"""Exact rational scalars and sparse multivariate polynomials.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Rational = Fraction

_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rational_arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply ``op`` (one of ``+ - * /``) to two rationals.

    Raises :class:`ZeroDivisionError` on division by zero.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    if fn is operator.truediv and b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return fn(Fraction(a), Fraction(b))


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; reject floats and anything else."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Comma separated rationals; the empty string is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(part) for part in text.split(","))


def common_denominator(values: Iterable[Fraction]) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


class Monomial(NamedTuple):
    exponents: tuple[int, ...]
    coefficient: Fraction


class SparsePoly:
    """Polynomial with rational coefficients stored as ``{exponents: coeff}``.

    Instances are immutable; arithmetic returns new polynomials. Zero
    coefficients are never stored.
    """

    __slots__ = ("_variables", "_terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        self._variables = tuple(variables)
        nvar = len(self._variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvar:
                raise ValueError(
                    f"exponent tuple {exps} has length {len(exps)}, expected {nvar}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> SparsePoly:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: Fraction | int) -> SparsePoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gen(cls, variables: Sequence[str], name: str) -> SparsePoly:
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: 1})

    @classmethod
    def _raw(cls, variables: tuple[str, ...],
             terms: dict[tuple[int, ...], Fraction]) -> SparsePoly:
        obj = cls.__new__(cls)
        obj._variables = variables
        obj._terms = terms
        return obj

    # accessors

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def monomials(self) -> Iterator[Monomial]:
        for exps in sorted(self._terms, reverse=True):
            yield Monomial(exps, self._terms[exps])

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    # arithmetic

    def _check(self, other: SparsePoly) -> None:
        if self._variables != other._variables:
            raise ValueError(
                f"variable lists differ: {self._variables} vs {other._variables}")

    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self._variables, other)
        return NotImplemented

    def __add__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exps, c in other._terms.items():
            v = out.get(exps, 0) + c
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return SparsePoly._raw(self._variables, out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self._variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self._variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self._variables, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        if len(point) != len(self._variables):
            raise ValueError("point has wrong arity")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(point, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def embed(self, variables: Sequence[str]) -> SparsePoly:
        """Re-express in a superset of variables (new ones get exponent 0)."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self._variables]
        out = {}
        for exps, c in self._terms.items():
            new = [0] * len(variables)
            for i, e in zip(idx, exps):
                new[i] = e
            out[tuple(new)] = c
        return SparsePoly._raw(variables, out)

    def __repr__(self) -> str:
        return f"SparsePoly({self._variables!r}, {self.format()!r})"

    def format(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.monomials():
            factors = []
            for name, e in zip(self._variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(format_rational(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_rational(c)}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def poly_arith(p: SparsePoly, q: SparsePoly, op: str) -> SparsePoly:
    """``p + q`` or ``p * q``; variable lists must match exactly."""
    p._check(q)
    if op == "+":
        return p + q
    if op in ("*", "×"):
        return p * q
    raise ValueError(f"unknown operator {op!r}")
