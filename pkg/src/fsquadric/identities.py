"""Exact identity suite for S and D at random positive rational points.

Each family is checked for every (p, q) in a box and a number of random
points; any mismatch is recorded with its exact inputs so it can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exact import format_rational
from .quadric import (
    denom_D,
    dual_cauchy_sum,
    factor_T,
    map_alpha,
    map_beta,
    numer_S,
    numer_S_partialfrac,
    recursion_rhs,
)

FAMILIES = (
    "base",
    "duality",
    "recursion",
    "dual_cauchy",
    "d_first_identity",
    "d_second_identity",
    "algorithm_equivalence",
    "homogeneity",
)

SFunc = Callable[[Sequence[Fraction], Sequence[Fraction]], Fraction]


def random_rational(rng: random.Random, max_num: int = 60, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_point(rng: random.Random, k: int, distinct: bool = True) -> tuple[Fraction, ...]:
    if not distinct:
        pool = [random_rational(rng) for _ in range(max(1, k // 2))]
        return tuple(rng.choice(pool) for _ in range(k))
    out: list[Fraction] = []
    while len(out) < k:
        v = random_rational(rng)
        if v not in out:
            out.append(v)
    return tuple(out)


def faulty_S(x, y) -> Fraction:
    """``numer_S`` with the coefficient of ``x_1^{pq}`` raised by one (negative control)."""
    s = numer_S(x, y)
    if x and y:
        s += Fraction(x[0]) ** (len(x) * len(y))
    return s


@dataclass
class FamilyResult:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SuiteResult:
    families: dict[str, FamilyResult]
    rows: list[dict]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families.values())


def _fmt(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(t) for t in v]


def _check(res: FamilyResult, p: int, q: int, x, y, lhs: Fraction, rhs: Fraction,
           max_failures: int) -> bool:
    res.checked += 1
    if lhs == rhs:
        return True
    if len(res.failures) < max_failures:
        res.failures.append({"p": p, "q": q, "x": _fmt(x), "y": _fmt(y),
                             "lhs": format_rational(lhs), "rhs": format_rational(rhs)})
    return False


def run_suite(pmax: int, qmax: int, trials: int, seed: int = 0,
              s_func: SFunc = numer_S, families: Sequence[str] = FAMILIES,
              max_failures: int = 5) -> SuiteResult:
    """Run the identity families over ``0 <= p <= pmax``, ``0 <= q <= qmax``."""
    unknown = set(families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown identity families: {sorted(unknown)}")
    if pmax < 0 or qmax < 0 or trials < 0:
        raise ValueError("bounds and trial count must be nonnegative")
    rng = random.Random(seed)
    results = {name: FamilyResult(name) for name in families}
    rows = []
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            if p == q == 0:
                if "base" in results:
                    _check(results["base"], 0, 0, (), (), s_func((), ()), Fraction(0),
                           max_failures)
                continue
            row = {"p": p, "q": q, "checked": 0, "failed": 0}
            for trial in range(trials):
                # every fifth point repeats coordinates for the families that allow it
                x = random_point(rng, p)
                y = tuple(sorted(random_point(rng, q)))
                xr = random_point(rng, p, distinct=trial % 5 != 4)
                yr = random_point(rng, q, distinct=trial % 5 != 4)
                for name in families:
                    ok = _run_one(name, results[name], p, q, x, y, xr, yr, rng, s_func,
                                  max_failures)
                    if ok is None:
                        continue
                    row["checked"] += 1
                    row["failed"] += not ok
            rows.append(row)
    return SuiteResult(results, rows)


def _run_one(name, res, p, q, x, y, xr, yr, rng, s_func, max_failures):
    if name == "base":
        if (p, q) != (1, 0):
            return None
        return _check(res, p, q, x, (), s_func(x, ()), Fraction(1), max_failures)
    if name == "duality":
        return _check(res, p, q, xr, yr, s_func(xr, yr) + s_func(yr, xr), denom_D(xr, yr),
                      max_failures)
    if name == "dual_cauchy":
        return _check(res, p, q, xr, yr, dual_cauchy_sum(xr, yr), denom_D(xr, yr), max_failures)
    if name == "homogeneity":
        t = random_rational(rng)
        tx, ty = [t * v for v in xr], [t * v for v in yr]
        ok = _check(res, p, q, xr, yr, s_func(tx, ty), t ** (p * q) * s_func(xr, yr),
                    max_failures)
        return _check(res, p, q, xr, yr, denom_D(tx, ty), t ** (p * q) * denom_D(xr, yr),
                      max_failures) and ok
    if q < 1 and name in ("recursion", "d_first_identity", "d_second_identity"):
        return None
    if name == "recursion":
        yq = y[-1]
        lead = Fraction(1)
        for xj in x:
            lead *= xj + yq
        rhs = lead * s_func(x, y[:-1]) - factor_T(x, y) * s_func(map_alpha(x, y), map_beta(y))
        if s_func is numer_S:
            assert rhs == recursion_rhs(x, y)
        return _check(res, p, q, x, y, s_func(x, y), rhs, max_failures)
    if name == "d_first_identity":
        yq = y[-1]
        lead = Fraction(1)
        for xj in x:
            lead *= xj + yq
        return _check(res, p, q, x, y, denom_D(x, y), denom_D(x, y[:-1]) * lead, max_failures)
    if name == "d_second_identity":
        yq = y[-1]
        scale = Fraction(1)
        for xj in x:
            scale *= xj + yq
        for yk in y[:-1]:
            scale *= yq - yk
        scale /= yq ** (p + q - 1)
        rhs = scale * factor_T(x, y) * denom_D(map_alpha(x, y), map_beta(y))
        return _check(res, p, q, x, y, denom_D(x, y), rhs, max_failures)
    if name == "algorithm_equivalence":
        if p < 1:
            return None
        return _check(res, p, q, x, y, s_func(x, y), numer_S_partialfrac(x, y), max_failures)
    raise AssertionError(name)
