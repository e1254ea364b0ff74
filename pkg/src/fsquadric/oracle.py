"""Numerical cross-checks for the exact volume formula.

* :func:`mc_fraction` samples CP^n uniformly and counts points where the
  Hermitian form is positive.
* :func:`exp_fraction_closed` evaluates the partial-fraction form of S/D in
  floating point.
* :func:`integrate_E` integrates the Fubini-Study density over the affine
  region cut out by the quadric, by iterated adaptive quadrature.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from scipy import integrate

from .exact import format_rational
from .quadric import Spectrum, volume
from .spectral import FloatSpectrum

CHUNK = 1 << 16
SEED_MASK = (1 << 64) - 1
MAX_QUAD_DIM = 4
AGREE_SIGMAS = 4.0


@dataclass(frozen=True)
class MCEstimate:
    fraction: float
    stderr: float
    samples: int
    seed: int
    hits: int

    def to_json(self) -> dict:
        return asdict(self)


def _spectrum_floats(spec) -> tuple[list[float], list[float], int]:
    if isinstance(spec, (Spectrum, FloatSpectrum)):
        return ([float(v) for v in spec.positives],
                [float(v) for v in spec.negatives],
                int(spec.r))
    pos, neg, zeros = spec
    return [float(v) for v in pos], [float(v) for v in neg], int(zeros)


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    """Philox stream for one chunk, keyed by ``(seed, chunk)`` only."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed & SEED_MASK, chunk])))


def gaussian_moduli_squared(gen: np.random.Generator, size: int, dim: int) -> np.ndarray:
    """``|z_j|^2`` for ``size`` standard complex Gaussian vectors in C^dim.

    Box-Muller on uniform pairs with variance 1/2 per real component.
    """
    u = gen.random((size, dim, 2))
    radius = np.sqrt(-np.log1p(-u[..., 0]))  # 1 - u lies in (0, 1]
    angle = 2.0 * np.pi * u[..., 1]
    re = radius * np.cos(angle)
    im = radius * np.sin(angle)
    return re * re + im * im


def _count_chunk(weights: np.ndarray, seed: int, chunk: int, size: int) -> int:
    w = gaussian_moduli_squared(chunk_generator(seed, chunk), size, weights.shape[0])
    return int(np.count_nonzero(w @ weights > 0.0))


def mc_fraction(spec, samples: int, seed: int = 0, threads: int | None = None) -> MCEstimate:
    """Monte Carlo estimate of vol(Omega) / vol(CP^n).

    Complex Gaussian vectors project to the uniform measure on CP^n, and the
    sign of ``sum mu_j |z_j|^2 - sum nu_k |z'_k|^2`` does not depend on scale.
    Chunk ``c`` always uses the stream keyed by ``(seed, c)``, so the result
    is identical for any thread count.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    pos, neg, zeros = _spectrum_floats(spec)
    weights = np.array(pos + [-v for v in neg] + [0.0] * zeros, dtype=float)
    if weights.size == 0:
        raise ValueError("empty spectrum")
    sizes = [min(CHUNK, samples - start) for start in range(0, samples, CHUNK)]
    threads = threads or os.cpu_count() or 1
    if threads == 1 or len(sizes) == 1:
        hits = sum(_count_chunk(weights, seed, c, s) for c, s in enumerate(sizes))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(lambda cs: _count_chunk(weights, seed, *cs), enumerate(sizes)))
    f = hits / samples
    return MCEstimate(f, math.sqrt(f * (1.0 - f) / samples), samples, seed, hits)


def exp_fraction_closed(x: Sequence[float], y: Sequence[float]) -> float:
    """Float value of ``sum_l x_l^{p+q-1} / (prod_{k!=l}(x_l-x_k) prod_k(x_l+y_k))``.

    This is S/D in partial-fraction form, and also the probability that
    ``sum x_j g_j > sum y_k h_k`` for independent unit exponentials.
    """
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    p, q = len(x), len(y)
    if p < 1:
        raise ValueError("need p >= 1")
    if len(set(x)) != p:
        raise ValueError("x coordinates must be distinct")
    terms = []
    for ell, xl in enumerate(x):
        den = 1.0
        for k, xk in enumerate(x):
            if k != ell:
                den *= xl - xk
        for yk in y:
            den *= xl + yk
        terms.append(xl ** (p + q - 1) / den)
    return math.fsum(terms)


@dataclass(frozen=True)
class RegionE:
    """``{t > 0 : sum gamma_j t_j - sum delta_k t_{P+k} > -1}`` in R^{P+Q}."""

    gamma: tuple[float, ...]
    delta: tuple[float, ...]

    def __post_init__(self):
        if any(v <= 0 for v in self.gamma + self.delta):
            raise ValueError("region coefficients must be positive")

    @property
    def dim(self) -> int:
        return len(self.gamma) + len(self.delta)

    def contains(self, t: Sequence[float]) -> bool:
        P = len(self.gamma)
        return (all(v > 0 for v in t)
                and sum(g * v for g, v in zip(self.gamma, t[:P]))
                - sum(d * v for d, v in zip(self.delta, t[P:])) > -1.0)


class QuadratureGuardError(ValueError):
    pass


def region_integral(region: RegionE, limit: int = 200, epsrel: float = 1e-11) -> float:
    """``int_E (1 + sum t)^-(m+1) dt`` with ``m = dim E``.

    Unbounded positive-coefficient variables are integrated outermost, the
    bounded negative-coefficient ones inside them, and the innermost variable
    is done in closed form.
    """
    gamma, delta = region.gamma, region.delta
    P, Q, m = len(gamma), len(delta), region.dim
    if m == 0:
        return 1.0
    opts = dict(limit=limit, epsabs=0.0, epsrel=epsrel)

    def level(tpos: tuple, tneg: tuple) -> float:
        c = 1.0 + sum(tpos) + sum(tneg)
        slack = (1.0 + sum(g * t for g, t in zip(gamma, tpos))
                 - sum(d * t for d, t in zip(delta, tneg)))
        left = m - len(tpos) - len(tneg)
        if left == 1:
            if Q:
                upper = slack / delta[-1]
                return (c ** -m - (c + upper) ** -m) / m
            return c ** -m / m
        if len(tpos) < P:
            val, _ = integrate.quad(lambda t: level(tpos + (t,), tneg), 0.0, math.inf, **opts)
        else:
            upper = slack / delta[len(tneg)]
            val, _ = integrate.quad(lambda t: level(tpos, tneg + (t,)), 0.0, upper, **opts)
        return val

    return level((), ())


def integrate_E(spec: Spectrum, grid: int = 200) -> float:
    """Fubini-Study volume of the domain by direct integration.

    Uses the affine chart where the first positive coordinate is nonzero; the
    ``r`` zero-eigenvalue directions are integrated in closed form, leaving
    ``p + q - 1`` dimensions for quadrature. ``grid`` caps the number of
    adaptive subintervals per level.
    """
    pos, neg, zeros = _spectrum_floats(spec)
    p, q = len(pos), len(neg)
    if p < 1:
        raise ValueError("integral representation needs p >= 1")
    m = p + q - 1
    if m + zeros > MAX_QUAD_DIM:
        raise QuadratureGuardError(
            f"p+q-1+r = {m + zeros} exceeds the quadrature guard {MAX_QUAD_DIM}")
    x1 = pos[0]
    region = RegionE(tuple(v / x1 for v in pos[1:]), tuple(v / x1 for v in neg))
    n = m + zeros
    falling = math.prod(n - i for i in range(zeros))
    return math.pi ** n * region_integral(region, limit=grid) / falling


def verification_report(spec: Spectrum, samples: int = 1_000_000, seed: int = 0,
                        threads: int | None = None, quad: bool = True,
                        quad_rtol: float = 1e-5) -> dict:
    """Exact ratio versus Monte Carlo (and quadrature when feasible)."""
    exact = volume(spec)
    rho = float(exact.ratio)
    est = mc_fraction(spec, samples, seed, threads)
    sigma = max(est.stderr, math.sqrt(rho * (1.0 - rho) / samples))
    mc_ok = abs(est.fraction - rho) <= AGREE_SIGMAS * sigma
    report = {"ratio_exact": format_rational(exact.ratio),
              "mc": {**est.to_json(), "delta": est.fraction - rho,
                     "sigmas": (abs(est.fraction - rho) / sigma) if sigma else 0.0,
                     "agree": mc_ok},
              "quad": None}
    ok = mc_ok
    if quad and spec.p >= 1 and spec.p + spec.q - 1 + spec.r <= MAX_QUAD_DIM:
        value = integrate_E(spec)
        rel = abs(value - exact.decimal) / exact.decimal
        report["quad"] = {"volume": value, "volume_exact": exact.decimal,
                          "rel_err": rel, "agree": rel <= quad_rtol}
        ok = ok and rel <= quad_rtol
    report["agree"] = ok
    return report
