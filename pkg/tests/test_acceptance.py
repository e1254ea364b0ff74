"""Acceptance suite: one PASS/FAIL line per criterion (run with ``-s`` to see them)."""

import math
import random
import time
from fractions import Fraction as F
from functools import lru_cache
from math import comb

import numpy as np
from conftest import ACCEPTANCE_LINES
from fsquadric.identities import run_suite
from fsquadric.oracle import integrate_E, mc_fraction
from fsquadric.partitions import drop_first, enumerate_B, enumerate_C, star
from fsquadric.quadric import (
    Spectrum,
    coefficient_violations,
    denom_D,
    expand_D,
    expand_S,
    numer_S,
    numer_S_partialfrac,
    ratio_float,
    volume,
)
from fsquadric.schur import schur_expand
from fsquadric.spectral import HermitianMatrix, classify, eigenvalues_hermitian, jacobi_eigenvalues


def report(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    assert ok, detail


def rand_rational(rng):
    return F(rng.randint(1, 60), rng.randint(1, 12))


def rand_distinct(rng, k):
    out = []
    while len(out) < k:
        v = rand_rational(rng)
        if v not in out:
            out.append(v)
    return tuple(out)


def test_criterion_01_identity_suite():
    start = time.perf_counter()
    result = run_suite(5, 5, 50, seed=2024)
    elapsed = time.perf_counter() - start
    failed = [f.name for f in result.families.values() if not f.passed]
    checks = sum(f.checked for f in result.families.values())
    report(1, result.passed and elapsed < 60,
           f"identity suite p,q<=5, 50 points each: {checks} exact checks, "
           f"failures={failed or 'none'}, {elapsed:.1f}s (< 60s)")


@lru_cache(maxsize=None)
def _expanded(lam, n):
    return schur_expand(lam, n)


def tableau_S(x, y):
    """S evaluated from the monomial expansions of each Schur factor."""
    p, q = len(x), len(y)
    return sum((_expanded(lam, p).evaluate(x) * _expanded(star(lam, p, q), q).evaluate(y)
                for lam in enumerate_C(p, q)), F(0))


def test_criterion_02_algorithm_equivalence():
    rng = random.Random(22)
    start = time.perf_counter()
    bad, checked = [], 0
    for p in range(1, 5):
        for q in range(0, 5):
            for _ in range(10):
                x, y = rand_distinct(rng, p), rand_distinct(rng, q)
                a, b, c = numer_S(x, y), numer_S_partialfrac(x, y), tableau_S(x, y)
                checked += 1
                if not a == b == c:
                    bad.append((p, q, x, y))
    # the full symbolic S for every shape agrees too
    for p in range(0, 5):
        for q in range(0, 5):
            x, y = rand_distinct(rng, p), rand_distinct(rng, q)
            checked += 1
            if expand_S(p, q).evaluate(x + y) != numer_S(x, y):
                bad.append((p, q, x, y))
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 30,
           f"partition sum = partial fractions = tableau expansion, p,q<=4: "
           f"{checked} points, {len(bad)} mismatches, {elapsed:.1f}s (< 30s)")


def test_criterion_03_known_values():
    problems = []
    rng = random.Random(3)
    for n_pos in range(1, 7):
        for r in range(0, 3):
            spec = Spectrum(rand_distinct(rng, n_pos), (), r)
            v = volume(spec)
            if v.ratio != 1 or v.volume_over_pi_n != F(1, math.factorial(spec.n)):
                problems.append(("full", spec))
    for _ in range(20):
        m, nu = rand_rational(rng), rand_rational(rng)
        v = volume(Spectrum((m,), (nu,)))
        sin2 = m / (m + nu)  # geodesic disc of radius rho with cos^2 rho = nu/(m+nu)
        if v.ratio != sin2 or abs(v.decimal - math.pi * float(sin2)) > 1e-12:
            problems.append(("disc", m, nu))
    for k in range(1, 5):
        vals = rand_distinct(rng, k)
        shuffled = list(vals)
        rng.shuffle(shuffled)
        if volume(Spectrum(vals, tuple(shuffled), k % 3)).ratio != F(1, 2):
            problems.append(("symmetric", vals))
    worked = volume(Spectrum((1, 2), (3,)))
    if (worked.ratio, worked.volume_over_pi_n) != (F(11, 20), F(11, 40)):
        problems.append(("11/20", worked.ratio))
    report(3, not problems,
           f"ratio 1 (all positive), m/(m+v) disc areas, 1/2 (sign symmetric), 11/20 worked "
           f"example: problems={problems or 'none'}")


def test_criterion_04_monte_carlo():
    rng = random.Random(44)
    start = time.perf_counter()
    lines, good = [], 0
    for case in range(25):
        while True:
            p, q, r = rng.randint(1, 6), rng.randint(1, 6), rng.randint(0, 2)
            if p + q + r <= 7:
                break
        spec = Spectrum(tuple(rand_rational(rng) for _ in range(p)),
                        tuple(rand_rational(rng) for _ in range(q)), r)
        rho = float(volume(spec).ratio)
        est = mc_fraction(spec, 1_000_000, seed=1000 + case)
        ok = abs(est.fraction - rho) <= 4 * est.stderr
        good += ok
        lines.append(f"(p,q,r)=({p},{q},{r}) exact={rho:.6f} mc={est.fraction:.6f} "
                     f"z={abs(est.fraction - rho) / est.stderr:.2f}")
    elapsed = time.perf_counter() - start
    print("\n" + "\n".join("    " + s for s in lines))
    report(4, good >= 24 and elapsed < 120,
           f"Monte Carlo, 25 spectra x 1e6 samples: {good}/25 within 4 stderr (need 24), "
           f"{elapsed:.1f}s (< 120s)")


def quad_shapes(limit):
    return [(p, q, r) for p in range(1, limit + 2) for q in range(0, limit + 1)
            for r in range(0, limit + 1) if p + q - 1 + r <= limit]


def test_criterion_05_quadrature():
    rng = random.Random(55)
    start = time.perf_counter()
    worst, count = 0.0, 0
    for p, q, r in quad_shapes(3):
        for _ in range(2):
            spec = Spectrum(rand_distinct(rng, p), rand_distinct(rng, q), r)
            exact = volume(spec).decimal
            worst = max(worst, abs(integrate_E(spec) - exact) / exact)
            count += 1
    elapsed = time.perf_counter() - start
    report(5, worst <= 1e-5 and elapsed < 60,
           f"quadrature vs exact for all {len(quad_shapes(3))} shapes with p+q-1+r<=3 "
           f"({count} spectra): worst rel err {worst:.2e} (<= 1e-5), {elapsed:.1f}s (< 60s)")


def test_criterion_06_zero_reduction():
    rng = random.Random(66)
    worst, count = 0.0, 0
    for p in range(1, 3):
        for q in range(0, 3):
            base = (rand_distinct(rng, p), rand_distinct(rng, q))
            v0 = integrate_E(Spectrum(*base))
            for r in (1, 2):
                spec = Spectrum(*base, r)
                if spec.p + spec.q - 1 + r > 4:
                    continue
                n = spec.n
                factor = math.pi ** r / math.prod(n - i for i in range(r))
                worst = max(worst, abs(integrate_E(spec) - factor * v0) / (factor * v0))
                count += 1
    report(6, worst <= 1e-5,
           f"r in {{1,2}} quadrature = pi^r/(n...(n-r+1)) x r=0 volume: {count} cases, "
           f"worst rel err {worst:.2e} (<= 1e-5)")


def test_criterion_07_domination():
    bad = {}
    for p in range(4):
        for q in range(4):
            v = coefficient_violations(expand_S(p, q), expand_D(p, q))
            if v:
                bad[p, q] = v
    report(7, not bad, f"symbolic S <= D coefficientwise for all p,q<=3: "
                       f"violations={bad or 'none'}")


def test_criterion_08_combinatorial_lemmas():
    problems = []
    for p in range(7):
        for q in range(7):
            B = enumerate_B(p, q)
            if len(B) != comb(p + q, p) or len(set(B)) != len(B):
                problems.append(("count", p, q))
            if p >= 1:
                C = enumerate_C(p, q)
                imgs = [drop_first(xi) for xi in C]
                if (len(set(imgs)) != len(C) or set(imgs) != set(enumerate_B(p - 1, q))
                        or any(star(e, p - 1, q) != star(xi, p, q) for xi, e in zip(C, imgs))):
                    problems.append(("drop_first", p, q))
            if p + q:
                src = enumerate_C(q, p)
                imgs = [star(lam, q, p) for lam in src]
                target = set(B) - set(enumerate_C(p, q))
                if (len(set(imgs)) != len(src) or set(imgs) != target
                        or any(star(mu, p, q) != lam for lam, mu in zip(src, imgs))):
                    problems.append(("complement", p, q))
    report(8, not problems,
           f"box count = binomial, first-part removal and star-complement bijections, "
           f"exhaustive p,q<=6: problems={problems or 'none'}")


def test_criterion_09_homogeneity():
    rng = random.Random(99)
    bad, checked = [], 0
    for p in range(5):
        for q in range(5):
            for _ in range(10):
                x = tuple(rand_rational(rng) for _ in range(p))
                y = tuple(rand_rational(rng) for _ in range(q))
                t = rand_rational(rng)
                tx, ty = [t * v for v in x], [t * v for v in y]
                checked += 1
                if (numer_S(tx, ty) != t ** (p * q) * numer_S(x, y)
                        or denom_D(tx, ty) != t ** (p * q) * denom_D(x, y)):
                    bad.append((p, q, x, y, t))
    for p in range(4):
        for q in range(4):
            if p + q and not (expand_S(p, q).is_homogeneous(p * q)
                              and expand_D(p, q).is_homogeneous(p * q)):
                bad.append(("degree", p, q))
    report(9, not bad, f"S and D homogeneous of degree pq, p,q<=4: {checked} exact checks, "
                       f"{len(bad)} failures")


def test_criterion_10_spectral_path():
    mat = HermitianMatrix.from_array(np.diag([1.0, 2.0, -3.0]).astype(complex))
    fs = classify(eigenvalues_hermitian(mat))
    ratio = ratio_float(fs.positives, fs.negatives)
    err_ratio = abs(ratio - 11 / 20)
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 13))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = (a + a.conj().T) / 2
        ev = np.asarray(jacobi_eigenvalues(a))
        fro = np.linalg.norm(a) ** 2
        worst = max(worst, abs(ev.sum() - np.trace(a).real) / math.sqrt(fro),
                    abs((ev ** 2).sum() - fro) / fro)
    report(10, err_ratio <= 1e-9 and worst <= 1e-10,
           f"diag(1,2,-3) ratio {ratio!r} (|err|={err_ratio:.1e} <= 1e-9); trace/Frobenius on "
           f"100 random Hermitian matrices n<=12: worst rel err {worst:.1e}")
