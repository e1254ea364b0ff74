"""Hermitian matrix input: cyclic complex Jacobi eigenvalues and sign classification."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

HERMITIAN_TOL = 1e-12
DEFAULT_ZERO_TOL = 1e-9


class NotHermitianError(ValueError):
    pass


@dataclass(frozen=True)
class HermitianMatrix:
    entries: np.ndarray  # complex, shape (size, size), exactly Hermitian after ingest

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_array(cls, a, tol: float = HERMITIAN_TOL) -> HermitianMatrix:
        a = np.array(a, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
        scale = float(np.max(np.abs(a)))
        asym = float(np.max(np.abs(a - a.conj().T)))
        if asym > tol * scale:
            raise NotHermitianError(
                f"matrix is not Hermitian: max |A - A*| = {asym:.3g} "
                f"exceeds {tol:g} * max|entry| = {tol * scale:.3g}")
        return cls((a + a.conj().T) / 2)

    @classmethod
    def from_json(cls, data: dict) -> HermitianMatrix:
        rows = data["entries"]
        a = np.array([[complex(*pair) if isinstance(pair, (list, tuple)) else complex(pair)
                       for pair in row] for row in rows], dtype=complex)
        if "n" in data and int(data["n"]) != a.shape[0]:
            raise ValueError(f"header says n={data['n']} but matrix has {a.shape[0]} rows")
        return cls.from_array(a)

    @classmethod
    def load(cls, path: str | Path) -> HermitianMatrix:
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {"n": self.size,
                "entries": [[[float(z.real), float(z.imag)] for z in row]
                            for row in self.entries]}


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian array by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of ``a[i, j]`` with a diagonal
    unitary, then applies the real symmetric Jacobi rotation that zeroes it.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    scale = math.sqrt(float(np.sum(np.abs(a) ** 2))) or 1.0
    for _ in range(max_sweeps):
        if _off_norm(a) <= tol * scale:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                g = a[i, j]
                b = abs(g)
                if b <= 1e-300 or b <= 1e-18 * scale:
                    continue
                phase = g / b
                theta = (a[j, j].real - a[i, i].real) / (2.0 * b)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # U restricted to (i, j) = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                u00, u01 = c, s
                u10, u11 = -s * phase.conjugate(), c * phase.conjugate()
                ci, cj = a[:, i].copy(), a[:, j].copy()
                a[:, i] = ci * u00 + cj * u10
                a[:, j] = ci * u01 + cj * u11
                ri, rj = a[i, :].copy(), a[j, :].copy()
                a[i, :] = np.conj(u00) * ri + np.conj(u10) * rj
                a[j, :] = np.conj(u01) * ri + np.conj(u11) * rj
                a[i, j] = a[j, i] = 0.0
                a[i, i] = a[i, i].real
                a[j, j] = a[j, j].real
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(a).real)


def eigenvalues_hermitian(a: HermitianMatrix) -> list[float]:
    """All real eigenvalues, sorted ascending."""
    if not isinstance(a, HermitianMatrix):
        a = HermitianMatrix.from_array(a)
    return [float(v) for v in jacobi_eigenvalues(a.entries)]


@dataclass(frozen=True)
class FloatSpectrum:
    eigenvalues: tuple[float, ...]
    p: int
    q: int
    r: int
    zero_tolerance: float

    @property
    def positives(self) -> tuple[float, ...]:
        return tuple(v for v in self.eigenvalues if v > self._cut)[::-1]

    @property
    def negatives(self) -> tuple[float, ...]:
        """Magnitudes of the negative eigenvalues."""
        return tuple(-v for v in self.eigenvalues if v < -self._cut)

    @property
    def n(self) -> int:
        return self.p + self.q + self.r - 1

    @property
    def _cut(self) -> float:
        return self.zero_tolerance * max(1.0, max((abs(v) for v in self.eigenvalues), default=0.0))

    def to_json(self) -> dict:
        return {"eigenvalues": list(self.eigenvalues),
                "classification": {"p": self.p, "q": self.q, "r": self.r},
                "zero_tolerance": self.zero_tolerance}


def classify(eigs, zero_tol: float = DEFAULT_ZERO_TOL) -> FloatSpectrum:
    """Split eigenvalues into positive, negative and zero.

    ``|v| <= zero_tol * max(1, max|v|)`` counts as zero.
    """
    if zero_tol < 0:
        raise ValueError("zero tolerance must be nonnegative")
    eigs = tuple(sorted(float(v) for v in eigs))
    cut = zero_tol * max(1.0, max((abs(v) for v in eigs), default=0.0))
    p = sum(1 for v in eigs if v > cut)
    q = sum(1 for v in eigs if v < -cut)
    return FloatSpectrum(eigs, p, q, len(eigs) - p - q, zero_tol)
