"""Spectral data of the rarefaction matrix M = prod_{m<s} (I - T^(2^m)).

T is the cyclic shift on p coordinates, s the order of 2 mod p.  M is
circulant, so its eigenvalues come in closed form as products of
(1 - zeta^(j*2^m)); the dense matrix is kept only as a cross-check fixture.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .primes import is_prime, multiplicative_order

MODULUS_TIE_TOL = 1e-9


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def eigenvalues_of_m(p: int) -> list[complex]:
    """Closed-form eigenvalues lambda_j = prod_{m<s} (1 - zeta_p^(j*2^m)), j = 0..p-1."""
    _check_odd_prime(p)
    s = multiplicative_order(2, p)
    eigenvalues = []
    for j in range(p):
        value = 1 + 0j
        for m in range(s):
            k = j * pow(2, m, p) % p
            value *= 1 - cmath.exp(2j * math.pi * k / p)
        eigenvalues.append(value)
    return eigenvalues


def shift_matrix(p: int) -> np.ndarray:
    """The p x p cyclic shift with ones on the subdiagonal and in the corner."""
    matrix = np.zeros((p, p), dtype=np.int64)
    for i in range(p - 1):
        matrix[i + 1, i] = 1
    matrix[0, p - 1] = 1
    return matrix


def dense_m(p: int) -> np.ndarray:
    """Exact integer M, the test fixture behind the closed-form eigenvalues."""
    _check_odd_prime(p)
    s = multiplicative_order(2, p)
    shift = shift_matrix(p)
    eye = np.eye(p, dtype=np.int64)
    matrix = eye
    for m in range(s):
        matrix = matrix @ (eye - np.linalg.matrix_power(shift, 2**m))
    return matrix


def _is_real_positive(z: complex, rel: float = 1e-9) -> bool:
    return z.real > 0 and abs(z.imag) <= rel * abs(z)


@dataclass(frozen=True)
class SpectralReport:
    p: int
    s: int
    eigenvalues: tuple[complex, ...]
    lambda1: float
    lambda2: float
    r: int
    alpha: float
    beta: float


def spectral_report(p: int) -> SpectralReport:
    """Spectral radius, secondary modulus, realness index r and the exponents.

    alpha = log(lambda1) / (r * s * log 2); beta = log(lambda2) / (s * log 2)
    when lambda2 > 1, else 0.  lambda2 is the largest eigenvalue modulus
    strictly below the spectral radius (0 when the nonzero spectrum is flat).
    """
    eigenvalues = eigenvalues_of_m(p)
    s = multiplicative_order(2, p)
    moduli = [abs(v) for v in eigenvalues]
    lambda1 = max(moduli)
    top = [v for v in eigenvalues if abs(v) >= lambda1 * (1 - MODULUS_TIE_TOL)]
    # Conjugate pairs share r; the tie-break just makes reports deterministic.
    dominant = max(top, key=lambda v: (v.real, v.imag))
    r = next(k for k in (1, 2, 4) if _is_real_positive(dominant**k))
    below = [m for m in moduli if m < lambda1 * (1 - MODULUS_TIE_TOL)]
    lambda2 = max(below) if below else 0.0
    alpha = math.log(lambda1) / (r * s * math.log(2))
    beta = math.log(lambda2) / (s * math.log(2)) if lambda2 > 1 else 0.0
    return SpectralReport(p, s, tuple(eigenvalues), lambda1, lambda2, r, alpha, beta)
