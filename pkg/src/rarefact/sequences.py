"""b-multiplicative sequences defined by digit weights, their partial sums, and p-rarefaction.

A sequence is fixed by a base b >= 2 and unit-modulus weights (w_0 .. w_{b-1})
with w_0 = 1; the value at n is the product of the weights of n's base-b digits.
Partial sums admit a telescoped digit decomposition that evaluates in O(log N),
checked here against a brute-force accumulation oracle.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .primes import is_prime, multiplicative_order

UNIT_TOL = 1e-12
DEFAULT_ORACLE_BOUND = 10**7
_VECTOR_THRESHOLD = 4096


class OracleBoundError(ValueError):
    """A brute-force evaluation would exceed its configured bound."""


def digits_lsb_first(n: int, base: int) -> list[int]:
    """Base-b digits of n >= 0, least significant first; empty for n = 0."""
    out = []
    while n > 0:
        n, c = divmod(n, base)
        out.append(c)
    return out


@dataclass(frozen=True)
class DigitSums:
    """Cumulative weight sums d(0..b), with d(c) = w_0 + ... + w_{c-1}."""

    partials: tuple[complex, ...]

    def __getitem__(self, c: int) -> complex:
        return self.partials[c]

    @property
    def total(self) -> complex:
        """d(b): the growth constant of the digit decomposition."""
        return self.partials[-1]


@dataclass(frozen=True)
class MultiplicativeSequence:
    base: int
    weights: tuple[complex, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        weights = tuple(complex(w) for w in self.weights)
        if len(weights) != self.base:
            raise ValueError(f"need exactly {self.base} weights, got {len(weights)}")
        if abs(weights[0] - 1) > UNIT_TOL:
            raise ValueError("weight of digit 0 must be 1")
        for c, w in enumerate(weights):
            if abs(abs(w) - 1) > UNIT_TOL:
                raise ValueError(f"weight of digit {c} is not of modulus one")
        # w_0 = 1 exactly, so zero digits never perturb floating products.
        object.__setattr__(self, "weights", (1 + 0j,) + weights[1:])

    @property
    def is_trivial(self) -> bool:
        """True for the all-ones sequence, which the growth results exclude."""
        return all(abs(w - 1) <= UNIT_TOL for w in self.weights)

    @property
    def has_sign_weights(self) -> bool:
        return all(abs(w.imag) <= UNIT_TOL and abs(abs(w.real) - 1) <= UNIT_TOL for w in self.weights)

    @cached_property
    def digit_sums(self) -> DigitSums:
        partials = [0j]
        for w in self.weights:
            partials.append(partials[-1] + w)
        return DigitSums(tuple(partials))

    def term(self, n: int) -> complex:
        """Value at n: product of digit weights over n's base-b expansion; term(0) = 1."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        value = 1 + 0j
        for c in digits_lsb_first(n, self.base):
            if c:
                value *= self.weights[c]
        return value


def from_signs(text: str) -> MultiplicativeSequence:
    """Sequence from a sign literal such as "+-" (one +/- per digit weight)."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty sign literal")
    weights = []
    for ch in text:
        if ch == "+":
            weights.append(1 + 0j)
        elif ch == "-":
            weights.append(-1 + 0j)
        else:
            raise ValueError(f"sign literal may only contain + and -, got {ch!r}")
    return MultiplicativeSequence(len(weights), tuple(weights))


def from_json_weights(text: str) -> MultiplicativeSequence:
    """Sequence from a JSON list of [re, im] pairs."""
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise ValueError("JSON weights must be a non-empty list of [re, im] pairs")
    weights = []
    for entry in data:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ValueError(f"weight entries must be [re, im] pairs, got {entry!r}")
        weights.append(complex(float(entry[0]), float(entry[1])))
    return MultiplicativeSequence(len(weights), tuple(weights))


def parse_sequence_literal(text: str) -> MultiplicativeSequence:
    """Dispatch between the sign notation and the JSON weight notation."""
    stripped = text.strip()
    if stripped.startswith("["):
        return from_json_weights(stripped)
    return from_signs(stripped)


THUE_MORSE = from_signs("+-")
PLUS_PLUS_MINUS = from_signs("++-")


def thue_morse_fast(n: int) -> int:
    """(-1)**popcount(n): the portable digit-parity kernel for the "+-" sequence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 - 2 * (n.bit_count() & 1)


def _terms_vector(seq: MultiplicativeSequence, ns: np.ndarray) -> np.ndarray:
    weights = np.asarray(seq.weights, dtype=complex)
    acc = np.ones(len(ns), dtype=complex)
    top = int(ns.max(initial=0))
    scale = 1
    while scale <= top:
        acc *= weights[(ns // scale) % seq.base]
        scale *= seq.base
    return acc


def naive_partial_sum(seq: MultiplicativeSequence, n_terms: int,
                      bound: int = DEFAULT_ORACLE_BOUND) -> complex:
    """Sum of the first n_terms values by direct accumulation (the oracle route)."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    if n_terms > bound:
        raise OracleBoundError(f"naive sum of {n_terms} terms exceeds bound {bound}")
    if n_terms <= _VECTOR_THRESHOLD:
        return sum((seq.term(n) for n in range(n_terms)), 0j)
    return complex(_terms_vector(seq, np.arange(n_terms)).sum())


def series_over_digits(seq: MultiplicativeSequence, items) -> complex:
    """Evaluate sum_i prod_{k>i} w_{c_k} * d(c_i) * d(b)^i over (position, digit) pairs.

    `items` must iterate positions in strictly descending order; zero digits are
    skipped (d(0) = 0 and w_0 = 1 make them exact no-ops).
    """
    sums = seq.digit_sums
    growth = sums.total
    prefix = 1 + 0j
    total = 0j
    for i, c in items:
        if c:
            total += prefix * sums[c] * growth**i
            prefix *= seq.weights[c]
    return total


def closed_form_partial_sum(seq: MultiplicativeSequence, n_terms: int) -> complex:
    """Partial sum of the first n_terms values from the telescoped digit decomposition.

    Runs in O(log n_terms) arithmetic operations and agrees with
    naive_partial_sum up to floating tolerance.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    digits = digits_lsb_first(n_terms, seq.base)
    return series_over_digits(seq, ((i, digits[i]) for i in range(len(digits) - 1, -1, -1)))


def _check_twist_args(t: MultiplicativeSequence, p: int, j: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if t.base % p == 0:
        raise ValueError(f"{p} divides the base {t.base}")
    if not 1 <= j <= p - 1:
        raise ValueError(f"twist index {j} is not a unit mod {p}")
    if not t.has_sign_weights:
        raise ValueError("twists are defined for sequences with +1/-1 weights")


def build_twist(t: MultiplicativeSequence, p: int, j: int) -> MultiplicativeSequence:
    """Sequence with values zeta_p^(j*n) * t_n, realised in base b**ord_p(b).

    zeta_p is the principal root exp(2*pi*i/p); other primitive roots are
    reached through j.
    """
    _check_twist_args(t, p, j)
    order = multiplicative_order(t.base, p)
    big_base = t.base**order
    weights = tuple(
        cmath.exp(2j * math.pi * ((j * c) % p) / p) * t.term(c) for c in range(big_base)
    )
    return MultiplicativeSequence(big_base, weights)


class Growth(Enum):
    BOUNDED = "bounded"
    LOGARITHMIC = "logarithmic"
    POWER = "power"


@dataclass(frozen=True)
class Classification:
    growth: Growth
    exponent: float | None = None


CLASSIFY_EPS = 1e-9


def classify(seq: MultiplicativeSequence, eps: float = CLASSIFY_EPS) -> Classification:
    """Growth trichotomy by |d(b)|: <1 bounded, =1 logarithmic, >1 power-law.

    The power class carries the exponent log|d(b)| / log b.
    """
    magnitude = abs(seq.digit_sums.total)
    if magnitude < 1 - eps:
        return Classification(Growth.BOUNDED)
    if abs(magnitude - 1) <= eps:
        return Classification(Growth.LOGARITHMIC)
    return Classification(Growth.POWER, math.log(magnitude) / math.log(seq.base))


def rarefied_sum(t: MultiplicativeSequence, p: int, n_terms: int,
                 bound: int = DEFAULT_ORACLE_BOUND) -> complex:
    """Sum of t_n over n < n_terms with p | n, by direct accumulation."""
    _check_twist_args(t, p, 1)
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    count = (n_terms + p - 1) // p
    if count > bound:
        raise OracleBoundError(f"rarefied sum over {count} multiples exceeds bound {bound}")
    if count <= _VECTOR_THRESHOLD:
        return sum((t.term(n) for n in range(0, n_terms, p)), 0j)
    return complex(_terms_vector(t, np.arange(0, n_terms, p)).sum())


def rarefied_sum_via_twists(t: MultiplicativeSequence, p: int, n_terms: int) -> complex:
    """Same rarefied sum through the root-of-unity filter.

    Averages the plain partial sum with the p-1 twisted partial sums, each
    evaluated by the O(log N) closed form.
    """
    _check_twist_args(t, p, 1)
    if n_terms == 0:
        return 0j
    total = closed_form_partial_sum(t, n_terms)
    for j in range(1, p):
        total += closed_form_partial_sum(build_twist(t, p, j), n_terms)
    return total / p
