"""Exact arithmetic in Z[T]/(T^p - 1): expanded products over index sets,
norm and trace extraction, and coset products with numeric evaluation.

Reduction is taken mod T^p - 1 rather than the cyclotomic polynomial so that
Galois-stable elements stay recognisable by their equal off-constant
coefficients.  Coefficients are arbitrary-precision from the start; the
three-term support products grow like 3^(p-1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .primes import is_prime

Support = tuple[tuple[int, int], ...]

# Factor templates: (coefficient, exponent multiplier) pairs, evaluated at T^j.
ONE_MINUS_T: Support = ((1, 0), (-1, 1))
ONE_PLUS_T_MINUS_T2: Support = ((1, 0), (1, 1), (-1, 2))


def support_from_coefficients(coeffs) -> Support:
    """Support pairs from a dense coefficient list, e.g. [1, 1, -1] -> 1 + T - T^2."""
    pairs = tuple((int(c), i) for i, c in enumerate(coeffs) if int(c) != 0)
    if not pairs:
        raise ValueError("support polynomial must be nonzero")
    return pairs


class GaloisSymmetryError(ValueError):
    """Off-constant coefficients differ: the element is not Galois stable."""


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


@dataclass(frozen=True)
class RingElement:
    """An element of Z[T]/(T^p - 1) as its p integer coefficients."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_odd_prime(self.p)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.p:
            raise ValueError(f"need exactly {self.p} coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, p: int) -> "RingElement":
        return cls(p, (1,) + (0,) * (p - 1))

    @classmethod
    def monomial(cls, p: int, exponent: int, coefficient: int = 1) -> "RingElement":
        coeffs = [0] * p
        coeffs[exponent % p] = coefficient
        return cls(p, tuple(coeffs))

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.p != other.p:
            raise ValueError("mismatched ring sizes")
        return RingElement(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul_mod(self, other)


def mul_mod(a: RingElement, b: RingElement) -> RingElement:
    """Exact convolution with exponents reduced mod p."""
    if a.p != b.p:
        raise ValueError("mismatched ring sizes")
    p = a.p
    out = [0] * p
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[(i + j) % p] += ai * bj
    return RingElement(p, tuple(out))


def support_factor(p: int, support: Support, index: int) -> RingElement:
    """The support polynomial evaluated at T^index."""
    coeffs = [0] * p
    for coefficient, multiplier in support:
        coeffs[multiplier * index % p] += coefficient
    return RingElement(p, tuple(coeffs))


def product_over_set(p: int, support: Support, index_set) -> RingElement:
    """Exact expansion of prod_{j in index_set} support(T^j); indices must be units."""
    _check_odd_prime(p)
    indices = [j % p for j in index_set]
    if any(j == 0 for j in indices):
        raise ValueError("index 0 is not allowed in the product set")
    coeffs = [0] * p
    coeffs[0] = 1
    for j in indices:
        nxt = [0] * p
        for coefficient, multiplier in support:
            shift = multiplier * j % p
            for i, value in enumerate(coeffs):
                if value:
                    nxt[(i + shift) % p] += coefficient * value
        coeffs = nxt
    return RingElement(p, tuple(coeffs))


def norm_from_expansion(element: RingElement) -> int:
    """C_0 - C_1 of a Galois-symmetric expansion: the norm of its value at zeta.

    Refuses asymmetric input, which always signals a non-Galois-stable product.
    """
    tail = element.coeffs[1:]
    if any(c != tail[0] for c in tail[1:]):
        raise GaloisSymmetryError("off-constant coefficients are not all equal")
    return element.coeffs[0] - tail[0]


@dataclass(frozen=True)
class CosetSystem:
    """A subgroup of F_p^x with the coset decomposition it induces."""

    p: int
    generators: tuple[int, ...]
    gamma: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, p: int, generators) -> "CosetSystem":
        _check_odd_prime(p)
        gens = tuple(g % p for g in generators)
        if any(g == 0 for g in gens):
            raise ValueError("generators must be units mod p")
        gamma = {1}
        frontier = [1]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g % p
                if y not in gamma:
                    gamma.add(y)
                    frontier.append(y)
        used: set[int] = set()
        cosets = []
        for a in range(1, p):
            if a in used:
                continue
            coset = tuple(sorted(a * g % p for g in gamma))
            cosets.append(coset)
            used.update(coset)
        return cls(p, gens, tuple(sorted(gamma)), tuple(cosets))

    @classmethod
    def squares(cls, p: int) -> "CosetSystem":
        _check_odd_prime(p)
        return cls.from_generators(p, sorted({x * x % p for x in range(1, p)}))

    @classmethod
    def full_group(cls, p: int) -> "CosetSystem":
        _check_odd_prime(p)
        return cls.from_generators(p, range(1, p))

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(coset[0] for coset in self.cosets)


def coset_products(system: CosetSystem, support: Support) -> list[RingElement]:
    """Exact expansion of prod_{j in a*Gamma} support(T^j), one element per coset."""
    return [product_over_set(system.p, support, coset) for coset in system.cosets]


def trace_of_coset_products(system: CosetSystem, support: Support) -> int:
    """Sum of the coset products, extracted as the rational integer c_0 - c_1.

    The sum must be Galois stable (constant off-coefficient), i.e. of the form
    c_0 + c_1 (T + ... + T^(p-1)).
    """
    total = RingElement(system.p, (0,) * system.p)
    for element in coset_products(system, support):
        total = total + element
    try:
        return norm_from_expansion(total)
    except GaloisSymmetryError:
        raise GaloisSymmetryError("sum of coset products is not Galois stable") from None


def evaluate_numeric(element: RingElement, j: int) -> complex:
    """sum_i C_i * zeta_p^(i*j) in double precision."""
    if not 0 <= j < element.p:
        raise ValueError(f"evaluation point must lie in 0..{element.p - 1}")
    p = element.p
    return sum(
        (
            coefficient * cmath.exp(2j * math.pi * (i * j % p) / p)
            for i, coefficient in enumerate(element.coeffs)
            if coefficient
        ),
        0j,
    )
