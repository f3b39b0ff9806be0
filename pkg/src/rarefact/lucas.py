"""Lucas and Fibonacci numbers in exact arithmetic, domino-count oracles,
the prime-factor congruence verdicts, and the binomial double sum for the
norm of 1 + zeta - zeta^2."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .primes import SMALL_PRIMES, is_prime
from .sequences import OracleBoundError

DOMINO_ENUM_LIMIT = 25
DEFAULT_MAX_DIGITS = 25
DEFAULT_SEED = 123456789


def lucas(n: int) -> int:
    """L_n with L_0 = 2, L_1 = 1 and the Fibonacci recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class LucasPair:
    index: int
    lucas: int
    fibonacci: int


def lucas_pair(n: int) -> LucasPair:
    return LucasPair(n, lucas(n), fibonacci(n))


def _count_disjoint_placements(masks: list[int]) -> int:
    """Number of subsets of the given cell masks that are pairwise disjoint."""

    def walk(i: int, occupied: int) -> int:
        if i == len(masks):
            return 1
        total = walk(i + 1, occupied)
        if not masks[i] & occupied:
            total += walk(i + 1, occupied | masks[i])
        return total

    return walk(0, 0)


def domino_interval(n: int) -> int:
    """Disjoint dominos {k, k+1} on the interval [1, n-1], counted exhaustively.

    Equals F_n; placements are enumerated as bitmasks of covered cells.
    """
    if n < 2:
        raise ValueError("interval count needs n >= 2")
    if n > DOMINO_ENUM_LIMIT:
        raise OracleBoundError(f"exhaustive domino count supports n <= {DOMINO_ENUM_LIMIT}")
    masks = [(1 << k) | (1 << (k + 1)) for k in range(1, n - 1)]
    return _count_disjoint_placements(masks)


def domino_circle(n: int) -> int:
    """Disjoint dominos on the circle Z/nZ (wraparound allowed), counted exhaustively.

    Equals L_n.
    """
    if n < 3:
        raise ValueError("circle count needs n >= 3")
    if n > DOMINO_ENUM_LIMIT:
        raise OracleBoundError(f"exhaustive domino count supports n <= {DOMINO_ENUM_LIMIT}")
    masks = [(1 << k) | (1 << ((k + 1) % n)) for k in range(n)]
    return _count_disjoint_placements(masks)


def lucas_identity_check(n: int) -> bool:
    """L_{n+1} L_{n-1} = L_n^2 + (-1)^(n+1) * 5 and L_n = F_{n-1} + F_{n+1}, exactly."""
    if n < 1:
        raise ValueError("index must be at least 1")
    quadratic = lucas(n + 1) * lucas(n - 1) == lucas(n) ** 2 + (-1) ** (n + 1) * 5
    bridge = lucas(n) == fibonacci(n - 1) + fibonacci(n + 1)
    return quadratic and bridge


class FactorBudgetError(RuntimeError):
    """Factorization would exceed the configured budget."""


def _brent_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n by Brent's cycle variant."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g


def factorize(n: int, max_digits: int | None = None, seed: int = DEFAULT_SEED) -> list[int]:
    """Prime factors of n >= 1 with multiplicity, sorted.

    Trial division by the small primes, then Brent rho splits with a seeded
    RNG.  Raises FactorBudgetError when n has more than max_digits digits.
    """
    if n < 1:
        raise ValueError("can only factor positive integers")
    if max_digits is not None and len(str(n)) > max_digits:
        raise FactorBudgetError(f"{n} exceeds the {max_digits}-digit budget")
    factors: list[int] = []
    for p in SMALL_PRIMES:
        while n % p == 0:
            factors.append(p)
            n //= p
        if p * p > n:
            break
    if n == 1:
        return sorted(factors)
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m, seed=seed):
            factors.append(m)
            continue
        d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors)


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CongruenceReport:
    """Factor congruence verdict for L_n: every prime factor is 2 or +-1 mod 5."""

    index: int
    value: int
    status: Verdict
    factors: tuple[tuple[int, int], ...] | None
    residues: tuple[int, ...] | None


def factor_congruence_check(
    n: int, max_digits: int = DEFAULT_MAX_DIGITS, seed: int = DEFAULT_SEED
) -> CongruenceReport:
    """Check the mod-5 congruence of the prime factors of L_n for odd n >= 3.

    INCONCLUSIVE (never a false verdict) when the factor budget is exceeded.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("congruence check applies to odd n >= 3")
    value = lucas(n)
    try:
        primes = factorize(value, max_digits=max_digits, seed=seed)
    except FactorBudgetError:
        return CongruenceReport(n, value, Verdict.INCONCLUSIVE, None, None)
    grouped: list[tuple[int, int]] = []
    for p in primes:
        if grouped and grouped[-1][0] == p:
            grouped[-1] = (p, grouped[-1][1] + 1)
        else:
            grouped.append((p, 1))
    residues = tuple(p % 5 for p, _ in grouped)
    ok = all(p == 2 or p % 5 in (1, 4) for p, _ in grouped)
    return CongruenceReport(
        n, value, Verdict.PASS if ok else Verdict.FAIL, tuple(grouped), residues
    )


def binomials_formula(p: int) -> int:
    """The double binomial sum equal to the norm of 1 + zeta - zeta^2 (and to L_p)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    total = 0
    for n0 in range(p):
        total += sum(
            (-1) ** (p - 1 - n0 - n2) * math.comb(p - 1 - n0, n2)
            for n2 in range(min(p - 1 - n0, n0) + 1)
        )
        total += sum(math.comb(p - 1 - n2, n0) for n2 in range(n0 + 1, p - n0))
    return total
