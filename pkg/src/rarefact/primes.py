"""Shared prime and modular-arithmetic helpers."""

from __future__ import annotations

import random

# Witness set deterministic for every n below ~3.3e24 (covers 2**64 with room).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


def sieve(limit: int) -> list[int]:
    """Primes below `limit` by Eratosthenes."""
    if limit <= 2:
        return []
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for n in range(2, int(limit**0.5) + 1):
        if flags[n]:
            flags[n * n :: n] = bytearray(len(flags[n * n :: n]))
    return [n for n in range(limit) if flags[n]]


SMALL_PRIMES = tuple(sieve(10_000))
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


def _mr_witness_passes(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = 40, seed: int = 0) -> bool:
    """Miller-Rabin: deterministic witnesses below 2**64, seeded rounds above."""
    if n < 10_000:
        return n in _SMALL_PRIME_SET
    for p in _MR_WITNESSES:
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        witnesses = _MR_WITNESSES
    else:
        rng = random.Random(seed ^ n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(rounds))
    return all(_mr_witness_passes(n, a, d, r) for a in witnesses)


def odd_primes_upto(limit: int) -> list[int]:
    """Odd primes p with 3 <= p <= limit."""
    return [p for p in sieve(limit + 1) if p >= 3]


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/pZ)^x; requires gcd(a, p) = 1."""
    a %= p
    if a == 0:
        raise ValueError(f"{a} is not a unit mod {p}")
    k, x = 1, a
    while x != 1:
        x = x * a % p
        k += 1
        if k > p:
            raise ValueError(f"{a} is not a unit mod {p}")
    return k
