"""Subset-sum counts over F_p^x, the partition lattice with its Mobius function,
and the coefficiented linear-form counts behind the norm expansions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .primes import is_prime
from .sequences import OracleBoundError

SUBSET_ENUM_BOUND = 10**7
PARTITION_LIMIT = 10
INVERSION_LIMIT = 9
PERMUTATION_ORACLE_LIMIT = 9


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def subset_count(residue: int, size: int, p: int, bound: int = SUBSET_ENUM_BOUND) -> int:
    """Number of size-element subsets of F_p^x summing to `residue` mod p (exhaustive)."""
    _check_odd_prime(p)
    if not 0 <= size <= p - 1:
        raise ValueError(f"subset size must lie in 0..{p - 1}")
    if math.comb(p - 1, size) > bound:
        raise OracleBoundError(f"C({p - 1},{size}) subsets exceed bound {bound}")
    residue %= p
    return sum(1 for subset in combinations(range(1, p), size) if sum(subset) % p == residue)


def sequence_count_closed_form(residue: int, length: int, p: int) -> int:
    """Closed form for sequences over F_p^x with coefficiented sum 0 or 1.

    Independent of the (nonzero) coefficients; the 0-count minus the 1-count
    is (-1)^length.
    """
    _check_odd_prime(p)
    if residue not in (0, 1):
        raise ValueError("closed form covers residues 0 and 1")
    if length < 0:
        raise ValueError("length must be nonnegative")
    power = (p - 1) ** length
    if length % 2 == 0:
        return (power + p - 1) // p if residue == 0 else (power - 1) // p
    return (power - p + 1) // p if residue == 0 else (power + 1) // p


@dataclass(frozen=True)
class Partition:
    """A partition of {1..n} in canonical block order (size descending, then minimum)."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda b: (-len(b), b[0])))
        seen: set[int] = set()
        for block in blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if seen & set(block):
                raise ValueError("blocks must be pairwise disjoint")
            seen.update(block)
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks must cover 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


@lru_cache(maxsize=None)
def _index_partitions(size: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All set partitions of range(size), as index tuples."""
    if size == 0:
        return ((),)
    out = []
    first = size - 1
    for rest in _index_partitions(size - 1):
        out.append(rest + ((first,),))
        for i in range(len(rest)):
            out.append(rest[:i] + (rest[i] + (first,),) + rest[i + 1 :])
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of {1..n}; bounded by the Bell number at n = 10."""
    if not 1 <= n <= PARTITION_LIMIT:
        raise OracleBoundError(f"partition enumeration supports 1 <= n <= {PARTITION_LIMIT}")
    return [
        Partition(n, tuple(tuple(i + 1 for i in block) for block in blocks))
        for blocks in _index_partitions(n)
    ]


def _refinement_types(sizes: tuple[int, ...]):
    """Block-size types of every partition refining a partition of type `sizes`."""
    per_block = [
        [tuple(len(b) for b in blocks) for blocks in _index_partitions(size)] for size in sizes
    ]
    for choice in product(*per_block):
        merged: list[int] = []
        for sizes_part in choice:
            merged.extend(sizes_part)
        yield tuple(sorted(merged, reverse=True))


@lru_cache(maxsize=None)
def _mobius_of_type(sizes: tuple[int, ...]) -> int:
    # mu(bottom, x) = -sum over strict refinements y < x; the value only
    # depends on the block-size type, so refinements are tallied per type.
    if all(size == 1 for size in sizes):
        return 1
    total = 0
    for refined in _refinement_types(sizes):
        if refined != sizes:
            total += _mobius_of_type(refined)
    return -total


def mobius(part: Partition) -> int:
    """Mobius value mu(bottom, part) of the partition lattice, by the recursion."""
    return _mobius_of_type(tuple(sorted(part.block_sizes, reverse=True)))


def mobius_product_formula(part: Partition) -> int:
    """The factorial product formula for the same Mobius value."""
    value = 1
    for size in part.block_sizes:
        value *= (-1) ** (size - 1) * math.factorial(size - 1)
    return value


def mobius_inversion_difference(n: int) -> int:
    """sum over Pi_n of (-1)^(block count) * mu; equals (-1)^n * n!."""
    if not 1 <= n <= INVERSION_LIMIT:
        raise OracleBoundError(f"inversion sum supports 1 <= n <= {INVERSION_LIMIT}")
    return sum((-1) ** part.block_count * mobius(part) for part in enumerate_partitions(n))


@dataclass(frozen=True)
class LinearForm:
    """A form f_1*x_1 + ... + f_{p-1}*x_{p-1} with coefficients in {0, 1, 2}."""

    p: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        _check_odd_prime(self.p)
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) != self.p - 1:
            raise ValueError(f"need exactly {self.p - 1} coefficients")
        if any(c not in (0, 1, 2) for c in coeffs):
            raise ValueError("coefficients must be 0, 1 or 2")
        object.__setattr__(self, "coefficients", coeffs)

    def count(self, value: int) -> int:
        return sum(1 for c in self.coefficients if c == value)

    @property
    def slot_symmetry(self) -> int:
        """Permutations of equal-coefficient slots identified by the A-counts."""
        return math.factorial(self.count(0)) * math.factorial(self.count(1)) * math.factorial(
            self.count(2)
        )


def linear_form_difference(form: LinearForm) -> int:
    """A_0(f,p) - A_1(f,p) in closed form.

    The small-coefficient-sum branch requires the strict inequality
    n1 + 2*n2 < p; otherwise the complementary form 2 - f applies.
    """
    n0, n1, n2 = form.count(0), form.count(1), form.count(2)
    if n1 + 2 * n2 < form.p:
        return (-1) ** (n1 + n2) * math.comb(n1 + n2, n1)
    return (-1) ** (n0 + n1) * math.comb(n0 + n1, n0)


def brute_linear_form_counts(form: LinearForm) -> tuple[list[int], list[int]]:
    """(B_i, A_i) for i = 0..p-1 by enumerating all permutations of F_p^x.

    B_i counts permutations with f(x) = i; A_i = B_i / (n0! n1! n2!) after
    identifying permutations of equal-coefficient slots.
    """
    p = form.p
    if p > PERMUTATION_ORACLE_LIMIT:
        raise OracleBoundError(f"permutation oracle supports p <= {PERMUTATION_ORACLE_LIMIT}")
    sequence_counts = [0] * p
    coeffs = form.coefficients
    for perm in permutations(range(1, p)):
        value = sum(c * x for c, x in zip(coeffs, perm)) % p
        sequence_counts[value] += 1
    symmetry = form.slot_symmetry
    class_counts = []
    for count in sequence_counts:
        if count % symmetry:
            raise ArithmeticError("sequence counts not divisible by the slot symmetry")
        class_counts.append(count // symmetry)
    return sequence_counts, class_counts


def brute_linear_form_difference(form: LinearForm) -> int:
    """Exhaustive oracle for linear_form_difference (p <= 9)."""
    _, class_counts = brute_linear_form_counts(form)
    return class_counts[0] - class_counts[1]


@dataclass(frozen=True)
class AlternatingSumIdentity:
    sum_side: int
    closed_side: int

    @property
    def equal(self) -> bool:
        return self.sum_side == self.closed_side


def binomial_alternating_sum(m: int, n: int) -> AlternatingSumIdentity:
    """Both sides of sum_{k<=m} (-1)^(k+n) C(n,k) = (-1)^(m+n) C(n-1,m)."""
    if not (n >= m >= 0 and n >= 1):
        raise ValueError("need n >= m >= 0 and n >= 1")
    sum_side = sum((-1) ** (k + n) * math.comb(n, k) for k in range(m + 1))
    closed_side = (-1) ** (m + n) * math.comb(n - 1, m)
    return AlternatingSumIdentity(sum_side, closed_side)
