"""Identity suites behind the `verify` subcommand: each check re-derives one
of the library's guarantees at desk scale and reports pass/fail."""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import combinatorics, cyclotomic, spectral
from . import lucas as _lucas_pkg_attr  # noqa: F401
from . import lucas
from .fractal import FractalProfile, expansion as fractal_expansion
from .primes import multiplicative_order, odd_primes_upto
from .sequences import (
    PLUS_PLUS_MINUS,
    THUE_MORSE,
    MultiplicativeSequence,
    build_twist,
    closed_form_partial_sum,
    naive_partial_sum,
    rarefied_sum,
    rarefied_sum_via_twists,
    thue_morse_fast,
)

DEFAULT_SEED = 20260810
SUITE_NAMES = ("sequences", "fractal", "spectral", "combinatorics", "cyclotomic", "lucas")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _random_sequence(rng: random.Random) -> MultiplicativeSequence:
    base = rng.randint(2, 6)
    weights = [1 + 0j]
    for _ in range(base - 1):
        weights.append(cmath.exp(2j * math.pi * rng.random()))
    return MultiplicativeSequence(base, tuple(weights))


def _isclose(a: complex, b: complex, rel: float, abs_tol: float) -> bool:
    return cmath.isclose(a, b, rel_tol=rel, abs_tol=abs_tol)


def sequences_suite(pmax: int = 7, seed: int = DEFAULT_SEED, cases: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []

    bad = 0
    for _ in range(cases):
        seq = rng.choice([THUE_MORSE, PLUS_PLUS_MINUS, _random_sequence(rng)])
        n = rng.randint(1, 100_000)
        if not _isclose(closed_form_partial_sum(seq, n), naive_partial_sum(seq, n), 1e-9, 1e-9):
            bad += 1
    results.append(
        CheckResult("sequences", "closed form vs naive oracle", bad == 0, f"{cases} cases")
    )

    mismatch = sum(
        1 for n in range(1 << 16) if thue_morse_fast(n) != int(THUE_MORSE.term(n).real)
    )
    results.append(
        CheckResult("sequences", "digit-parity kernel vs term", mismatch == 0, "n < 2^16")
    )

    ok = True
    for _ in range(cases):
        seq = _random_sequence(rng)
        k = rng.randint(1, 6)
        a = rng.randint(0, 50)
        c = rng.randint(0, seq.base**k - 1)
        lhs = seq.term(a * seq.base**k + c)
        rhs = seq.term(a * seq.base**k) * seq.term(c)
        ok = ok and _isclose(lhs, rhs, 1e-12, 1e-12)
    results.append(CheckResult("sequences", "b-multiplicativity", ok, f"{cases} cases"))

    ok = True
    for p in odd_primes_upto(pmax):
        for t in (THUE_MORSE, PLUS_PLUS_MINUS):
            if t.base % p == 0:
                continue
            n = rng.randint(1, 2000)
            ok = ok and abs(rarefied_sum_via_twists(t, p, n) - rarefied_sum(t, p, n)) < 1e-6
    results.append(CheckResult("sequences", "rarefied sum via twists", ok, f"p <= {pmax}"))
    return results


def fractal_suite(seed: int = DEFAULT_SEED, cases: int = 25) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    profiles = [
        FractalProfile(MultiplicativeSequence(2, (1, 1j))),
        FractalProfile(build_twist(THUE_MORSE, 3, 1)),
    ]

    ok = True
    for profile in profiles:
        growth = profile.seq.digit_sums.total
        for _ in range(cases):
            x = Fraction(rng.randint(1, 6_400_000), 64_000)
            ok = ok and _isclose(
                profile.sum_at(profile.seq.base * x), growth * profile.sum_at(x), 1e-9, 1e-9
            )
    results.append(CheckResult("fractal", "scaling psi(bx) = d(b) psi(x)", ok, f"{cases} x per profile"))

    ok = True
    for profile in profiles:
        for _ in range(cases):
            y = rng.uniform(-1.5, 1.5)
            ok = ok and abs(profile.profile_at(y + 1) - profile.profile_at(y)) < 1e-8
    results.append(CheckResult("fractal", "profile periodicity", ok, f"{cases} y per profile"))

    profile = profiles[0]
    quotients = profile.difference_quotient_probe(Fraction(1, 3), 8)
    increasing = all(b > a for a, b in zip(quotients[2:], quotients[3:]))
    results.append(
        CheckResult("fractal", "difference quotients diverge", profile.quotients_diverge and increasing)
    )

    ok = True
    for _ in range(10):
        x = Fraction(2 * rng.randint(1, 127) + 1, 2 ** rng.randint(1, 6))
        ints, fracs = fractal_expansion(x, 2, profile.truncation_depth)
        if not any(fracs):
            continue
        terminating = profile.evaluate_on_expansion(ints, fracs)
        alt = list(fracs)
        last = max(i for i, c in enumerate(alt) if c)
        alt[last] -= 1
        alt = alt[: last + 1] + [1] * (len(fracs) - last - 1)
        repeating = profile.evaluate_on_expansion(ints, alt)
        ok = ok and abs(terminating - repeating) < 100 * profile.tail_tolerance
    results.append(CheckResult("fractal", "two-expansion consistency", ok, "dyadic rationals"))
    return results


def spectral_suite(pmax: int = 97) -> list[CheckResult]:
    results = []

    ok = True
    for p in odd_primes_upto(13):
        closed = spectral.eigenvalues_of_m(p)
        dense = np.linalg.eigvals(spectral.dense_m(p).astype(float))
        ok = ok and _multisets_match(closed, list(dense), 1e-8)
    results.append(CheckResult("spectral", "circulant vs dense eigenvalues", ok, "p <= 13"))

    ok = True
    for p in odd_primes_upto(pmax):
        s = multiplicative_order(2, p)
        eig = spectral.eigenvalues_of_m(p)
        log_product = sum(math.log(abs(v)) for v in eig[1:])
        ok = ok and abs(log_product - s * math.log(p)) < 1e-6
        if s % 2 == 0:
            ok = ok and all(abs(v.imag) < 1e-6 * abs(v) and v.real > 0 for v in eig[1:])
        else:
            ok = ok and all(abs(v.real) < 1e-6 * abs(v) for v in eig[1:])
    results.append(
        CheckResult("spectral", "eigenvalue product p^s and parity dichotomy", ok, f"p <= {pmax}")
    )

    ok = all(spectral.spectral_report(p).r != 2 for p in odd_primes_upto(pmax))
    results.append(CheckResult("spectral", "realness index never 2", ok, f"p <= {pmax}"))
    return results


def _multisets_match(left: list[complex], right: list[complex], tol: float) -> bool:
    if len(left) != len(right):
        return False
    remaining = list(right)
    for value in left:
        best = min(range(len(remaining)), key=lambda k: abs(remaining[k] - value))
        if abs(remaining[best] - value) > tol:
            return False
        remaining.pop(best)
    return True


def combinatorics_suite(pmax: int = 13, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []

    ok = True
    for p in odd_primes_upto(pmax):
        for n in range(p):
            ok = ok and combinatorics.subset_count(0, n, p) - combinatorics.subset_count(
                1, n, p
            ) == (-1) ** n
    results.append(CheckResult("combinatorics", "subset-count difference (-1)^n", ok, f"p <= {pmax}"))

    ok = True
    for p in odd_primes_upto(min(pmax, 11)):
        for n in range(p):
            a0 = combinatorics.subset_count(0, n, p)
            a1 = combinatorics.subset_count(1, n, p)
            ok = ok and a0 == combinatorics.subset_count(0, p - 1 - n, p)
            ok = ok and a1 == combinatorics.subset_count(1, p - 1 - n, p)
            ok = ok and all(combinatorics.subset_count(i, n, p) == a1 for i in range(2, p))
    results.append(
        CheckResult("combinatorics", "complement symmetry and equidistribution", ok, "p <= 11")
    )

    ok = True
    for n in range(1, 8):
        for part in combinatorics.enumerate_partitions(n):
            ok = ok and combinatorics.mobius(part) == combinatorics.mobius_product_formula(part)
        ok = ok and combinatorics.mobius_inversion_difference(n) == (-1) ** n * math.factorial(n)
    results.append(CheckResult("combinatorics", "Mobius recursion vs product formula", ok, "n <= 7"))

    ok = True
    for coeffs in _all_patterns(4):
        form = combinatorics.LinearForm(5, coeffs)
        ok = ok and combinatorics.linear_form_difference(
            form
        ) == combinatorics.brute_linear_form_difference(form)
    for _ in range(200):
        form = combinatorics.LinearForm(7, tuple(rng.randint(0, 2) for _ in range(6)))
        ok = ok and combinatorics.linear_form_difference(
            form
        ) == combinatorics.brute_linear_form_difference(form)
    results.append(
        CheckResult("combinatorics", "linear-form closed form vs permutations", ok, "p = 5, 7")
    )
    return results


def _all_patterns(length: int):
    total = 3**length
    for code in range(total):
        pattern = []
        for _ in range(length):
            code, digit = divmod(code, 3)
            pattern.append(digit)
        yield tuple(pattern)


def cyclotomic_suite(pmax: int = 31) -> list[CheckResult]:
    results = []

    ok = True
    for p in odd_primes_upto(pmax):
        expansion = cyclotomic.product_over_set(p, cyclotomic.ONE_MINUS_T, range(1, p))
        expected = (p - 1,) + (-1,) * (p - 1)
        ok = ok and expansion.coeffs == expected
        ok = ok and cyclotomic.norm_from_expansion(expansion) == p
    results.append(CheckResult("cyclotomic", "full product of 1 - T^j", ok, f"p <= {pmax}"))

    ok = True
    for p in (7, 11, 13):
        system = cyclotomic.CosetSystem.squares(p)
        parts = cyclotomic.coset_products(system, cyclotomic.ONE_MINUS_T)
        merged = parts[0]
        for part in parts[1:]:
            merged = merged * part
        full = cyclotomic.product_over_set(p, cyclotomic.ONE_MINUS_T, range(1, p))
        ok = ok and merged.coeffs == full.coeffs
    results.append(CheckResult("cyclotomic", "norm multiplicativity over cosets", ok, "p = 7, 11, 13"))

    ok = True
    for base, p, seq in ((2, 3, THUE_MORSE), (2, 5, THUE_MORSE), (2, 7, THUE_MORSE),
                         (3, 5, PLUS_PLUS_MINUS), (3, 7, PLUS_PLUS_MINUS)):
        support = cyclotomic.support_from_coefficients(
            [int(w.real) for w in seq.weights]
        )
        system = cyclotomic.CosetSystem.from_generators(p, (base,))
        product = cyclotomic.product_over_set(p, support, system.gamma)
        twisted = build_twist(seq, p, 1)
        ok = ok and abs(
            twisted.digit_sums.total - cyclotomic.evaluate_numeric(product, 1)
        ) < 1e-6
    results.append(CheckResult("cyclotomic", "twist growth constant vs coset product", ok))

    ok = True
    for p in (5, 7, 13, 17):
        system = cyclotomic.CosetSystem.squares(p)
        for element in cyclotomic.coset_products(system, cyclotomic.ONE_MINUS_T):
            value = cyclotomic.evaluate_numeric(element, 1)
            if len(system.gamma) % 2 == 0:
                ok = ok and abs(value.imag) < 1e-6 * abs(value) and value.real > 0
            else:
                ok = ok and abs(value.real) < 1e-6 * abs(value)
    results.append(CheckResult("cyclotomic", "even/odd subgroup reality dichotomy", ok))

    ok = True
    for p in (3, 5, 7, 11, 13, 17):
        system = cyclotomic.CosetSystem.from_generators(p, (2,))
        eig = spectral.eigenvalues_of_m(p)
        for coset, element in zip(system.cosets, cyclotomic.coset_products(system, cyclotomic.ONE_MINUS_T)):
            value = cyclotomic.evaluate_numeric(element, 1)
            ok = ok and all(abs(eig[j] - value) < 1e-6 for j in coset)
    results.append(CheckResult("cyclotomic", "eigenvalues match coset products", ok))
    return results


def lucas_suite(pmax: int = 31, nmax: int = 45, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []

    ok = all(lucas_mod.domino_circle(n) == lucas_mod.lucas(n) for n in range(3, 19))
    ok = ok and all(lucas_mod.domino_interval(n) == lucas_mod.fibonacci(n) for n in range(2, 19))
    ok = ok and all(
        lucas_mod.domino_circle(n) == lucas_mod.fibonacci(n) + 2 * lucas_mod.fibonacci(n - 1)
        for n in range(3, 19)
    )
    results.append(CheckResult("lucas", "domino counts match L_n and F_n", ok, "n <= 18"))

    ok = all(lucas_mod.lucas_identity_check(n) for n in range(1, 61))
    ok = ok and all((lucas_mod.lucas(n) % 2 == 0) == (n % 3 == 0) for n in range(61))
    results.append(CheckResult("lucas", "index identities and parity rule", ok, "n <= 60"))

    ok = True
    for p in odd_primes_upto(pmax):
        if p < 5:
            continue
        expansion = cyclotomic.product_over_set(p, cyclotomic.ONE_PLUS_T_MINUS_T2, range(1, p))
        norm = cyclotomic.norm_from_expansion(expansion)
        ok = ok and norm == lucas_mod.binomials_formula(p) == lucas_mod.lucas(p)
    results.append(CheckResult("lucas", "norm = binomial sum = L_p", ok, f"5 <= p <= {pmax}"))

    ok = True
    for n in range(3, nmax + 1, 2):
        report = lucas_mod.factor_congruence_check(n, seed=seed)
        ok = ok and report.status is lucas_mod.Verdict.PASS
    results.append(CheckResult("lucas", "factor congruences mod 5", ok, f"odd n <= {nmax}"))
    return results


def run_suite(name: str, pmax: int | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if name == "sequences":
        return sequences_suite(pmax or 7, seed)
    if name == "fractal":
        return fractal_suite(seed)
    if name == "spectral":
        return spectral_suite(pmax or 97)
    if name == "combinatorics":
        return combinatorics_suite(pmax or 13, seed)
    if name == "cyclotomic":
        return cyclotomic_suite(pmax or 31)
    if name == "lucas":
        return lucas_suite(pmax or 31, seed=seed)
    raise ValueError(f"unknown suite {name!r}")


def run_suites(names, pmax: int | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []
    for name in names:
        results.extend(run_suite(name, pmax=pmax, seed=seed))
    return results
