"""Continuous self-similar extension of the partial sums and its periodic profile.

For a power-class sequence the digit decomposition of the partial sum extends
to any positive real argument via its base-b expansion; rescaling by
x^(-log d(b)/log b) yields a function of log_b x that is periodic with period
one.  Arguments are consumed exactly (rationals or digit strings) so base-b
digits are never polluted by binary floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .sequences import Growth, MultiplicativeSequence, classify, series_over_digits

DEFAULT_TAIL_TOLERANCE = 1e-12


def parse_digit_string(text: str, base: int) -> Fraction:
    """Exact value of a base-b digit string like "12.0021" (digits 0-9, a-z)."""
    text = text.strip().lower()
    if not text or text.count(".") > 1:
        raise ValueError(f"malformed digit string {text!r}")
    int_part, _, frac_part = text.partition(".")
    value = Fraction(0)
    for ch in int_part:
        value = value * base + _digit(ch, base)
    scale = Fraction(1)
    for ch in frac_part:
        scale /= base
        value += _digit(ch, base) * scale
    return value


def _digit(ch: str, base: int) -> int:
    try:
        d = int(ch, 36)
    except ValueError:
        raise ValueError(f"invalid digit {ch!r}") from None
    if d >= base:
        raise ValueError(f"digit {ch!r} out of range for base {base}")
    return d


def _as_fraction(x, base: int) -> Fraction:
    if isinstance(x, str):
        return parse_digit_string(x, base)
    return Fraction(x)


def expansion(x: Fraction, base: int, depth: int) -> tuple[list[int], list[int]]:
    """Canonical base-b digits of x > 0: integer digits (most significant first)
    and `depth` fractional digits.

    Greedy extraction yields the expansion that does not end in repeated
    (base-1) digits.
    """
    whole = int(x)
    frac = x - whole
    int_digits = []
    while whole:
        whole, c = divmod(whole, base)
        int_digits.append(c)
    int_digits.reverse()
    if not int_digits:
        int_digits = [0]
    frac_digits = []
    for _ in range(depth):
        frac *= base
        c = int(frac)
        frac -= c
        frac_digits.append(c)
    return int_digits, frac_digits


@dataclass(frozen=True)
class FractalProfile:
    """Evaluator bound to one power-class sequence and one branch of log d(b)."""

    seq: MultiplicativeSequence
    log_branch: int = 0
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE
    truncation_depth: int | None = None

    def __post_init__(self):
        if classify(self.seq).growth is not Growth.POWER:
            raise ValueError("profile requires |d(b)| > 1 (power-class sequence)")
        if self.tail_tolerance <= 0:
            raise ValueError("tail tolerance must be positive")
        if self.truncation_depth is None:
            sums = self.seq.digit_sums
            peak = max(abs(v) for v in sums.partials)
            depth = math.ceil(
                (math.log(peak) - math.log(self.tail_tolerance)) / math.log(abs(sums.total))
            )
            object.__setattr__(self, "truncation_depth", max(depth, 1))
        elif self.truncation_depth < 1:
            raise ValueError("truncation depth must be positive")

    @property
    def growth_exponent(self) -> float:
        sums = self.seq.digit_sums
        return math.log(abs(sums.total)) / math.log(self.seq.base)

    @property
    def log_growth(self) -> complex:
        """The chosen branch of log d(b): principal value + 2*pi*i*log_branch."""
        return cmath.log(self.seq.digit_sums.total) + 2j * math.pi * self.log_branch

    def evaluate_on_expansion(self, int_digits: list[int], frac_digits: list[int]) -> complex:
        positions = [(len(int_digits) - 1 - k, c) for k, c in enumerate(int_digits)]
        positions += [(-1 - k, c) for k, c in enumerate(frac_digits)]
        return series_over_digits(self.seq, positions)

    def sum_at(self, x) -> complex:
        """The self-similar summatory value at real x > 0.

        Accepts Fraction/int/float (converted exactly) or a base-b digit string.
        At integer arguments this equals the closed-form partial sum.
        """
        value = _as_fraction(x, self.seq.base)
        if value <= 0:
            raise ValueError("argument must be positive")
        int_digits, frac_digits = expansion(value, self.seq.base, self.truncation_depth)
        return self.evaluate_on_expansion(int_digits, frac_digits)

    def profile_at(self, y: float) -> complex:
        """Periodic profile F(y) = psi(b**y) * exp(-y * log d(b)); F(y+1) = F(y)."""
        x = self.seq.base**float(y)
        return self.sum_at(Fraction(x)) * cmath.exp(-y * self.log_growth)

    def sample(self, count: int) -> list[tuple[float, float, float]]:
        """count >= 2 equally spaced profile samples over one period [0, 1)."""
        if count < 2:
            raise ValueError("need at least 2 samples")
        rows = []
        for i in range(count):
            y = i / count
            value = self.profile_at(y)
            rows.append((y, value.real, value.imag))
        return rows

    @property
    def quotients_diverge(self) -> bool:
        """Whether the truncation difference quotients grow (|d(b)| < b)."""
        return abs(self.seq.digit_sums.total) < self.seq.base

    def difference_quotient_probe(self, x, depth: int) -> list[float]:
        """Magnitudes of (psi(y_k) - psi(x_k)) / (y_k - x_k) for digit truncations of x.

        x_k truncates the expansion at the k-th fractional position holding a
        digit below b-1 and y_k increments that digit; the quotients grow like
        (b/|d(b)|)^position when |d(b)| < b.
        """
        if depth < 1:
            raise ValueError("depth must be positive")
        value = _as_fraction(x, self.seq.base)
        if value <= 0:
            raise ValueError("argument must be positive")
        base = self.seq.base
        span = max(self.truncation_depth, 4 * depth)
        while True:
            int_digits, frac_digits = expansion(value, base, span)
            cut_positions = [k + 1 for k, c in enumerate(frac_digits) if c < base - 1]
            if len(cut_positions) >= depth:
                break
            span *= 2
        quotients = []
        for pos in cut_positions[:depth]:
            lower = frac_digits[:pos]
            upper = lower[:-1] + [lower[-1] + 1]
            gap = self.evaluate_on_expansion(int_digits, upper) - self.evaluate_on_expansion(
                int_digits, lower
            )
            quotients.append(abs(gap) * base**pos)
        return quotients
