"""Exact rational helpers: generalized binomials and certified powers of two.

All values are :class:`fractions.Fraction`. Irrational quantities of the
form ``2**s`` are never evaluated in floating point; they are bracketed by
a rational interval from an integer root, and the interval is narrowed
until a strict comparison resolves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import ArgumentError

Rational = Fraction

DEFAULT_MAX_BITS = 4096


def as_rational(value) -> Fraction:
    """Parse ``3``, ``"3/4"``, ``Fraction`` or an int-valued float into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise ArgumentError(f"cannot interpret {value!r} as an exact rational")


def gen_binomial(s: Fraction, i: int) -> Fraction:
    """``s (s-1) ... (s-i+1) / i!`` for rational ``s``."""
    if i < 0:
        raise ArgumentError(f"binomial index must be >= 0, got {i}")
    s = as_rational(s)
    out = Fraction(1)
    for j in range(i):
        out = out * (s - j) / (j + 1)
    return out


def binomial_partial_sum(s: Fraction, up_to: int) -> Fraction:
    if up_to < 0:
        raise ArgumentError(f"upper index must be >= 0, got {up_to}")
    s = as_rational(s)
    total = Fraction(0)
    term = Fraction(1)
    for i in range(up_to + 1):
        total += term
        term = term * (s - i) / (i + 1)
    return total


def integer_root(n: int, k: int) -> int:
    """``floor(n ** (1/k))`` for integers ``n >= 0``, ``k >= 1``."""
    if n < 0 or k < 1:
        raise ArgumentError("integer_root needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def pow2_enclosure(s: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= 2**s <= hi`` with ``hi - lo <= 2**-bits``.

    ``lo == hi`` exactly when ``2**s`` is a dyadic rational at this scale.
    """
    s = as_rational(s)
    p, q = s.numerator, s.denominator
    shift = max(bits, -(p // q))
    big = 1 << (p + q * shift)
    r = integer_root(big, q)
    scale = Fraction(1, 1 << shift)
    if r**q == big:
        return r * scale, r * scale
    return r * scale, (r + 1) * scale


class Verdict(enum.Enum):
    STRICTLY_LESS = "StrictlyLess"
    NOT_LESS = "NotLess"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class BoundComparison:
    """``lhs`` against an enclosed right-hand side ``[rhs_lower, rhs_upper]``."""

    lhs: Fraction
    rhs_lower: Fraction
    rhs_upper: Fraction
    verdict: Verdict
    bits: int


def compare_below_pow2(lhs, exponent, offset=Fraction(0), max_bits: int = DEFAULT_MAX_BITS,
                       start_bits: int = 32) -> BoundComparison:
    """Decide ``lhs < 2**exponent + offset`` without rounding.

    Precision doubles from ``start_bits`` up to ``max_bits``.
    """
    lhs, exponent, offset = as_rational(lhs), as_rational(exponent), as_rational(offset)
    bits = start_bits
    while True:
        lo, hi = pow2_enclosure(exponent, bits)
        lo, hi = lo + offset, hi + offset
        if lhs < lo:
            return BoundComparison(lhs, lo, hi, Verdict.STRICTLY_LESS, bits)
        if lhs >= hi:
            return BoundComparison(lhs, lo, hi, Verdict.NOT_LESS, bits)
        if bits >= max_bits:
            return BoundComparison(lhs, lo, hi, Verdict.INCONCLUSIVE, bits)
        bits = min(2 * bits, max_bits)


def check_noninteger_lemma(s, max_bits: int = DEFAULT_MAX_BITS) -> BoundComparison:
    """Compare ``sum_{i<=floor(s)+1} C(s, i)`` against ``2**s + 1/(4(s+1))``."""
    s = as_rational(s)
    if s.denominator == 1:
        raise ArgumentError(f"s = {s} is an integer; the partial sum equals 2**s exactly there")
    if s < 1:
        raise ArgumentError(f"s must be >= 1, got {s}")
    lhs = binomial_partial_sum(s, floor(s) + 1)
    return compare_below_pow2(lhs, s, Fraction(1) / (4 * (s + 1)), max_bits=max_bits)


def rational_log2_if_power(n: int) -> int | None:
    """``k`` when ``n == 2**k``, else ``None``."""
    if n >= 1 and n & (n - 1) == 0:
        return n.bit_length() - 1
    return None
