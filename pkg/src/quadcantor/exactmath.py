"""Exact decision helpers for quantities involving one square root or log2.

Predicates of the form A + B*sqrt(n) <= 0 with rational A, B are decided by
sign analysis and squaring, never by floating point.  Logarithm comparisons
needed by the certificate search are made rigorous with dyadic interval
enclosures of log2 of a rational: directed-rounding mantissa squaring gives
a provable [lo, hi] bracket whose width halves per extracted bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def leq_zero_with_sqrt(a: Fraction, b: Fraction, n: int) -> bool:
    """Whether a + b*sqrt(n) <= 0, exactly (n a nonnegative integer)."""
    if n < 0:
        raise ValueError("sqrt argument must be nonnegative")
    if b == 0:
        return a <= 0
    if b > 0:
        return a <= 0 and b * b * n <= a * a
    return a <= 0 or a * a <= b * b * n


def floor_add_sqrt(a: Fraction, b: Fraction) -> int:
    """floor(a + sqrt(b)) for rational a and rational b >= 0, exactly."""
    if b < 0:
        raise ValueError("sqrt argument must be nonnegative")
    # integer hint within a couple of the truth, then exact fix-up
    hint = a.numerator // a.denominator + math.isqrt(b.numerator // b.denominator)

    def le_exact(m: int) -> bool:
        # m <= a + sqrt(b)
        t = Fraction(m) - a
        if t <= 0:
            return True
        return t * t <= b

    m = hint
    while not le_exact(m):
        m -= 1
    while le_exact(m + 1):
        m += 1
    return m


def ceil_sub_sqrt(a: Fraction, b: Fraction) -> int:
    """ceil(a - sqrt(b)) for rational a and rational b >= 0, exactly."""
    return -floor_add_sqrt(-a, b)


@dataclass(frozen=True)
class Interval:
    """A closed rational interval [lo, hi] certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __add__(self, other: Interval) -> Interval:
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: Interval) -> Interval:
        prods = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(prods), max(prods))

    def __sub__(self, other: Interval) -> Interval:
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def scale(self, k: int) -> Interval:
        if k >= 0:
            return Interval(self.lo * k, self.hi * k)
        return Interval(self.hi * k, self.lo * k)

    @classmethod
    def exact(cls, v) -> Interval:
        f = Fraction(v)
        return cls(f, f)


def _floor_log2(p: int, q: int) -> int:
    """floor(log2(p/q)) for positive integers, exactly."""
    e = p.bit_length() - q.bit_length()
    # correct e so that q*2^e <= p < q*2^(e+1)
    def le_pow2(k: int) -> bool:  # 2^k <= p/q ?
        return (q << k) <= p if k >= 0 else q <= (p << -k)

    while not le_pow2(e):
        e -= 1
    while le_pow2(e + 1):
        e += 1
    return e


def log2_interval(r: Fraction, prec_bits: int = 64) -> Interval:
    """Rigorous enclosure of log2(r) for rational r > 0.

    Powers of two come back as a degenerate (exact) interval; otherwise the
    width is at most 2^(1-prec_bits) plus directed-rounding slack already
    absorbed into the bracket.
    """
    p, q = r.numerator, r.denominator
    if p <= 0:
        raise ValueError("log2 argument must be positive")
    e = _floor_log2(p, q)
    exact_pow2 = (q << e) == p if e >= 0 else (p << -e) == q
    if exact_pow2:
        return Interval(Fraction(e), Fraction(e))

    guard = 16
    s = prec_bits + guard
    # fixed-point mantissa m/2^s for p/(q*2^e) in [1, 2)
    if e >= 0:
        num, den = p << s, q << e
    else:
        num, den = p << (s - e), q
    m_lo = num // den
    m_hi = m_lo + (1 if num % den else 0)

    two = 2 << s
    out = 0
    for i in range(1, prec_bits + 1):
        m_lo = (m_lo * m_lo) >> s
        m_hi = -((-(m_hi * m_hi)) >> s)
        out <<= 1
        if m_lo >= two:
            out |= 1
            m_lo >>= 1
            m_hi = -((-m_hi) >> 1)
        elif m_hi < two:
            pass
        else:
            # bracket straddles 2: residual log2 lies in [0, 2)
            return Interval(
                Fraction(e) + Fraction(out, 1 << i),
                Fraction(e) + Fraction(out + 2, 1 << i),
            )
    return Interval(
        Fraction(e) + Fraction(out, 1 << prec_bits),
        Fraction(e) + Fraction(out + 1, 1 << prec_bits),
    )
