"""Multiplicative orders modulo ideal powers and their stabilization law.

Once the order m modulo p^(e+1) and its stabilization level n0 (the exact
prime-power valuation of beta^m - 1) are known, the order modulo every
higher power p^(n0+n) is the closed form m * p^ceil(n/e).  That closed form
also yields a fully explicit positive constant c2 = 1 / prod(p_j^{n0_j})
bounding the order modulo any product of powers of the given primes from
below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .ideals import (
    IdealHNF,
    PrimeIdeal,
    ideal_from_generators,
    ideal_pow,
    reduce_mod,
    valuation,
)
from .quadring import QuadInt


@dataclass(frozen=True)
class StabilizationData:
    """Order m modulo prime^n0 together with n0 = v(beta^m - 1)."""

    prime: PrimeIdeal
    beta: QuadInt
    n0: int
    m: int


@dataclass(frozen=True)
class LowerBoundSpec:
    """Explicit constant c2 = 1/prod(p_j^m_j) for the order lower bound."""

    primes: tuple[PrimeIdeal, ...]
    m_exponents: tuple[int, ...]
    c2: Fraction


def _check_invertible(beta: QuadInt, ideal: IdealHNF) -> None:
    gens = [beta, beta * ideal.field.omega]
    rows_ideal = ideal.basis()
    combined = ideal_from_generators([*gens, *rows_ideal])
    if not combined.is_unit():
        raise PreconditionError(f"{beta} is not a unit modulo {ideal}")


def ord_mod(beta: QuadInt, ideal: IdealHNF) -> int:
    """Least n >= 1 with beta^n = 1 (mod ideal), by sequential powering."""
    _check_invertible(beta, ideal)
    a, b, c = ideal.a, ideal.b, ideal.c
    f = ideal.field
    br = reduce_mod(beta, ideal)
    bx, by = br.x, br.y
    one = reduce_mod(f.one, ideal)
    ox, oy = one.x, one.y
    x, y = bx, by
    n = 1
    cap = ideal.norm + 1
    if f.half_basis:
        t = (f.d - 1) // 4
        while (x, y) != (ox, oy):
            x, y = x * bx + t * y * by, x * by + y * bx + y * by
            q, y = divmod(y, c)
            x = (x - q * b) % a
            n += 1
            if n > cap:
                raise ArithmeticError("order search exceeded the group size")
    else:
        d = f.d
        while (x, y) != (ox, oy):
            x, y = x * bx + d * y * by, x * by + y * bx
            q, y = divmod(y, c)
            x = (x - q * b) % a
            n += 1
            if n > cap:
                raise ArithmeticError("order search exceeded the group size")
    return n


def stabilization(beta: QuadInt, prime: PrimeIdeal) -> StabilizationData:
    """m = ord modulo prime^(e+1) and n0 = v(beta^m - 1) at that prime."""
    if prime.contains(beta):
        raise PreconditionError(f"{beta} lies in the prime {prime}")
    if beta.norm() <= 1:
        raise PreconditionError(f"{beta} must satisfy |beta| > 1")
    m = ord_mod(beta, ideal_pow(prime.hnf, prime.e + 1))
    n0 = valuation(beta**m - 1, prime)
    if n0 < prime.e + 1:
        raise ArithmeticError("stabilization level below e+1; internal error")
    return StabilizationData(prime=prime, beta=beta, n0=n0, m=m)


def ord_prime_power(beta: QuadInt, prime: PrimeIdeal, n: int) -> int:
    """Order of beta modulo prime^n; closed form above the stable level."""
    order, _ = ord_prime_power_detail(beta, prime, n)
    return order


def ord_prime_power_detail(
    beta: QuadInt, prime: PrimeIdeal, n: int
) -> tuple[int, StabilizationData]:
    if n < 1:
        raise ValueError("exponent must be positive")
    stab = stabilization(beta, prime)
    if n <= stab.n0:
        return ord_mod(beta, ideal_pow(prime.hnf, n)), stab
    lift = -(-(n - stab.n0) // prime.e)  # ceil((n - n0)/e)
    return stab.m * prime.p**lift, stab


def c2_constant(beta: QuadInt, primes: list[PrimeIdeal] | tuple[PrimeIdeal, ...]) -> LowerBoundSpec:
    """Explicit lower-bound constant over the given distinct primes."""
    primes = tuple(primes)
    if not primes:
        raise PreconditionError("need at least one prime")
    if len(set(primes)) != len(primes):
        raise PreconditionError("primes must be distinct")
    ms = tuple(stabilization(beta, p).n0 for p in primes)
    den = math.prod(p.p**m for p, m in zip(primes, ms))
    return LowerBoundSpec(primes=primes, m_exponents=ms, c2=Fraction(1, den))


def order_lower_bound(spec: LowerBoundSpec, exponents: tuple[int, ...]) -> Fraction:
    """Exact value c2 * prod_p p^max{ceil(n_j/e_j) : p_j = p} for the tuple."""
    if len(exponents) != len(spec.primes):
        raise ValueError("tuple length must match the prime list")
    if any(n < 0 for n in exponents):
        raise ValueError("exponents must be nonnegative")
    if not any(exponents):
        raise PreconditionError("the zero tuple has no order bound")
    by_p: dict[int, int] = {}
    for prime, n in zip(spec.primes, exponents):
        lifted = -(-n // prime.e)  # ceil(n/e)
        by_p[prime.p] = max(by_p.get(prime.p, 0), lifted)
    return spec.c2 * math.prod(p**m for p, m in by_p.items())
