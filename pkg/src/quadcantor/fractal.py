"""Geometry of the attractor S(beta, A): radius, dimension, covering bounds.

The attractor of the maps z -> (z + a)/beta, a in A, lies in the closed disk
of radius R = max|a| / (|beta| - 1).  All certificate arithmetic replaces R
by a rational over-approximation R' and the Hausdorff dimension by the
similarity dimension sigma = 2*log(#A)/log(N(beta)), so that every covering
count is the explicit integer (#A)^k with k decided by the exact comparison
N(beta)^k * delta^2 >= R'^2.  Floating point is confined to the sampling and
box-counting diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapExceededError, PreconditionError
from .exactmath import leq_zero_with_sqrt
from .quadring import FieldSpec, QuadInt


@dataclass(frozen=True)
class IFSSpec:
    """A base beta with norm >= 2 and a digit set of at least two elements."""

    field: FieldSpec
    beta: QuadInt
    digits: tuple[QuadInt, ...]


def ifs_new(beta: QuadInt, digits) -> IFSSpec:
    digits = tuple(digits)
    if beta.norm() < 2:
        raise PreconditionError("|beta| > 1 is required (norm at least 2)")
    if len(digits) < 2:
        raise PreconditionError("need at least two digits")
    if len(set(digits)) != len(digits):
        raise PreconditionError("digits must be pairwise distinct")
    field = beta.field
    for a in digits:
        if a.field != field:
            raise PreconditionError("digits must lie in beta's field")
    return IFSSpec(field=field, beta=beta, digits=digits)


@dataclass(frozen=True)
class CoveringConstants:
    """Explicit constants behind the covering chain for one spec."""

    radius_sq_bound: Fraction
    sigma: float
    digit_count: int
    beta_norm: int

    def c1_closed_form(self, u_norm: int) -> float:
        """(3 |beta| R' sqrt(u_norm))^sigma, a float upper-bound diagnostic."""
        return float(9 * self.beta_norm * self.radius_sq_bound * u_norm) ** (
            self.sigma / 2
        )


def _radius_reached(q: Fraction, max_digit_norm: int, beta_norm: int) -> bool:
    # q >= sqrt(M)/(sqrt(B)-1)  <=>  (M - q^2(B+1)) + 2 q^2 sqrt(B) <= 0
    a = Fraction(max_digit_norm) - q * q * (beta_norm + 1)
    b = 2 * q * q
    return leq_zero_with_sqrt(a, b, beta_norm)


@lru_cache(maxsize=None)
def bounding_radius_sq(spec: IFSSpec) -> Fraction:
    """R'^2 for the least rational R' >= R with denominator at most 64."""
    m = max(a.norm() for a in spec.digits)
    b = spec.beta.norm()
    hint = math.sqrt(m) / (math.sqrt(b) - 1)
    best: Fraction | None = None
    for den in range(1, 65):
        num = max(0, int(hint * den) - 2)
        while not _radius_reached(Fraction(num, den), m, b):
            num += 1
        while num > 0 and _radius_reached(Fraction(num - 1, den), m, b):
            num -= 1
        q = Fraction(num, den)
        if best is None or q < best:
            best = q
    assert best is not None
    return best * best


def similarity_dimension(spec: IFSSpec) -> float:
    """sigma = 2 log(#A) / log(N(beta)); upper bound for dim_H in general."""
    return 2.0 * math.log(len(spec.digits)) / math.log(spec.beta.norm())


def covering_constants(spec: IFSSpec) -> CoveringConstants:
    return CoveringConstants(
        radius_sq_bound=bounding_radius_sq(spec),
        sigma=similarity_dimension(spec),
        digit_count=len(spec.digits),
        beta_norm=spec.beta.norm(),
    )


def _covering_exponent(spec: IFSSpec, delta_sq: Fraction) -> int:
    """Least k with N(beta)^k * delta^2 >= R'^2, decided exactly."""
    r2 = bounding_radius_sq(spec)
    b = spec.beta.norm()
    k = 0
    scale = Fraction(1)
    while scale * delta_sq < r2:
        scale *= b
        k += 1
    return k


def covering_bound(spec: IFSSpec, delta: Fraction | int) -> int:
    """Upper bound (#A)^k on the number of delta-balls needed to cover S."""
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    return len(spec.digits) ** _covering_exponent(spec, delta * delta)


def period_bound(spec: IFSSpec, u_norm: int) -> int:
    """State-count bound for points with denominator of norm u_norm.

    This is the covering bound at radius 1/(3 sqrt(u_norm)): points of the
    orbit lattice are 1/|u|-separated, so each ball holds at most one.
    """
    if u_norm < 1:
        raise ValueError("u_norm must be a positive integer")
    return len(spec.digits) ** _covering_exponent(spec, Fraction(1, 9 * u_norm))


def sample_points(spec: IFSSpec, depth: int, cap: int = 1 << 20) -> np.ndarray:
    """All (#A)^depth partial sums sum_{j<=depth} a_j beta^-j as complexes."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    count = len(spec.digits) ** depth
    if count > cap:
        raise CapExceededError(
            f"sample size {count} exceeds cap {cap}", estimate=count, cap=cap
        )
    bz = spec.beta.to_complex()
    digs = np.array([a.to_complex() for a in spec.digits])
    z = np.zeros(1, dtype=complex)
    for _ in range(depth):
        z = ((z[None, :] + digs[:, None]) / bz).reshape(-1)
    return z


@dataclass(frozen=True)
class BoxDimEstimate:
    dimension: float
    counts: tuple[tuple[int, float, int], ...]  # (depth, delta, boxes)


def box_dim_estimate(spec: IFSSpec, depths, cap: int = 1 << 20) -> BoxDimEstimate:
    """Least-squares slope of log N_delta against -log delta; diagnostic only."""
    depths = list(depths)
    if len(depths) < 2:
        raise ValueError("need at least two depths for a slope")
    if sorted(depths) != depths:
        raise ValueError("depths must be ascending")
    abs_beta = math.sqrt(spec.beta.norm())
    rows = []
    for depth in depths:
        pts = sample_points(spec, depth, cap=cap)
        delta = abs_beta**-depth
        cells = np.unique(
            np.stack(
                [np.floor(pts.real / delta), np.floor(pts.imag / delta)], axis=1
            ),
            axis=0,
        )
        rows.append((depth, delta, len(cells)))
    xs = np.array([-math.log(delta) for _, delta, _ in rows])
    ys = np.array([math.log(n) for _, _, n in rows])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return BoxDimEstimate(dimension=slope, counts=tuple(rows))
