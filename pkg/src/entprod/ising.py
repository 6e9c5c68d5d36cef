"""Closed-form results for the longitudinal (Ising-type) two-spin model.

The Zeeman part and the interaction part of the Hamiltonian commute, so the
evolution operator factorizes and every quantity below reduces to
trigonometry in h t and J t.  With c = cos(h t) and g = cos(J t):

    ||U_j(t)||^2   = 4 (1 + c g)              (either single-spin reduction)
    |Tr U(t)|^2    = 4 (1 + c^2 + 2 c g)
    eps(t)         = log( sqrt(1 + c^2 + 2 c g) / (1 + c g) )

eps(t) is nonnegative, vanishes at t = 0, and diverges exactly where the
denominator 1 + c g reaches zero, which happens only for the two rational
h/J families enumerated by :func:`singularity_times`.

This module deliberately avoids the generic matrix pipeline (it never touches
partial traces or eigensolvers) so that it can serve as an independent oracle
for it.  Dynamical functions take absolute time; classification output
(periods, singular times) is expressed in units of 1/J, matching the h/J
ratio they depend on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

# Denominator 1 + cos(h t) cos(J t) at or below this is treated as singular
# (the quantity is O(1)-scaled by construction, so an absolute cut is safe).
SINGULAR_DEN_TOL = 1e-12

# Rational detection of h/J: accept p/q with q <= MAX_DENOMINATOR when it
# matches within RATIONAL_TOL.  The denominator cap must stay well below
# 1/sqrt(RATIONAL_TOL), otherwise continued-fraction convergents of any
# irrational ratio would sneak under the tolerance.
RATIONAL_TOL = 1e-9
MAX_DENOMINATOR = 1000

# Diagonal generators in the up/down product basis (first spin outermost):
# _ZTOT = Sz (x) 1 + 1 (x) Sz, _ZZ2 = 2 Sz (x) Sz.
_ZTOT = np.diag(np.array([1.0, 0.0, 0.0, -1.0], dtype=np.complex128))
_ZZ2 = np.diag(np.array([0.5, -0.5, -0.5, 0.5], dtype=np.complex128))
_ZTOT.setflags(write=False)
_ZZ2.setflags(write=False)


class Periodicity(Enum):
    PERIODIC = "periodic"
    QUASI_PERIODIC = "quasi-periodic"


class SingularityFamily(Enum):
    """Which family of exceptional (h/J, t) pairs a divergence belongs to.

    ODD_MULTIPLE:  h/J = 2p/(1+2n), singular at t = (1+2n) pi / J.
    EVEN_MULTIPLE: h/J = (1+2n)/(2p), singular at t = 2p pi / J.
    """

    ODD_MULTIPLE = "odd-multiple"
    EVEN_MULTIPLE = "even-multiple"


@dataclass(frozen=True)
class PeriodicityClassification:
    """Periodic-vs-quasi-periodic verdict for the measure of one (h, J) pair.

    ``period`` (units of 1/J) is set only for the periodic kind: pi*q when the
    irreducible |h/J| = p/q has p and q both odd, 2*pi*q when one is even.
    ``period_triple`` always carries the three base periods
    (pi/|h|, 2 pi/|h+J|, 2 pi/|h-J|) in units of 1/J, with infinities where a
    denominator vanishes.
    """

    kind: Periodicity
    period_triple: tuple[float, float, float]
    period: float | None = None
    rational_form: tuple[int, int] | None = None


@dataclass(frozen=True)
class SingularitySpec:
    """One divergence of the measure: family, indices and time (units 1/J)."""

    family: SingularityFamily
    n: int
    p: int
    time: float


def ising_evolution_closed(h: float, J: float, t: float) -> np.ndarray:
    """Evolution operator of the longitudinal model from its two commuting factors.

    The Zeeman factor is 1 + Z^2 (cos(h t) - 1) + i Z sin(h t) with
    Z = Sz (x) 1 + 1 (x) Sz, the interaction factor is
    cos(J t / 2) - 2 i W sin(J t / 2) with W = 2 Sz (x) Sz; both are exact
    resummations of the exponential series and remain valid at h = 0 or J = 0.
    """
    eye = np.eye(4, dtype=np.complex128)
    zeeman = eye + (_ZTOT @ _ZTOT) * (math.cos(h * t) - 1.0) + 1j * _ZTOT * math.sin(h * t)
    half = 0.5 * J * t
    interaction = eye * math.cos(half) - 2j * _ZZ2 * math.sin(half)
    return zeeman @ interaction


def ising_partial_norm_sq(h: float, J: float, t: float) -> float:
    """Squared Hilbert-Schmidt norm of either single-spin reduction of U(t)."""
    return 4.0 * (1.0 + math.cos(h * t) * math.cos(J * t))


def ising_trace_sq(h: float, J: float, t: float) -> float:
    """|Tr U(t)|^2 in closed form."""
    c = math.cos(h * t)
    return 4.0 * (1.0 + c * c + 2.0 * c * math.cos(J * t))


def epsilon_ising(h: float, J: float, t: float, log_base: float = 2.0) -> float:
    """Production measure of U(t) in closed form; ``math.inf`` at singular points.

    Evaluated as eps = log1p((c sin(J t) / d)^2) / (2 ln base) with
    d = 1 + c cos(J t), which is algebraically identical to the norm-ratio
    form (the ratio's numerator is d^2 + c^2 sin^2(J t)) but stays accurate
    for small t, where eps is O(t^2).
    """
    c = math.cos(h * t)
    g = math.cos(J * t)
    den = 1.0 + c * g
    if den <= SINGULAR_DEN_TOL:
        return math.inf
    x = c * math.sin(J * t) / den
    return 0.5 * math.log1p(x * x) / math.log(log_base)


def epsilon_zero_field(J: float, t: float, log_base: float = 2.0) -> float:
    """Measure for h identically zero: 0.5 * log(2 / (1 + cos(J t))).

    Computed as -log|cos(J t / 2)|; diverges at t = (1 + 2n) pi / J.
    """
    half = math.cos(0.5 * J * t)
    if 2.0 * half * half <= SINGULAR_DEN_TOL:
        return math.inf
    return -math.log(abs(half)) / math.log(log_base)


def _as_fraction(
    x: float, rational_tolerance: float, max_denominator: int
) -> Fraction | None:
    frac = Fraction(x).limit_denominator(max_denominator)
    if abs(x - float(frac)) <= rational_tolerance:
        return frac
    return None


def classify_periodicity(
    h: float,
    J: float,
    rational_tolerance: float = RATIONAL_TOL,
    max_denominator: int = MAX_DENOMINATOR,
) -> PeriodicityClassification:
    """Decide whether the measure is periodic (rational |h/J|) or quasi-periodic.

    The measure depends on the signs of neither h nor J, so the verdict is a
    function of |h/J| alone; J must be nonzero (without interaction the
    measure vanishes identically and there is nothing to classify).
    """
    if J == 0:
        raise ValueError("J = 0 means no interaction: the measure is identically zero")
    r = h / J
    triple = (
        math.pi / abs(r) if r != 0 else math.inf,
        2.0 * math.pi / abs(r + 1.0) if r != -1.0 else math.inf,
        2.0 * math.pi / abs(r - 1.0) if r != 1.0 else math.inf,
    )
    frac = _as_fraction(abs(r), rational_tolerance, max_denominator)
    if frac is None:
        return PeriodicityClassification(Periodicity.QUASI_PERIODIC, triple)
    p, q = frac.numerator, frac.denominator
    period = math.pi * q if (p % 2 == 1 and q % 2 == 1) else 2.0 * math.pi * q
    return PeriodicityClassification(
        Periodicity.PERIODIC, triple, period=period, rational_form=(p, q)
    )


def singularity_times(
    h: float,
    J: float,
    t_max: float,
    rational_tolerance: float = RATIONAL_TOL,
) -> list[SingularitySpec]:
    """All divergences of the measure with time <= t_max (times in units 1/J).

    The denominator 1 + cos(h t) cos(J t) reaches zero only when both cosines
    sit at +-1 with opposite signs, which pins |h/J| to one of the two
    rational families; ratios in neither family produce no singularities.
    """
    if J == 0:
        raise ValueError("J = 0 means no interaction: the measure is identically zero")
    if t_max <= 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    x = abs(h / J)
    found: list[SingularitySpec] = []

    k = 1  # odd multiple 1 + 2n; time k*pi
    while k * math.pi <= t_max:
        p = round(x * k / 2.0)
        if p >= 1 and abs(x - 2.0 * p / k) <= rational_tolerance:
            found.append(
                SingularitySpec(SingularityFamily.ODD_MULTIPLE, n=(k - 1) // 2, p=p, time=k * math.pi)
            )
        k += 2

    p = 1  # even multiple 2p; time 2p*pi
    while 2 * p * math.pi <= t_max:
        k = round(2.0 * p * x)
        if k >= 1 and k % 2 == 1 and abs(x - k / (2.0 * p)) <= rational_tolerance:
            found.append(
                SingularitySpec(SingularityFamily.EVEN_MULTIPLE, n=(k - 1) // 2, p=p, time=2 * p * math.pi)
            )
        p += 1

    found.sort(key=lambda s: s.time)
    return found
