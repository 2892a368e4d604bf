"""Riemann zeta values: exact even arguments, verified numeric odd arguments.

Even arguments come out exact, as a reduced rational times a power of pi,
along two independent routes that the tests require to coincide:

* ``zeta_even_trace``: zeta(2n) = trace(K_2n) / (2**(2n) - 1) * pi**(2n),
  the polytope-volume/operator-trace pipeline (the kernel trace is the
  volume of the cyclic polytope, rescaled by (pi/2)**(2n) and the
  alternating-sign correction factor 2**(2n)/(2**(2n)-1));
* ``zeta_even_bernoulli``: the classical Bernoulli-number formula.

Odd arguments are numeric with certified error bounds:

* ``zeta_odd_euler_integral``: the cosecant-weighted Euler-polynomial
  integral (smooth after removable endpoint limits, composite
  Gauss-Legendre);
* ``zeta3_cosecant``: the zeta(3) special case as an integral over [0, pi];
* ``zeta_odd_logtan``: the log-tangent kernel-diagonal integral
  (logarithmic endpoint singularities, tanh-sinh rule).

``zeta_series`` is the implementation-independent oracle: a partial sum plus
the midpoint of the integral-test tail bracket, with the half-width of the
bracket as the error bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import sequences
from .kernels import kernel_by_recurrence, kernel_diagonal, kernel_trace
from .quadrature import ToleranceNotMetError, composite_gauss_legendre, tanh_sinh

__all__ = [
    "ZetaKind", "ZetaValue", "InvalidOrderError", "ToleranceNotMetError",
    "zeta_even_trace", "zeta_even_bernoulli", "zeta_series",
    "zeta_odd_euler_integral", "zeta3_cosecant", "zeta_odd_logtan",
]

_EPS = 2.220446049250313e-16


class InvalidOrderError(ValueError):
    """Order outside the operation's domain (e.g. targeting zeta(1))."""


class ZetaKind(enum.Enum):
    EXACT_PI_POWER = "exact_pi_power"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class ZetaValue:
    """A zeta value, either exact (r * pi**k) or numeric with an error bound."""

    kind: ZetaKind
    rational_coefficient: Optional[Fraction]
    pi_power: Optional[int]
    numeric_value: float
    error_bound: float

    @classmethod
    def exact(cls, coefficient: Fraction, pi_power: int) -> "ZetaValue":
        value = float(coefficient)
        for _ in range(pi_power):
            value *= math.pi
        # One rounding per multiplication plus the Fraction->float conversion.
        bound = abs(value) * (pi_power + 2) * _EPS
        return cls(ZetaKind.EXACT_PI_POWER, coefficient, pi_power, value, bound)

    @classmethod
    def numeric(cls, value: float, error_bound: float) -> "ZetaValue":
        return cls(ZetaKind.NUMERIC, None, None, value, error_bound)

    def to_dict(self) -> dict:
        coeff = self.rational_coefficient
        return {
            "kind": self.kind.value,
            "coefficient": None if coeff is None else f"{coeff.numerator}/{coeff.denominator}",
            "pi_power": self.pi_power,
            "value": self.numeric_value,
            "error_bound": self.error_bound,
        }


def zeta_even_trace(n: int) -> ZetaValue:
    """Exact zeta(2n) through the kernel-trace (polytope volume) pipeline."""
    if n < 1:
        raise InvalidOrderError("n must be >= 1")
    trace = kernel_trace(kernel_by_recurrence(2 * n))
    return ZetaValue.exact(trace / (2 ** (2 * n) - 1), 2 * n)


def zeta_even_bernoulli(n: int) -> ZetaValue:
    """Exact zeta(2n) = (-1)**(n+1) * 2**(2n-1)/(2n)! * B_2n * pi**(2n)."""
    if n < 1:
        raise InvalidOrderError("n must be >= 1")
    coeff = Fraction((-1) ** (n + 1) * 2 ** (2 * n - 1), math.factorial(2 * n)) \
        * sequences.bernoulli_number(2 * n)
    return ZetaValue.exact(coeff, 2 * n)


def zeta_series(s: float, eps: float) -> ZetaValue:
    """Series oracle: partial sum plus integral-test tail-bracket midpoint.

    The tail after N terms is bracketed by the integrals from N+1 and from N;
    taking the midpoint leaves at most the half-width, which is driven below
    ``eps`` by the choice of N. Independent of every other code path here.
    """
    if s <= 1:
        raise ValueError("series converges only for s > 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    n_terms = max(10, math.ceil((1.0 / (1.8 * eps)) ** (1.0 / s)))
    for _ in range(60):
        partial = math.fsum(k ** (-s) for k in range(1, n_terms + 1))
        tail_hi = n_terms ** (1.0 - s) / (s - 1.0)
        tail_lo = (n_terms + 1.0) ** (1.0 - s) / (s - 1.0)
        value = partial + (tail_hi + tail_lo) / 2.0
        bound = (tail_hi - tail_lo) / 2.0 + 4.0 * _EPS * abs(value)
        if bound <= eps:
            return ZetaValue.numeric(value, bound)
        n_terms *= 2
    raise ToleranceNotMetError(f"series oracle could not certify eps={eps:g}")


def _euler_cosecant_integrand(n: int):
    """E_2n(u)/sin(pi*u) with the removable endpoint limit filled in."""
    coeffs = np.array(sequences.euler_polynomial(2 * n).float_coeffs())
    limit = 2 * n * float(sequences.euler_odd_at_zero(n)) / math.pi

    def f(x: np.ndarray) -> np.ndarray:
        sx = np.sin(np.pi * x)
        bad = (x <= 0.0) | (x >= 1.0) | (sx == 0.0)
        vals = np.polynomial.polynomial.polyval(x, coeffs) / np.where(bad, 1.0, sx)
        return np.where(bad, limit, vals)

    return f


def zeta_odd_euler_integral(n: int, tol: float) -> ZetaValue:
    """Numeric zeta(2n+1) from the cosecant-weighted Euler-polynomial integral.

    zeta(2n+1) = (-1)^n pi^(2n+1) / (4 (1 - 2^-(2n+1)) (2n)!) *
                 integral_0^1 E_2n(u)/sin(pi u) du.
    """
    if n < 1:
        raise InvalidOrderError("n must be >= 1 (n = 0 would target zeta(1))")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    pref = ((-1) ** n) * math.pi ** (2 * n + 1) \
        / (4.0 * (1.0 - 2.0 ** -(2 * n + 1)) * math.factorial(2 * n))
    integral, bound = composite_gauss_legendre(
        _euler_cosecant_integrand(n), 0.0, 1.0, tol / abs(pref))
    return ZetaValue.numeric(pref * integral, abs(pref) * bound)


def zeta3_cosecant(tol: float) -> ZetaValue:
    """Numeric zeta(3) = (1/7) * integral_0^pi x(pi - x)/sin(x) dx."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def f(x: np.ndarray) -> np.ndarray:
        sx = np.sin(x)
        bad = (x <= 0.0) | (x >= math.pi) | (sx == 0.0)
        vals = x * (math.pi - x) / np.where(bad, 1.0, sx)
        return np.where(bad, math.pi, vals)

    integral, bound = composite_gauss_legendre(f, 0.0, math.pi, 7.0 * tol)
    return ZetaValue.numeric(integral / 7.0, bound / 7.0)


def zeta_odd_logtan(n: int, tol: float) -> ZetaValue:
    """Numeric zeta(2n+1) from the log-tangent kernel-diagonal integral.

    zeta(2n+1) = -2 pi^(2n)/(2^(2n+1) - 1) *
                 integral_0^1 ln(tan(pi u / 2)) K_2n(u, u) du.
    The integrand has logarithmic endpoint singularities, handled by the
    tanh-sinh rule; ln(tan(pi u/2)) is evaluated from whichever of u, 1-u
    is small, using its antisymmetry about 1/2.
    """
    if n < 1:
        raise InvalidOrderError("n must be >= 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    diag = kernel_diagonal(kernel_by_recurrence(2 * n)).float_coeffs()

    def f(u: float, umc: float) -> float:
        if u <= 0.0 or umc <= 0.0:
            return 0.0
        if u <= 0.5:
            logtan = math.log(math.tan(0.5 * math.pi * u))
        else:
            logtan = -math.log(math.tan(0.5 * math.pi * umc))
        acc = 0.0
        for c in reversed(diag):
            acc = acc * u + c
        return logtan * acc

    pref = -2.0 * math.pi ** (2 * n) / (2 ** (2 * n + 1) - 1)
    integral, bound = tanh_sinh(f, tol / abs(pref))
    return ZetaValue.numeric(pref * integral, abs(pref) * bound)
