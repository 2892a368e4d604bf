"""Euler polynomials and Bernoulli numbers as exact rational objects.

Both families are built from pure rational recurrences:

* ``E_0 = 1`` and ``E_n(x) = x**n - (1/2) * sum_{k<n} C(n,k) E_k(x)``,
  which follows from the generating-function identity
  ``sum_k C(n,k) E_k(x) + E_n(x) = 2 x**n``.
* ``B_0 = 1`` and ``sum_{k<=m} C(m+1,k) B_k = 0`` (so ``B_1 = -1/2``).

The classical identities (``E_n' = n E_{n-1}``, ``E_n(1-x) = (-1)^n E_n(x)``,
the Bernoulli expression for ``E_{2n-1}(0)``) are *not* assumed here; the test
suite proves them from these definitions. ``euler_odd_at_zero`` computes its
value along both routes and refuses to return if they disagree.

Tables grow on demand under a lock; orders up to 64 stay cheap.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactpoly import UniPoly, binomial

_EULER: list[UniPoly] = []
_BERNOULLI: list[Fraction] = []
_LOCK = threading.Lock()


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


def euler_polynomial(n: int) -> UniPoly:
    """Exact Euler polynomial E_n(x)."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    with _LOCK:
        while len(_EULER) <= n:
            m = len(_EULER)
            acc = UniPoly.zero()
            for k in range(m):
                acc = acc + binomial(m, k) * _EULER[k]
            _EULER.append(UniPoly.monomial(m) - Fraction(1, 2) * acc)
        return _EULER[n]


def bernoulli_number(m: int) -> Fraction:
    """Exact Bernoulli number B_m (convention B_1 = -1/2)."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    with _LOCK:
        while len(_BERNOULLI) <= m:
            j = len(_BERNOULLI)
            if j == 0:
                _BERNOULLI.append(Fraction(1))
                continue
            acc = Fraction(0)
            for k in range(j):
                acc += binomial(j + 1, k) * _BERNOULLI[k]
            _BERNOULLI.append(-acc / binomial(j + 1, j))
        return _BERNOULLI[m]


def euler_odd_at_zero(n: int) -> Fraction:
    """E_{2n-1}(0), computed twice and cross-checked.

    Route one evaluates the Euler polynomial; route two uses the Bernoulli
    expression E_{2n-1}(0) = -(2/(2n)) * (2**(2n) - 1) * B_{2n}. A mismatch
    signals an arithmetic bug in one of the recurrences and raises
    InconsistencyError.
    """
    if n < 1:
        raise ValueError("n must be positive")
    direct = euler_polynomial(2 * n - 1)(Fraction(0))
    via_bernoulli = -Fraction(2, 2 * n) * (2 ** (2 * n) - 1) * bernoulli_number(2 * n)
    if direct != via_bernoulli:
        raise InconsistencyError(
            f"E_{{{2 * n - 1}}}(0) disagrees: polynomial route {direct}, "
            f"Bernoulli route {via_bernoulli}"
        )
    return direct
