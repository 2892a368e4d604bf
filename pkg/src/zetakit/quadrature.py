"""Deterministic quadrature drivers for the one-dimensional zeta integrals.

Two rules cover everything needed here:

* ``composite_gauss_legendre`` for integrands that are smooth once their
  removable endpoint singularities are filled in (all nodes are interior, so
  the limits are never actually sampled);
* ``tanh_sinh`` (double-exponential) for integrands with logarithmic endpoint
  singularities, whose weights crush the blow-up.

Both refine until two successive levels agree, report
``error_bound = 2 * |last delta|`` (floored at a few ulps of the result), and
raise ToleranceNotMetError when the refinement budget runs out first. Node
sums go through ``math.fsum`` in a fixed order, so results are bit-stable
across runs.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial.legendre import leggauss

_GL_NODES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


class ToleranceNotMetError(RuntimeError):
    """Refinement budget exhausted before reaching the requested tolerance."""


def _gl_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_NODES:
        _GL_NODES[order] = leggauss(order)
    return _GL_NODES[order]


_EPS = 2.220446049250313e-16


def _error_floor(value: float) -> float:
    # Cannot certify below a few rounding errors of the summation itself.
    return (abs(value) + 1.0) * 8.0 * _EPS


def composite_gauss_legendre(f, a: float, b: float, tol: float, *,
                             order: int = 16,
                             max_refinements: int = 10) -> tuple[float, float]:
    """Integrate vectorized ``f`` over [a, b]; returns (value, error_bound).

    Panels double each refinement; convergence is declared when the bound
    ``max(2 * |delta|, rounding floor)`` drops to ``tol``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    nodes, weights = _gl_rule(order)
    prev = None
    for level in range(max_refinements + 1):
        panels = 1 << level
        edges = np.linspace(a, b, panels + 1)
        mid = (edges[:-1, None] + edges[1:, None]) / 2.0
        half = (edges[1:, None] - edges[:-1, None]) / 2.0
        pts = (mid + half * nodes[None, :]).ravel()
        wts = (half * weights[None, :]).ravel()
        value = math.fsum((wts * f(pts)).tolist())
        if prev is not None:
            bound = max(2.0 * abs(value - prev), _error_floor(value))
            if bound <= tol:
                return value, bound
        prev = value
    raise ToleranceNotMetError(
        f"composite Gauss-Legendre did not reach tol={tol:g} "
        f"within {max_refinements} refinements"
    )


def tanh_sinh(f, tol: float, *, max_level: int = 11,
              t_max: float = 3.6) -> tuple[float, float]:
    """Integrate ``f`` over (0, 1); returns (value, error_bound).

    ``f(u, one_minus_u)`` receives both the node and its distance to 1 so
    integrands can evaluate stably near either endpoint. Integrable
    logarithmic endpoint singularities are fine: node weights decay
    double-exponentially. Levels halve the step h; ``t_max = 3.6`` already
    puts the discarded tail far below double precision.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    prev = None
    for level in range(2, max_level + 1):
        h = 1.0 / (1 << level)
        kmax = int(math.ceil(t_max / h))
        terms = []
        for k in range(-kmax, kmax + 1):
            t = k * h
            s = 0.5 * math.pi * math.sinh(t)
            u = 1.0 / (1.0 + math.exp(-2.0 * s))
            umc = 1.0 / (1.0 + math.exp(2.0 * s))
            w = 0.25 * math.pi * math.cosh(t) / math.cosh(s) ** 2
            terms.append(h * w * f(u, umc))
        value = math.fsum(terms)
        if prev is not None:
            bound = max(2.0 * abs(value - prev), _error_floor(value))
            if bound <= tol:
                return value, bound
        prev = value
    raise ToleranceNotMetError(
        f"tanh-sinh rule did not reach tol={tol:g} within level {max_level}"
    )
