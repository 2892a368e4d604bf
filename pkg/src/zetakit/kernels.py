"""Piecewise-polynomial kernels of the iterated triangle-integration operator.

The operator maps f to ``u -> integral of f over [0, 1-u]``; its n-th power
has a kernel ``K_n(u, v)`` that is polynomial of degree ``n - 1`` on each side
of a single breakline, and the trace of the even powers equals the volume of
the cyclic polytope ``{u_i >= 0, u_i + u_{i+1} <= 1}``.

Two independent constructions live side by side:

* ``kernel_step``/``kernel_by_recurrence`` integrate the previous kernel over
  ``[0, 1-u]`` exactly, splitting the interval at the one interior breakpoint.
* ``kernel_closed_form`` assembles the same kernel from Euler polynomials
  composed with ``(u +- v)/2`` or ``(1 - u +- v)/2``.

Their coefficient-for-coefficient agreement is the module's central check and
is asserted in the test suite, never assumed here.

Region convention: even orders break along the diagonal u = v (``piece_low``
where v >= u, ``piece_high`` where u >= v); odd orders break along
u + v = 1 (``piece_low`` where u + v <= 1, ``piece_high`` where u + v >= 1).
Pointwise evaluation on a breakline averages the two pieces, the usual
half-value convention for step discontinuities; for orders >= 2 the pieces
agree there anyway.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import sequences
from .exactpoly import BiPoly, UniPoly


class Breakline(enum.Enum):
    DIAGONAL = "diagonal"          # split along u = v (even orders)
    ANTIDIAGONAL = "antidiagonal"  # split along u + v = 1 (odd orders)


class MalformedKernelError(ValueError):
    """Breakline tag contradicts the order's parity."""


class OddOrderError(ValueError):
    """Operation requires an even-order kernel."""


# Affine bounds used by the recurrence integral over u1 in [0, 1-u].
_ZERO = 0
_V = (0, 0, 1)
_ONE_MINUS_U = (1, -1, 0)
_ONE_MINUS_V = (1, 0, -1)


def expected_breakline(order: int) -> Breakline:
    return Breakline.DIAGONAL if order % 2 == 0 else Breakline.ANTIDIAGONAL


@dataclass(frozen=True)
class PiecewiseKernel:
    """Order-n kernel as two polynomial pieces split by a breakline."""

    order: int
    breakline: Breakline
    piece_low: BiPoly
    piece_high: BiPoly

    def __post_init__(self):
        if self.order < 1:
            raise MalformedKernelError("order must be >= 1")
        if self.breakline is not expected_breakline(self.order):
            raise MalformedKernelError(
                f"order {self.order} requires breakline "
                f"{expected_breakline(self.order).value}, got {self.breakline.value}"
            )

    def __call__(self, u, v):
        """Evaluate at a point; on the breakline the two pieces are averaged."""
        if self.breakline is Breakline.DIAGONAL:
            gap = v - u
        else:
            gap = 1 - u - v
        if gap > 0:
            return self.piece_low(u, v)
        if gap < 0:
            return self.piece_high(u, v)
        lo, hi = self.piece_low(u, v), self.piece_high(u, v)
        if isinstance(lo, float) or isinstance(hi, float):
            return (lo + hi) / 2.0
        return (lo + hi) / 2


def kernel_base() -> PiecewiseKernel:
    """K_1: the indicator of the triangle {u, v >= 0, u + v <= 1}."""
    return PiecewiseKernel(1, Breakline.ANTIDIAGONAL,
                           BiPoly.constant(1), BiPoly.zero())


def kernel_step(k: PiecewiseKernel) -> PiecewiseKernel:
    """Integrate K_{n-1}(u1, v) over u1 in [0, 1-u], producing K_n.

    The integration interval contains exactly one potential breakpoint of the
    integrand (u1 = 1-v for an antidiagonal kernel, u1 = v for a diagonal
    one); whether it is interior is decided by the sign of v - u, resp.
    1 - u - v, which is what makes the output a two-piece kernel with the
    opposite breakline tag.
    """
    if k.breakline is not expected_breakline(k.order):
        raise MalformedKernelError("input kernel is malformed")
    low, high = k.piece_low, k.piece_high
    if k.breakline is Breakline.ANTIDIAGONAL:
        # Breakpoint 1-v is interior iff v >= u: that side sees both pieces.
        new_low = low.integrate("u", _ZERO, _ONE_MINUS_V) \
            + high.integrate("u", _ONE_MINUS_V, _ONE_MINUS_U)
        new_high = low.integrate("u", _ZERO, _ONE_MINUS_U)
        return PiecewiseKernel(k.order + 1, Breakline.DIAGONAL, new_low, new_high)
    # Diagonal input: breakpoint v is interior iff u + v <= 1.
    new_low = low.integrate("u", _ZERO, _V) \
        + high.integrate("u", _V, _ONE_MINUS_U)
    new_high = low.integrate("u", _ZERO, _ONE_MINUS_U)
    return PiecewiseKernel(k.order + 1, Breakline.ANTIDIAGONAL, new_low, new_high)


_RECURRENCE_CACHE: list[PiecewiseKernel] = []
_CACHE_LOCK = threading.Lock()


def kernel_by_recurrence(n: int) -> PiecewiseKernel:
    """K_n built by repeated kernel_step from K_1 (memoized)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    with _CACHE_LOCK:
        if not _RECURRENCE_CACHE:
            _RECURRENCE_CACHE.append(kernel_base())
        while len(_RECURRENCE_CACHE) < n:
            _RECURRENCE_CACHE.append(kernel_step(_RECURRENCE_CACHE[-1]))
        return _RECURRENCE_CACHE[n - 1]


def kernel_closed_form(n: int) -> PiecewiseKernel:
    """K_n assembled from Euler polynomials with affine arguments.

    Even order 2m: scale (-1)^m 2^(2m-2)/(2m-1)! times E_{2m-1} composed with
    (u+v)/2 and (u-v)/2 (resp. (v-u)/2) on the two diagonal sides. Odd order
    2m+1: scale (-1)^m 2^(2m-1)/(2m)! times E_{2m} composed with
    (1-u+v)/2 and (1-u-v)/2 (resp. -(1-u-v)/2, subtracted) on the two
    antidiagonal sides.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    half = Fraction(1, 2)
    if n % 2 == 0:
        m = n // 2
        scale = Fraction((-1) ** m) * Fraction(2) ** (2 * m - 2) \
            / math.factorial(2 * m - 1)
        e = sequences.euler_polynomial(2 * m - 1)
        sum_arg = e.compose_affine(0, half, half)        # E((u+v)/2)
        diff_uv = e.compose_affine(0, half, -half)       # E((u-v)/2)
        diff_vu = e.compose_affine(0, -half, half)       # E((v-u)/2)
        return PiecewiseKernel(n, Breakline.DIAGONAL,
                               scale * (sum_arg + diff_vu),
                               scale * (sum_arg + diff_uv))
    m = (n - 1) // 2
    scale = Fraction((-1) ** m) * Fraction(2) ** (2 * m - 1) / math.factorial(2 * m)
    e = sequences.euler_polynomial(2 * m)
    plus = e.compose_affine(half, -half, half)           # E((1-u+v)/2)
    minus_in = e.compose_affine(half, -half, -half)      # E((1-u-v)/2)
    minus_out = e.compose_affine(-half, half, half)      # E((u+v-1)/2)
    return PiecewiseKernel(n, Breakline.ANTIDIAGONAL,
                           scale * (plus + minus_in),
                           scale * (plus - minus_out))


def kernels_equal(a: PiecewiseKernel, b: PiecewiseKernel) -> bool:
    """Exact structural equality: order, breakline tag, both pieces."""
    return (a.order == b.order and a.breakline is b.breakline
            and a.piece_low == b.piece_low and a.piece_high == b.piece_high)


def kernel_diagonal(k: PiecewiseKernel) -> UniPoly:
    """K_n(u, u) for even n; the two pieces agree on the diagonal."""
    if k.order % 2 != 0:
        raise OddOrderError("diagonal slice is defined for even orders only")
    return k.piece_high.diagonal()


def kernel_trace(k: PiecewiseKernel) -> Fraction:
    """Exact integral of the diagonal over [0, 1] (even orders only).

    This is the volume of the cyclic polytope of the kernel's order.
    """
    if k.order % 2 != 0:
        raise OddOrderError("trace is defined for even orders only")
    return kernel_diagonal(k).integrate(0, 1)


def _matrix_pairs(p: BiPoly) -> list[list[list[int]]]:
    return [[[c.numerator, c.denominator] for c in row] for row in p.rows]


def kernel_to_dict(k: PiecewiseKernel) -> dict:
    """JSON-ready dump: coefficient matrices as [numerator, denominator] pairs."""
    if k.breakline is Breakline.DIAGONAL:
        regions = {"low": "v >= u", "high": "u >= v"}
    else:
        regions = {"low": "u + v <= 1", "high": "u + v >= 1"}
    return {
        "order": k.order,
        "breakline": k.breakline.value,
        "regions": regions,
        "piece_low": _matrix_pairs(k.piece_low),
        "piece_high": _matrix_pairs(k.piece_high),
    }


def kernel_to_text(k: PiecewiseKernel) -> str:
    d = kernel_to_dict(k)
    return "\n".join([
        f"kernel order {k.order}, breakline {k.breakline.value}",
        f"  where {d['regions']['low']}: {k.piece_low}",
        f"  where {d['regions']['high']}: {k.piece_high}",
    ])
