"""Exact polynomial arithmetic over the rationals, in one and two variables.

Every coefficient is a `fractions.Fraction`, so identities proved with this
module hold exactly, not within a tolerance. Polynomials are dense and
immutable:

* ``UniPoly``: ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros
  are stripped, the zero polynomial is the empty tuple.
* ``BiPoly``: ``rows[i][j]`` is the coefficient of ``u**i * v**j``, stored as
  a rectangular matrix with trailing all-zero rows and columns trimmed.

Because both forms are canonical, ``==`` is coefficient-wise equality.
Degrees stay small in this project (below ~35), which keeps the dense
representation and the Horner-style affine substitution cheap.

Affine forms ``c0 + c1*u + c2*v`` appear as 3-tuples of scalars; a bare
scalar is accepted wherever an affine form is expected.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
AffineLike = Union[Scalar, Sequence[Scalar]]


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _affine3(expr: AffineLike) -> tuple[Fraction, Fraction, Fraction]:
    """Coerce a scalar or 3-sequence to an affine triple (c0, c_u, c_v)."""
    if isinstance(expr, (int, Fraction)):
        return (_frac(expr), Fraction(0), Fraction(0))
    c0, cu, cv = expr
    return (_frac(c0), _frac(cu), _frac(cv))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an exact Fraction; 0 when k > n or k < 0."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return UniPoly([c * s for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other: Scalar) -> "UniPoly":
        return self.__mul__(other)

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int x, float for float x."""
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, float):
            return float(acc)
        return _frac(acc)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        return UniPoly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, lower: Scalar, upper: Scalar) -> Fraction:
        """Exact definite integral between scalar bounds."""
        anti = self.antiderivative()
        return anti(_frac(upper)) - anti(_frac(lower))

    def compose_affine(self, c0: Scalar, cu: Scalar, cv: Scalar) -> "BiPoly":
        """p(c0 + cu*u + cv*v) expanded as a canonical BiPoly."""
        arg = BiPoly.affine(c0, cu, cv)
        acc = BiPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + BiPoly.constant(c)
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_terms([((i,), c) for i, c in enumerate(self.coeffs)], ("x",))


class BiPoly:
    """Dense bivariate polynomial with Fraction coefficients.

    ``rows[i][j]`` is the coefficient of ``u**i * v**j``. The matrix is
    rectangular; trailing all-zero rows and columns are trimmed so equal
    polynomials compare equal structurally.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]] = ()):
        mat = [[_frac(c) for c in row] for row in rows]
        width = max((len(r) for r in mat), default=0)
        for r in mat:
            r.extend([Fraction(0)] * (width - len(r)))
        while mat and all(c == 0 for c in mat[-1]):
            mat.pop()
        while mat and all(r[-1] == 0 for r in mat):
            for r in mat:
                r.pop()
        object.__setattr__(self, "rows", tuple(tuple(r) for r in mat))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls([[c]])

    @classmethod
    def affine(cls, c0: Scalar, cu: Scalar, cv: Scalar) -> "BiPoly":
        """The affine polynomial c0 + cu*u + cv*v."""
        return cls([[c0, cv], [cu, 0]])

    @property
    def degree_u(self) -> int:
        return len(self.rows) - 1

    @property
    def degree_v(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        nr = max(len(self.rows), len(other.rows))
        nc = max(len(self.rows[0]) if self.rows else 0,
                 len(other.rows[0]) if other.rows else 0)
        out = [[Fraction(0)] * nc for _ in range(nr)]
        for mat in (self.rows, other.rows):
            for i, row in enumerate(mat):
                for j, c in enumerate(row):
                    out[i][j] += c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly([[-c for c in row] for row in self.rows])

    def __sub__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        return self + (-other)

    def __mul__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return BiPoly([[c * s for c in row] for row in self.rows])
        if self.is_zero() or other.is_zero():
            return BiPoly.zero()
        nr = len(self.rows) + len(other.rows) - 1
        nc = len(self.rows[0]) + len(other.rows[0]) - 1
        out = [[Fraction(0)] * nc for _ in range(nr)]
        for i, arow in enumerate(self.rows):
            for j, a in enumerate(arow):
                if a == 0:
                    continue
                for k, brow in enumerate(other.rows):
                    for l, b in enumerate(brow):
                        if b:
                            out[i + k][j + l] += a * b
        return BiPoly(out)

    def __rmul__(self, other: Scalar) -> "BiPoly":
        return self.__mul__(other)

    def __call__(self, u, v):
        """Nested Horner evaluation; exact unless u or v is a float."""
        numeric_float = isinstance(u, float) or isinstance(v, float)
        acc = 0.0 if numeric_float else Fraction(0)
        for row in reversed(self.rows):
            rv = 0.0 if numeric_float else Fraction(0)
            for c in reversed(row):
                rv = rv * v + c
            acc = acc * u + rv
        return float(acc) if numeric_float else _frac(acc)

    def at_u(self, c: Scalar) -> UniPoly:
        """Substitute u := c, returning a UniPoly in v."""
        c = _frac(c)
        out = [Fraction(0)] * (self.degree_v + 1 if self.rows else 0)
        power = Fraction(1)
        for row in self.rows:
            for j, a in enumerate(row):
                out[j] += a * power
            power *= c
        return UniPoly(out)

    def at_v(self, c: Scalar) -> UniPoly:
        """Substitute v := c, returning a UniPoly in u."""
        c = _frac(c)
        out = []
        for row in self.rows:
            acc = Fraction(0)
            for a in reversed(row):
                acc = acc * c + a
            out.append(acc)
        return UniPoly(out)

    def diagonal(self) -> UniPoly:
        """Substitute v := u, giving the single-variable diagonal slice."""
        if not self.rows:
            return UniPoly.zero()
        out = [Fraction(0)] * (self.degree_u + self.degree_v + 1)
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                out[i + j] += c
        return UniPoly(out)

    def swap(self) -> "BiPoly":
        """Exchange the roles of u and v (matrix transpose)."""
        if not self.rows:
            return BiPoly.zero()
        return BiPoly(list(zip(*self.rows)))

    def substitute_affine(self, var: str, expr: AffineLike) -> "BiPoly":
        """Substitute ``var`` (``"u"`` or ``"v"``) by an affine form in (u, v).

        The other variable is left in place, e.g. substituting u := 1 - u + v
        into u*v yields v - u*v + v**2.
        """
        c0, cu, cv = _affine3(expr)
        arg = BiPoly.affine(c0, cu, cv)
        acc = BiPoly.zero()
        if var == "u":
            for row in reversed(self.rows):
                acc = acc * arg + BiPoly([row])
            return acc
        if var == "v":
            cols = list(zip(*self.rows)) if self.rows else []
            for col in reversed(cols):
                acc = acc * arg + BiPoly([[c] for c in col])
            return acc
        raise ValueError(f"unknown variable {var!r}")

    def antiderivative(self, var: str) -> "BiPoly":
        """Antiderivative in ``var`` with zero constant slice."""
        if self.is_zero():
            return BiPoly.zero()
        if var == "u":
            rows = [[Fraction(0)] * (self.degree_v + 1)]
            rows += [[c / (i + 1) for c in row] for i, row in enumerate(self.rows)]
            return BiPoly(rows)
        if var == "v":
            rows = [[Fraction(0)] + [c / (j + 1) for j, c in enumerate(row)]
                    for row in self.rows]
            return BiPoly(rows)
        raise ValueError(f"unknown variable {var!r}")

    def integrate(self, var: str, lower: AffineLike, upper: AffineLike) -> "BiPoly":
        """Exact definite integral over ``var`` between affine bounds.

        Integrates out ``var`` and substitutes the bounds, which may involve
        both output variables: integrating K(u1, v) over u1 from 0 to 1-u is
        ``k.integrate("u", 0, (1, -1, 0))``.
        """
        anti = self.antiderivative(var)
        return anti.substitute_affine(var, upper) - anti.substitute_affine(var, lower)

    def coeff(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return Fraction(0)

    def __repr__(self) -> str:
        return f"BiPoly({[list(r) for r in self.rows]!r})"

    def __str__(self) -> str:
        terms = []
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                terms.append(((i, j), c))
        return format_terms(terms, ("u", "v"))


def format_terms(terms, names: tuple[str, ...]) -> str:
    """Render (exponents, coefficient) pairs as a human-readable polynomial."""
    parts = []
    for expts, c in sorted(terms, key=lambda t: t[0], reverse=True):
        if c == 0:
            continue
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, expts) if e
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
