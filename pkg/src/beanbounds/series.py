"""Truncated power series with exact rational coefficients.

Everything here is exact: coefficients are `fractions.Fraction`, truncation
is hard at a fixed order N, and no floating point ever enters.  The module
provides just enough machinery to expand sqrt(1+tanh z), Schwarz-transformed
versions of it, and the two extremal functions used by the sharpness checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

DEFAULT_ORDER = 8


class OrderMismatchError(ValueError):
    """Raised when two series of different truncation orders are combined."""


class SeriesDomainError(ValueError):
    """Raised when an operation's constant-term precondition is violated."""


def _frac(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class TruncSeries:
    """A power series c0 + c1*z + ... + cN*z^N, truncated inclusively at N.

    Instances are immutable; all arithmetic returns new series of the same
    order and never looks past index N.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif len(cs) > order + 1:
            raise ValueError("more coefficients than order+1")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order: int = order

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def z(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Rational = 1) -> "TruncSeries":
        if not 0 <= k <= order:
            raise ValueError(f"monomial exponent {k} outside [0, {order}]")
        cs = [Fraction(0)] * (order + 1)
        cs[k] = _frac(coeff)
        return cls(cs, order)

    # -- basics --------------------------------------------------------

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self) -> "TruncSeries":
        return self.scale(-1)

    def scale(self, r: Rational) -> "TruncSeries":
        r = _frac(r)
        return TruncSeries([r * c for c in self.coeffs], self.order)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncSeries(out, n)

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- composition and inversion ------------------------------------

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Return self(inner(z)), truncated; inner must vanish at 0."""
        self._check_order(inner)
        if inner.coeffs[0] != 0:
            raise SeriesDomainError("composition requires inner constant term 0")
        # Horner from the top coefficient down.
        result = TruncSeries([self.coeffs[self.order]], self.order)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + TruncSeries([self.coeffs[k]], self.order)
        return result

    def divide(self, divisor: "TruncSeries") -> "TruncSeries":
        """Return self/divisor; divisor must have constant term 1."""
        self._check_order(divisor)
        if divisor.coeffs[0] != 1:
            raise SeriesDomainError("division requires divisor constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= divisor.coeffs[j] * out[k - j]
            out[k] = acc
        return TruncSeries(out, n)

    def sqrt1(self) -> "TruncSeries":
        """Square root with constant term 1 (requires c0 == 1).

        Coefficients solve s*s = self term by term: the z^k coefficient of
        s^2 is 2*s_k + (cross terms in s_1..s_{k-1}), so each s_k is
        determined by a single division by 2.
        """
        if self.coeffs[0] != 1:
            raise SeriesDomainError("sqrt requires constant term 1")
        n = self.order
        s = [Fraction(0)] * (n + 1)
        s[0] = Fraction(1)
        for k in range(1, n + 1):
            cross = sum(s[j] * s[k - j] for j in range(1, k))
            s[k] = (self.coeffs[k] - cross) / 2
        return TruncSeries(s, n)

    def exp(self) -> "TruncSeries":
        """Exponential of a series with zero constant term.

        Uses E' = a' * E, i.e. k*E_k = sum_{j=1..k} j*a_j*E_{k-j}.
        """
        if self.coeffs[0] != 0:
            raise SeriesDomainError("exp requires constant term 0")
        n = self.order
        e = [Fraction(0)] * (n + 1)
        e[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += j * self.coeffs[j] * e[k - j]
            e[k] = acc / k
        return TruncSeries(e, n)

    def integrate(self) -> "TruncSeries":
        """Antiderivative with zero constant term, truncated at the order.

        The z^order coefficient of the input has nowhere to go and must be
        zero, otherwise information would be silently dropped.
        """
        n = self.order
        if self.coeffs[n] != 0:
            raise SeriesDomainError("integrate would overflow the truncation order")
        out = [Fraction(0)] * (n + 1)
        for k in range(n):
            out[k + 1] = self.coeffs[k] / (k + 1)
        return TruncSeries(out, n)

    def shift_down(self) -> "TruncSeries":
        """Divide by z (requires c0 == 0); the top coefficient becomes 0."""
        if self.coeffs[0] != 0:
            raise SeriesDomainError("cannot divide by z: nonzero constant term")
        return TruncSeries(list(self.coeffs[1:]) + [Fraction(0)], self.order)

    def shift_up(self) -> "TruncSeries":
        """Multiply by z, dropping the coefficient that passes the order."""
        return TruncSeries([Fraction(0)] + list(self.coeffs[:-1]), self.order)

    # -- evaluation ----------------------------------------------------

    def eval(self, z):
        """Evaluate the truncating polynomial at a point (Horner)."""
        acc = self.coeffs[self.order] + 0 * z
        for k in range(self.order - 1, -1, -1):
            acc = acc * z + self.coeffs[k]
        return acc


# -- module-level operation aliases (functional style) -----------------


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def scale(a: TruncSeries, r: Rational) -> TruncSeries:
    return a.scale(r)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    return outer.compose(inner)


def divide(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a.divide(b)


def sqrt1p(a: TruncSeries) -> TruncSeries:
    """sqrt(1 + a) for a series a with zero constant term."""
    if a.coeffs[0] != 0:
        raise SeriesDomainError("sqrt1p requires zero constant term")
    return (TruncSeries.one(a.order) + a).sqrt1()


def exp_series(a: TruncSeries) -> TruncSeries:
    return a.exp()


# -- named expansions -------------------------------------------------


def exp_z(order: int) -> TruncSeries:
    return TruncSeries.z(order).exp()


def tanh_series(order: int) -> TruncSeries:
    """tanh z = sinh z / cosh z from the exponential series."""
    e_plus = exp_z(order)
    e_minus = TruncSeries.z(order).scale(-1).exp()
    sinh = (e_plus - e_minus).scale(Fraction(1, 2))
    cosh = (e_plus + e_minus).scale(Fraction(1, 2))
    return sinh.divide(cosh)


def phi_bean(order: int) -> TruncSeries:
    """The target function sqrt(1 + tanh z); squares back to 1 + tanh z."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return sqrt1p(tanh_series(order))


def _log_derivative_integral(n: int, order: int) -> TruncSeries:
    """integral_0^z (phi(t^(n-1)) - 1)/t dt as a truncated series."""
    phi = phi_bean(order)
    inner = TruncSeries.monomial(n - 1, order) if n - 1 <= order else TruncSeries.zero(order)
    g = phi.compose(inner) - TruncSeries.one(order)
    # (g/t) integrated: the z^k coefficient of the integral is g[k]/k, which
    # keeps the full order (integrate() after shift_down() would drop one).
    out = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        out[k] = g.coeffs[k] / k
    return TruncSeries(out, order)


def extremal_starlike(n: int, order: int) -> TruncSeries:
    """z * exp(integral_0^z (phi(t^(n-1)) - 1)/t dt), truncated.

    Its z f'/f equals phi(z^(n-1)); the n=4 instance realizes equality in
    the determinant bounds.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    h = _log_derivative_integral(n, order).exp()
    return h.shift_up()


def extremal_convex(n: int, order: int) -> TruncSeries:
    """integral_0^z exp(integral_0^t (phi(u^(n-1)) - 1)/u du) dt, truncated."""
    if n < 2:
        raise ValueError("n must be >= 2")
    h = _log_derivative_integral(n, order).exp()
    out = [Fraction(0)] * (order + 1)
    for k in range(order):
        out[k + 1] = h.coeffs[k] / (k + 1)
    return TruncSeries(out, order)
