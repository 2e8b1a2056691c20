"""Coefficient functionals as exact polynomials in p1..p5.

The Taylor coefficients a_n of a class member, and the determinant
functionals built from them, are polynomials in the Caratheodory
coefficients p1..p5 with rational coefficients.  This module derives those
polynomials from the defining relation (z f'/f, resp. 1 + z f''/f', equals
the target function evaluated at a Schwarz transform) and provides the
determinant combinations used downstream.

Dependence beyond p5 is outside the model: the derivations treat p6, p7, ...
as absent, matching the convention used for every functional handled here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from .series import Rational, TruncSeries, _frac, phi_bean

NVARS = 5

ExpVec = tuple[int, int, int, int, int]

_ZERO_EXP: ExpVec = (0, 0, 0, 0, 0)


class ArityError(ValueError):
    """Raised when a coefficient list is too short for a functional."""


class CaraPoly:
    """Sparse polynomial in p1..p5 over exact rationals.

    Terms map a dense length-5 exponent vector to a nonzero Fraction.
    Instances are immutable in practice (nothing mutates `terms` after
    construction) and safe to share.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExpVec, Rational] | None = None):
        cleaned: dict[ExpVec, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                c = _frac(c)
                if c != 0:
                    cleaned[tuple(exp)] = c  # type: ignore[index]
        self.terms: dict[ExpVec, Fraction] = cleaned

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, c: Rational) -> "CaraPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, i: int) -> "CaraPoly":
        """The variable p_i, 1-indexed (i in 1..5)."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index {i} outside 1..{NVARS}")
        exp = [0] * NVARS
        exp[i - 1] = 1
        return cls({tuple(exp): 1})

    zero: "CaraPoly"
    one: "CaraPoly"

    # -- basics ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"CaraPoly({self.as_text()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CaraPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self) -> int:
        """Max over terms of sum_k k*e_k (p_k carries weight k)."""
        if not self.terms:
            return 0
        return max(sum((k + 1) * e for k, e in enumerate(exp)) for exp in self.terms)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "CaraPoly") -> "CaraPoly":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return CaraPoly(out)

    def __sub__(self, other: "CaraPoly") -> "CaraPoly":
        return self + (-other)

    def __neg__(self) -> "CaraPoly":
        return CaraPoly({exp: -c for exp, c in self.terms.items()})

    def scale(self, r: Rational) -> "CaraPoly":
        r = _frac(r)
        if r == 0:
            return CaraPoly()
        return CaraPoly({exp: r * c for exp, c in self.terms.items()})

    def __mul__(self, other: "CaraPoly") -> "CaraPoly":
        out: dict[ExpVec, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4])
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return CaraPoly(out)

    def __pow__(self, k: int) -> "CaraPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CaraPoly.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation ------------------------------------------------------

    def eval(self, p1, p2=0, p3=0, p4=0, p5=0):
        """Evaluate at a point; exact if all inputs are int/Fraction."""
        vals = (p1, p2, p3, p4, p5)
        exact = all(isinstance(v, (int, Fraction)) for v in vals)
        acc = Fraction(0) if exact else 0j
        for exp, c in self.terms.items():
            term = c if exact else complex(c)
            for v, e in zip(vals, exp):
                if e:
                    term = term * v**e
            acc += term
        return acc

    def compiled(self) -> Callable[..., np.ndarray]:
        """Vectorized evaluator over numpy arrays p1..p5 (float/complex)."""
        exps = np.array(list(self.terms.keys()), dtype=np.int64)
        coefs = np.array([float(c) for c in self.terms.values()])

        def _eval(p1, p2, p3, p4, p5):
            vals = [np.asarray(p) for p in (p1, p2, p3, p4, p5)]
            acc = None
            for (e, c) in zip(exps, coefs):
                term = np.full_like(vals[0], c, dtype=np.result_type(*vals, float))
                for v, ek in zip(vals, e):
                    if ek:
                        term = term * v**int(ek)
                acc = term if acc is None else acc + term
            if acc is None:
                return np.zeros_like(vals[0], dtype=float)
            return acc

        return _eval

    # -- rendering -------------------------------------------------------

    def as_text(self) -> str:
        """Deterministic human-readable form, graded-lex term order."""
        if not self.terms:
            return "0"
        def key(item):
            exp, _ = item
            return (sum((k + 1) * e for k, e in enumerate(exp)), exp)
        parts = []
        for exp, c in sorted(self.terms.items(), key=key):
            mono = "*".join(
                f"p{k+1}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(exp) if e
            )
            if mono:
                parts.append(f"{c} * {mono}" if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def as_pairs(self) -> list[tuple[ExpVec, str]]:
        """(exponent vector, rational string) pairs in deterministic order."""
        def key(item):
            exp, _ = item
            return (sum((k + 1) * e for k, e in enumerate(exp)), exp)
        return [(exp, str(c)) for exp, c in sorted(self.terms.items(), key=key)]


CaraPoly.zero = CaraPoly()
CaraPoly.one = CaraPoly.const(1)


def poly_from_dict(d: Mapping[ExpVec, Rational]) -> CaraPoly:
    return CaraPoly(d)


# -- Schwarz transform -------------------------------------------------


def schwarz_coeffs(n: int) -> list[CaraPoly]:
    """Coefficients w1..wn of w = (p-1)/(p+1) as polynomials in p1..p5.

    Matching coefficients in (p+1)*w = p-1 gives
        2*w_k = p_k - sum_{j<k} w_j p_{k-j},
    with p_m treated as 0 for m > 5.
    """
    p = [CaraPoly.var(i) if 1 <= i <= NVARS else CaraPoly.zero for i in range(n + 1)]
    w: list[CaraPoly] = [CaraPoly.zero]  # w[0] unused
    for k in range(1, n + 1):
        acc = p[k] if k <= NVARS else CaraPoly.zero
        for j in range(1, k):
            acc = acc - w[j] * (p[k - j] if k - j <= NVARS else CaraPoly.zero)
        w.append(acc.scale(Fraction(1, 2)))
    return w


def _phi_of_w(phi: TruncSeries, w: Sequence[CaraPoly], n: int) -> list[CaraPoly]:
    """Coefficients c1..cn of phi(w(z)) - phi(0), with w given termwise."""
    if phi.order < n:
        raise ArityError(f"series order {phi.order} < required {n}")
    # powers of w as coefficient lists, truncated at n
    cur = [CaraPoly.zero] * (n + 1)
    for k in range(1, n + 1):
        cur[k] = w[k]
    c = [CaraPoly.zero] * (n + 1)
    power = cur
    for j in range(1, n + 1):
        pj = phi.coeffs[j]
        if pj != 0:
            for k in range(j, n + 1):
                c[k] = c[k] + power[k].scale(pj)
        if j < n:
            nxt = [CaraPoly.zero] * (n + 1)
            for k1 in range(1, n + 1):
                if power[k1].is_zero():
                    continue
                for k2 in range(1, n + 1 - k1):
                    if not w[k2].is_zero():
                        nxt[k1 + k2] = nxt[k1 + k2] + power[k1] * w[k2]
            power = nxt
    return c


def solve_starlike_coeffs(phi: TruncSeries, n: int) -> list[CaraPoly]:
    """a2..an for z f'/f = phi(w), returned as [a2, ..., an].

    Matching coefficients in z f' = phi(w) * f gives
        (m-1) a_m = sum_{k=1..m-1} c_k a_{m-k}       (a_1 = 1),
    where c_k are the coefficients of phi(w) - 1.
    """
    if phi.coeffs[0] != 1:
        raise ValueError("phi must have phi(0) = 1")
    if n < 2:
        raise ValueError("n must be >= 2")
    w = schwarz_coeffs(n - 1)
    c = _phi_of_w(phi, w, n - 1)
    a = [CaraPoly.zero, CaraPoly.one]  # a[1] = 1
    for m in range(2, n + 1):
        acc = CaraPoly.zero
        for k in range(1, m):
            acc = acc + c[k] * a[m - k]
        a.append(acc.scale(Fraction(1, m - 1)))
    return a[2:]


def solve_convex_coeffs(phi: TruncSeries, n: int) -> list[CaraPoly]:
    """a2..an for 1 + z f''/f' = phi(w), returned as [a2, ..., an].

    With g = f' = 1 + sum g_m z^m the relation z g' = (phi(w) - 1) g gives
        m g_m = sum_{k=1..m} c_k g_{m-k}            (g_0 = 1),
    and a_m = g_{m-1}/m.
    """
    if phi.coeffs[0] != 1:
        raise ValueError("phi must have phi(0) = 1")
    if n < 2:
        raise ValueError("n must be >= 2")
    w = schwarz_coeffs(n - 1)
    c = _phi_of_w(phi, w, n - 1)
    g = [CaraPoly.one]
    for m in range(1, n):
        acc = CaraPoly.zero
        for k in range(1, m + 1):
            acc = acc + c[k] * g[m - k]
        g.append(acc.scale(Fraction(1, m)))
    return [g[m - 1].scale(Fraction(1, m)) for m in range(2, n + 1)]


def starlike_coeffs(n: int = 7) -> list[CaraPoly]:
    """a2..an for the sqrt(1+tanh) starlike class (default through a7)."""
    return solve_starlike_coeffs(phi_bean(max(n, 2)), n)


def convex_coeffs(n: int = 7) -> list[CaraPoly]:
    """a2..an for the sqrt(1+tanh) convex class."""
    return solve_convex_coeffs(phi_bean(max(n, 2)), n)


# -- determinant functionals -------------------------------------------


def _alist(a: Sequence[CaraPoly], need: int) -> list[CaraPoly]:
    """Normalize [a2, a3, ...] into 1-indexed [_, a1=1, a2, ...]."""
    full = [CaraPoly.zero, CaraPoly.one] + list(a)
    if len(full) < need + 1:
        raise ArityError(f"need coefficients through a{need}, got a{len(full)-1}")
    return full


def hankel_h23(a: Sequence[CaraPoly]) -> CaraPoly:
    """a3*a5 - a4^2 from a coefficient list [a2, a3, ...]."""
    f = _alist(a, 5)
    return f[3] * f[5] - f[4] * f[4]


def hankel_h31(a: Sequence[CaraPoly]) -> CaraPoly:
    """2 a2 a3 a4 - a3^3 - a4^2 - a2^2 a5 + a3 a5."""
    f = _alist(a, 5)
    return (f[2] * f[3] * f[4]).scale(2) - f[3] ** 3 - f[4] * f[4] \
        - f[2] * f[2] * f[5] + f[3] * f[5]


def hankel_h41_parts(a: Sequence[CaraPoly]) -> tuple[CaraPoly, CaraPoly, CaraPoly]:
    """The three cofactor combinations entering the 4x4 determinant:

    B1 = a6(a3 - a2^2) + a3(a2 a5 - a3 a4) - a4(a5 - a2 a4)
    B2 = a3(a3 a5 - a4^2) - a5(a5 - a2 a4) + a6(a4 - a2 a3)
    B3 = a4(a3 a5 - a4^2) - a5(a2 a5 - a3 a4) + a6(a4 - a2 a3)
    """
    f = _alist(a, 6)
    b1 = f[6] * (f[3] - f[2] * f[2]) + f[3] * (f[2] * f[5] - f[3] * f[4]) \
        - f[4] * (f[5] - f[2] * f[4])
    b2 = f[3] * (f[3] * f[5] - f[4] * f[4]) - f[5] * (f[5] - f[2] * f[4]) \
        + f[6] * (f[4] - f[2] * f[3])
    b3 = f[4] * (f[3] * f[5] - f[4] * f[4]) - f[5] * (f[2] * f[5] - f[3] * f[4]) \
        + f[6] * (f[4] - f[2] * f[3])
    return b1, b2, b3


def eval_poly(poly: CaraPoly, p1, p2=0, p3=0, p4=0, p5=0):
    return poly.eval(p1, p2, p3, p4, p5)


def a4_schwarz_functional(w1, w2, w3):
    """w3 + w1*w2/4 - 13*w1^3/48, the normalized fourth-coefficient form.

    Exact when the inputs are rational; complex otherwise.
    """
    if all(isinstance(v, (int, Fraction)) for v in (w1, w2, w3)):
        return w3 + Fraction(1, 4) * w1 * w2 - Fraction(13, 48) * w1**3
    return w3 + w1 * w2 / 4 - 13 * w1**3 / 48
