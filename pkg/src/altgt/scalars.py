"""Exact arithmetic for every coefficient this package produces.

A value is a finite sum  sum_q  c_q * sqrt(q)  where q runs over squarefree
positive integers (q = 1 is the rational part) and each c_q is a Gaussian
rational a + b*i with a, b exact fractions.  This set is closed under
addition, multiplication and complex conjugation, and it contains everything
needed here: orthogonal-representation matrix entries are of the form 1/r
and sqrt(1 - 1/r^2) for integer r, and basis-change coefficients are fourth
roots of unity.  Equality is structural on canonical forms, so identities
are checked exactly, never with tolerances.

Canonical form: no zero coefficients are stored, and every radicand is
squarefree.  Products of radicals reduce via gcd:
sqrt(q1)*sqrt(q2) = g*sqrt(q1*q2/g^2) with g = gcd(q1, q2).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def split_square(m: int) -> tuple[int, int]:
    """Write m >= 1 as g*g*q with q squarefree; return (g, q)."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    g, q, d = 1, 1, 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            g *= d ** (e // 2)
            if e % 2:
                q *= d
        d += 1
    return g, q * m


def _fraction_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


class GaussianRational:
    """A complex number re + im*i with exact rational parts.

    Instances are immutable by convention; arithmetic returns new objects.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return _fraction_str(self.re)
        if self.im == 1:
            im_part = "i"
        elif self.im == -1:
            im_part = "-i"
        else:
            im_part = f"{_fraction_str(self.im)}*i"
        if self.re == 0:
            return im_part
        joiner = "+" if not im_part.startswith("-") else ""
        return f"{_fraction_str(self.re)}{joiner}{im_part}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def latex(self) -> str:
        def frac(f: Fraction, unit: str = "") -> str:
            sign = "-" if f < 0 else ""
            f = abs(f)
            if f.denominator == 1:
                body = unit if f == 1 and unit else f"{f.numerator}{unit}"
            else:
                body = f"\\frac{{{f.numerator}}}{{{f.denominator}}}{unit}"
            return sign + body

        if self.im == 0:
            return frac(self.re)
        im_part = frac(self.im, "i")
        if self.re == 0:
            return im_part
        joiner = "" if im_part.startswith("-") else "+"
        return f"{frac(self.re)}{joiner}{im_part}"


_GAUSS_ZERO = GaussianRational(0, 0)
_GAUSS_ONE = GaussianRational(1, 0)


class Scalar:
    """Element of the coefficient ring: a map radicand -> Gaussian rational.

    Construct through the classmethods (``rational``, ``gaussian``) or the
    module helpers (``sqrt_rational``, ``i_power``); the constructor accepts
    a terms mapping and canonicalizes it.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[int, GaussianRational] = {}
        if terms:
            for q, coeff in terms.items():
                if not isinstance(coeff, GaussianRational):
                    coeff = GaussianRational(coeff)
                if coeff.is_zero():
                    continue
                g, reduced = split_square(q)
                if g != 1:
                    coeff = coeff * g
                clean[reduced] = clean.get(reduced, _GAUSS_ZERO) + coeff
                if clean[reduced].is_zero():
                    del clean[reduced]
        self._terms = {q: clean[q] for q in sorted(clean)}

    @classmethod
    def rational(cls, value) -> "Scalar":
        return cls({1: GaussianRational(value)})

    @classmethod
    def gaussian(cls, re, im) -> "Scalar":
        return cls({1: GaussianRational(re, im)})

    def terms(self) -> tuple[tuple[int, GaussianRational], ...]:
        return tuple(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_rational(self) -> bool:
        return all(q == 1 and c.im == 0 for q, c in self._terms.items())

    def as_rational(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self}")
        return self._terms[1].re

    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for q, c in other._terms.items():
            merged[q] = merged.get(q, _GAUSS_ZERO) + c
        return Scalar(merged)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Scalar":
        return Scalar({q: -c for q, c in self._terms.items()})

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, GaussianRational] = {}
        for q1, c1 in self._terms.items():
            for q2, c2 in other._terms.items():
                g = math.gcd(q1, q2)
                q = (q1 // g) * (q2 // g)
                out[q] = out.get(q, _GAUSS_ZERO) + (c1 * c2) * g
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Invert a single-term value g*sqrt(q); general sums are not supported."""
        if not self._terms:
            raise ZeroDivisionError("inverse of zero")
        if len(self._terms) != 1:
            raise ValueError(f"only one-term values are invertible, got {self}")
        ((q, c),) = self._terms.items()
        # 1/(c*sqrt(q)) = (1/(c*q)) * sqrt(q)
        return Scalar({q: c.inverse() * Fraction(1, q)})

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar({q: c.conjugate() for q, c in self._terms.items()})

    def as_fourth_root(self):
        """Return 1, -1, 1j or -1j when the value is that root of unity, else None."""
        if len(self._terms) != 1 or 1 not in self._terms:
            return None
        c = self._terms[1]
        for root in (complex(1), complex(-1), 1j, -1j):
            if c.re == root.real and c.im == root.imag:
                return root
        return None

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for q, c in self._terms.items():
            cs = str(c)
            mixed = "+" in cs[1:] or "-" in cs[1:]
            wrapped = f"({cs})" if mixed else cs
            if q == 1:
                parts.append(wrapped if len(self._terms) > 1 else cs)
            elif c == _GAUSS_ONE:
                parts.append(f"sqrt({q})")
            elif c == -_GAUSS_ONE:
                parts.append(f"-sqrt({q})")
            else:
                parts.append(f"{wrapped}*sqrt({q})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self._terms!r})"

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for q, c in self._terms.items():
            cl = c.latex()
            mixed = "+" in cl[1:] or "-" in cl[1:]
            if q == 1:
                parts.append(f"\\left({cl}\\right)" if mixed and len(self._terms) > 1 else cl)
            else:
                rad = f"\\sqrt{{{q}}}"
                if c == _GAUSS_ONE:
                    parts.append(rad)
                elif c == -_GAUSS_ONE:
                    parts.append("-" + rad)
                elif mixed:
                    parts.append(f"\\left({cl}\\right){rad}")
                else:
                    parts.append(f"{cl}{rad}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        out = []
        for q, c in self._terms.items():
            entry = {"radicand": q, "re": _fraction_str(c.re), "im": _fraction_str(c.im)}
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, data) -> "Scalar":
        terms: dict[int, GaussianRational] = {}
        for entry in data:
            q = entry["radicand"]
            if not isinstance(q, int) or q < 1:
                raise ValueError(f"invalid radicand {q!r}")
            coeff = GaussianRational(Fraction(entry.get("re", 0)), Fraction(entry.get("im", 0)))
            if q in terms:
                raise ValueError(f"duplicate radicand {q}")
            terms[q] = coeff
        return cls(terms)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.rational(value)
    if isinstance(value, GaussianRational):
        return Scalar({1: value})
    return NotImplemented


ZERO = Scalar()
ONE = Scalar.rational(1)
I = Scalar.gaussian(0, 1)


def sqrt_rational(value) -> Scalar:
    """Exact square root of a nonnegative rational, e.g. 3/4 -> (1/2)*sqrt(3)."""
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"square root of negative rational {value}")
    if value == 0:
        return ZERO
    a, b = value.numerator, value.denominator
    # sqrt(a/b) = sqrt(a*b)/b
    g, q = split_square(a * b)
    return Scalar({q: GaussianRational(Fraction(g, b))})


def i_power(k: int) -> Scalar:
    """i**k for any integer k."""
    return (ONE, I, -ONE, -I)[k % 4]
