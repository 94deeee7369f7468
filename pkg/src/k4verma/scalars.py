"""Exact arithmetic in the Gaussian rationals Q(i).

A value is stored as ``(p + q*i) / d`` with integers p, q, d, where d > 0 and
gcd(p, q, d) == 1.  The representation is canonical, so equality and hashing
are structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "ZERO", "ONE", "I", "gq", "field_arithmetic"]


class GaussianRational:
    __slots__ = ("_p", "_q", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        p = re.numerator * (d // re.denominator)
        q = im.numerator * (d // im.denominator)
        self._set(p, q, d)

    def _set(self, p, q, d):
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(gcd(p, q), d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        self._p, self._q, self._d = p, q, d

    @classmethod
    def _raw(cls, p, q, d):
        obj = cls.__new__(cls)
        obj._set(p, q, d)
        return obj

    @property
    def re(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._q, self._d)

    def is_zero(self) -> bool:
        return self._p == 0 and self._q == 0

    def is_real(self) -> bool:
        return self._q == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._p * self._p + self._q * self._q, self._d * self._d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._p + o._p, self._q + o._q, self._d)
        return GaussianRational._raw(
            self._p * o._d + o._p * self._d, self._q * o._d + o._q * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._p, -self._q, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(
            self._p * o._p - self._q * o._q, self._p * o._q + self._q * o._p, self._d * o._d
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        n = self._p * self._p + self._q * self._q
        return GaussianRational._raw(self._p * self._d, -self._q * self._d, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o._p and self._q == o._q and self._d == o._d

    def __hash__(self):
        if self._q == 0:
            return hash(Fraction(self._p, self._d))
        return hash((self._p, self._q, self._d))

    def __bool__(self):
        return not self.is_zero()

    # text form ------------------------------------------------------------

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return _fmt(re_)
        if im_ == 1:
            ims = "i"
        elif im_ == -1:
            ims = "-i"
        else:
            ims = _fmt(im_) + "*i"
        if re_ == 0:
            return ims
        sep = "" if ims.startswith("-") else "+"
        return _fmt(re_) + sep + ims

    def __repr__(self):
        return f"GaussianRational({self})"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse the text form ``a/b+c/d*i``; either part may be omitted."""
        s = text.replace(" ", "")
        if not s.endswith("i"):
            return cls(_frac(s), 0)
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        re_txt, im_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
        if im_txt.endswith("*"):
            im_txt = im_txt[:-1]
            if im_txt in ("", "+", "-"):
                raise ValueError(f"cannot parse scalar {text!r}")
        im_ = {"": 1, "+": 1, "-": -1}.get(im_txt)
        if im_ is None:
            im_ = _frac(im_txt)
        return cls(_frac(re_txt) if re_txt else 0, im_)


def _frac(s: str) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ValueError(f"cannot parse scalar part {s!r}")
    return Fraction(s)


def _fmt(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational(x)
    if isinstance(x, complex):
        raise TypeError("floating-point complex values are not accepted")
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; string arguments are parsed as text."""
    if isinstance(re, str) or isinstance(im, str):
        real = GaussianRational.parse(re) if isinstance(re, str) else GaussianRational(re)
        imag = GaussianRational.parse(im) if isinstance(im, str) else GaussianRational(im)
        return real + imag * I
    return GaussianRational(re, im)


def field_arithmetic(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
