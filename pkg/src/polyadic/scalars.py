"""Exact Gaussian-rational scalars a + b*i with a, b rational.

Both parts are exact rationals kept in lowest terms with a positive
denominator.  ``gmpy2.mpq`` is used when available because it is an order of
magnitude faster than :class:`fractions.Fraction`, which is the fallback.
A Scalar is canonical at construction, so structural equality and hashing
are exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

try:
    from gmpy2 import mpq as _Q
    _QTYPE = type(_Q(0))
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _Q = Fraction
    _QTYPE = Fraction


class ScalarParseError(ValueError):
    """Malformed scalar text.  ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _as_fraction(x):
    if type(x) is _QTYPE:
        return x
    if isinstance(x, bool):
        return _Q(int(x))
    if isinstance(x, (int, Fraction, str)) or type(x).__name__ in ("mpz", "mpq"):
        return _Q(x)
    if isinstance(x, Rational):
        return _Q(x.numerator, x.denominator)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def rational(num, den=1):
    """Exact rational in the backing representation."""
    return _Q(num, den)


_F0 = _Q(0)


def _new(re: Fraction, im: Fraction) -> "Scalar":
    obj = object.__new__(Scalar)
    _set_re(obj, re)
    _set_im(obj, im)
    return obj


class Scalar:
    """Immutable exact complex rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        _set_re(self, _as_fraction(re))
        _set_im(self, _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # construction helpers
    @classmethod
    def coerce(cls, x) -> "Scalar":
        if type(x) is Scalar:
            return x
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return scalar_parse(x)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x, 0)

    # predicates
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # arithmetic
    def __add__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return _new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return _new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return _new(a * c, _F0)
            return _new(a * c if c else _F0, a * d)
        if not d:
            return _new(a * c if a else _F0, b * c)
        return _new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return _new(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "Scalar":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by the zero scalar")
            return _new(_Q(1) / self.re, _F0)
        n = self.norm2()
        return _new(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison and hashing
    def __eq__(self, other):
        if type(other) is Scalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, _QTYPE)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({scalar_format(self)!r})"

    def __str__(self):
        return scalar_format(self)

    def sort_key(self):
        return (self.re, self.im)


_set_re = Scalar.re.__set__
_set_im = Scalar.im.__set__


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _fmt_fraction(f) -> str:
    if f.denominator == 1:
        return str(int(f.numerator))
    return f"{int(f.numerator)}/{int(f.denominator)}"


def scalar_format(x: Scalar) -> str:
    """Canonical text: ``"0"``, ``"a/b"``, ``"c/d i"``, ``"a/b+c/d i"``."""
    if x.is_zero():
        return "0"
    parts = []
    if x.re != 0:
        parts.append(_fmt_fraction(x.re))
    if x.im != 0:
        mag = _fmt_fraction(abs(x.im))
        sign = "-" if x.im < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag} i")
    return "".join(parts)


_NUM = re.compile(r"(\d+)(?:/(\d+))?")


def _parse_number(text: str, pos: int):
    m = _NUM.match(text, pos)
    if not m:
        return None, pos
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ScalarParseError("zero denominator", m.start(2))
    return _Q(num, den), m.end()


def scalar_parse(text: str) -> Scalar:
    """Parse ``[+-a/b][+-c/d i]``.

    Whitespace is allowed between a number and the ``i`` marker and around
    the sign joining the two parts.  A bare ``i`` means coefficient one.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ScalarParseError("empty scalar", offset)
    pos = 0
    n = len(s)
    re_part = _Q(0)
    im_part = _Q(0)
    seen_real = seen_imag = False

    def skip_ws(p):
        while p < n and s[p].isspace():
            p += 1
        return p

    while pos < n:
        start = pos
        sign = 1
        had_sign = False
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            had_sign = True
            pos = skip_ws(pos + 1)
        elif seen_real:
            if s[pos].isdigit() or s[pos] == "i":
                raise ScalarParseError("expected sign before imaginary part", offset + pos)
            raise ScalarParseError(f"unexpected character {s[pos]!r}", offset + pos)
        value, pos2 = _parse_number(s, pos)
        after = skip_ws(pos2)
        if after < n and s[after] == "i":
            if seen_imag:
                raise ScalarParseError("duplicate imaginary part", offset + after)
            if seen_real and not had_sign:
                raise ScalarParseError("expected sign before imaginary part", offset + start)
            im_part = sign * (value if value is not None else _Q(1))
            seen_imag = True
            pos = skip_ws(after + 1)
        else:
            if value is None:
                raise ScalarParseError("expected a number", offset + pos)
            if seen_real or seen_imag:
                raise ScalarParseError("unexpected real part", offset + start)
            re_part = sign * value
            seen_real = True
            pos = skip_ws(pos2)
    return Scalar(re_part, im_part)


def scalar_arith(a: Scalar, b: Scalar, kind: str) -> Scalar:
    """Dispatch ``kind`` in {add, mul, sub, div} on two scalars."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def gauss(re, im=0) -> Scalar:
    return Scalar(re, im)
