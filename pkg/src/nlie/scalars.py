"""Exact scalars over Q and the Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
are :class:`GaussianRational` pairs of fractions.  Python ints are accepted
as field-neutral constants by both, which keeps signs and binomial
coefficients cheap inside the hot loops.

The checked entry point :func:`field_arith` enforces matching field tags;
ordinary operators promote ``Fraction`` to ``GaussianRational`` the way the
numeric tower does.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, FieldMismatch, ParseError


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with canonical fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        if not d:
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise DivisionByZero("zero has no inverse in Q(i)")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self * GaussianRational(*p).inverse()

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(*p) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return QQI.format(self)


class Field:
    """A coefficient field tag with coercion, parsing and formatting."""

    def __init__(self, name: str, gaussian: bool):
        self.name = name
        self.gaussian = gaussian

    def __repr__(self):
        return f"Field({self.name!r})"

    def __reduce__(self):
        return (get_field, (self.name,))

    @property
    def zero(self):
        return GaussianRational(0) if self.gaussian else Fraction(0)

    @property
    def one(self):
        return GaussianRational(1) if self.gaussian else Fraction(1)

    def coerce(self, x):
        """Return ``x`` as a canonical element of this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.gaussian:
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, (int, Fraction, _RationalABC)):
                return GaussianRational(x)
            if isinstance(x, complex):
                raise FieldMismatch("floating-point complex values are not exact")
        else:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, (int, _RationalABC)):
                return Fraction(x)
            if isinstance(x, GaussianRational):
                if x.im:
                    raise FieldMismatch(f"{QQI.format(x)} is not rational")
                return x.re
        raise FieldMismatch(f"cannot interpret {x!r} as an element of {self.name}")

    def contains(self, x) -> bool:
        if self.gaussian:
            return isinstance(x, GaussianRational)
        return isinstance(x, Fraction)

    def parse(self, text: str):
        return parse_scalar(text, self)

    def format(self, x) -> str:
        return format_scalar(x)


QQ = Field("Q", gaussian=False)
QQI = Field("Q(i)", gaussian=True)
_FIELDS = {"Q": QQ, "Q(i)": QQI, "QQ": QQ, "QQ(i)": QQI}


def get_field(name) -> Field:
    if isinstance(name, Field):
        return name
    try:
        return _FIELDS[name]
    except KeyError:
        raise FieldMismatch(f"unknown field {name!r}; expected 'Q' or 'Q(i)'") from None


def field_of(x) -> Field:
    if isinstance(x, GaussianRational):
        return QQI
    if isinstance(x, Fraction):
        return QQ
    raise FieldMismatch(f"{x!r} is not a field scalar")


def common_field(*fields: Field) -> Field:
    fields = [get_field(f) for f in fields]
    if any(f is not fields[0] for f in fields):
        raise FieldMismatch("mixed field tags: " + ", ".join(f.name for f in fields))
    return fields[0]


def field_arith(a, b, op: str):
    """Checked arithmetic: both operands must carry the same field tag.

    ``b`` is ignored for the unary operations ``neg`` and ``inv``.
    """
    fa = field_of(a)
    if op in ("neg", "inv"):
        if op == "neg":
            return -a
        if not a:
            raise DivisionByZero("zero has no inverse")
        return a.inverse() if fa.gaussian else 1 / a
    if field_of(b) is not fa:
        raise FieldMismatch(f"cannot combine {fa.name} with {field_of(b).name}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return fa.coerce(a * b)
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return fa.coerce(a / b)
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


# -- text format -------------------------------------------------------------

_MINUS = "-−"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def sign(self):
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return 1
        if ch and ch in _MINUS:
            self.pos += 1
            return -1
        return None

    def digits(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            return None
        return int(self.text[start:self.pos])

    def rational(self, allow_missing=False):
        """Unsigned ``int`` or ``int/posint``; None when absent and allowed."""
        start = self.pos
        num = self.digits()
        if num is None:
            if allow_missing:
                return None
            raise ParseError("expected a digit", self.pos if self.pos < len(self.text) else start)
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            den = self.digits()
            if den is None:
                raise ParseError("expected a denominator", at)
            if den == 0:
                raise ParseError("zero denominator", at)
            return Fraction(num, den)
        return Fraction(num)


def parse_scalar(text: str, field=QQ):
    """Parse ``int | int/posint | <rat>(+|-)<rat>i | (+|-)<rat>i``.

    A bare ``i`` stands for coefficient one.  Unicode minus is accepted.
    """
    field = get_field(field)
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 0)
    sc = _Scanner(text)
    if not sc.peek():
        raise ParseError("empty scalar", 0)
    s = sc.sign() or 1
    first = sc.rational(allow_missing=True)
    re_part, im_part = Fraction(0), Fraction(0)
    if sc.peek() == "i":
        sc.pos += 1
        im_part = s * (1 if first is None else first)
    else:
        if first is None:
            raise ParseError("expected a digit", sc.pos)
        re_part = s * first
        s2 = sc.sign()
        if s2 is not None:
            second = sc.rational(allow_missing=True)
            if sc.peek() != "i":
                raise ParseError("expected 'i' after the imaginary part", sc.pos)
            sc.pos += 1
            im_part = s2 * (1 if second is None else second)
    sc.skip()
    if sc.pos != len(text):
        raise ParseError(f"unexpected character {text[sc.pos]!r}", sc.pos)
    if field.gaussian:
        return GaussianRational(re_part, im_part)
    if im_part:
        raise FieldMismatch(f"imaginary part in {text!r} under field Q")
    return re_part


def _fmt_rat(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text form; always reparses to an equal value."""
    if isinstance(x, GaussianRational):
        if not x.im:
            return _fmt_rat(x.re)
        mag = abs(x.im)
        im_txt = "" if mag == 1 else _fmt_rat(mag)
        if not x.re:
            return ("-" if x.im < 0 else "") + im_txt + "i"
        return _fmt_rat(x.re) + ("-" if x.im < 0 else "+") + im_txt + "i"
    return _fmt_rat(x)
