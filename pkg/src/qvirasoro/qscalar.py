"""Scalars for q-calculus: exact rational functions of q and numeric q.

Two scalar fields are provided. ``EXACT`` works with :class:`QExact`, a
canonical rational function in ``q`` with integer coefficients, and is used
for every algebraic verification. ``NumericField(q)`` works with plain
Python ``complex`` values at a fixed complex ``q`` and is used by the
simulator. Values from different fields are never mixed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Complex

from . import _poly
from .errors import ConstraintError, MixedScalarError


@dataclass(frozen=True)
class QExact:
    """``q**shift * num(q) / den(q)`` in canonical form.

    ``num`` and ``den`` are integer polynomials (low degree first) with
    nonzero constant terms, coprime, jointly content-free, and ``den`` has a
    positive leading coefficient. Zero is ``num=(), den=(1,), shift=0``.
    Because the form is canonical, ``==`` is structural.
    """

    num: tuple = ()
    den: tuple = (1,)
    shift: int = 0

    # construction -------------------------------------------------------

    @classmethod
    def make(cls, num, den=(1,), shift: int = 0, reduced: bool = False) -> "QExact":
        """Normalize an arbitrary ``q**shift * num/den`` into canonical form."""
        num = _poly.trim(num)
        den = _poly.trim(den)
        if not den:
            raise ZeroDivisionError("QExact with zero denominator")
        if not num:
            return ZERO
        k = _poly.low_order(num)
        if k:
            num = num[k:]
            shift += k
        k = _poly.low_order(den)
        if k:
            den = den[k:]
            shift -= k
        if not reduced and len(den) > 1 and len(num) > 1:
            g = _poly.gcd(num, den)
            if len(g) > 1:
                num = _poly.divexact(num, g)
                den = _poly.divexact(den, g)
        c = _poly.content(num + den)
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        return cls(num, den, shift)

    @classmethod
    def laurent(cls, coeffs: dict) -> "QExact":
        """Build from a mapping ``power of q -> integer coefficient``."""
        coeffs = {k: v for k, v in coeffs.items() if v}
        if not coeffs:
            return ZERO
        lo, hi = min(coeffs), max(coeffs)
        return cls.make([coeffs.get(i, 0) for i in range(lo, hi + 1)], (1,), lo)

    @classmethod
    def coerce(cls, x) -> "QExact":
        if isinstance(x, QExact):
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return cls.make((x,)) if x else ZERO
        if isinstance(x, Fraction):
            return cls.make((x.numerator,), (x.denominator,))
        raise MixedScalarError(f"cannot combine exact scalar with {type(x).__name__}")

    # queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def evaluate(self, x):
        """Value at a numeric point ``q = x`` (Fraction in, Fraction out)."""
        if isinstance(x, int):
            x = Fraction(x)
        return x ** self.shift * _poly.evaluate(self.num, x) / _poly.evaluate(self.den, x)

    def __bool__(self) -> bool:
        return bool(self.num)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = QExact.coerce(other)
        except MixedScalarError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        s = min(self.shift, other.shift)
        n1 = _poly.shift(self.num, self.shift - s)
        n2 = _poly.shift(other.num, other.shift - s)
        if self.den == other.den:
            return QExact.make(_poly.add(n1, n2), self.den, s)
        g = _poly.gcd(self.den, other.den)
        d1 = _poly.divexact(self.den, g)
        d2 = _poly.divexact(other.den, g)
        num = _poly.add(_poly.mul(n1, d2), _poly.mul(n2, d1))
        return QExact.make(num, _poly.mul(d1, other.den), s)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return QExact(_poly.neg(self.num), self.den, self.shift)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = QExact.coerce(other)
        except MixedScalarError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QExact.coerce(other)
        except MixedScalarError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if len(d1) > 1 or len(d2) > 1:
            g = _poly.gcd(n1, d2)
            if len(g) > 1:
                n1, d2 = _poly.divexact(n1, g), _poly.divexact(d2, g)
            g = _poly.gcd(n2, d1)
            if len(g) > 1:
                n2, d1 = _poly.divexact(n2, g), _poly.divexact(d1, g)
        return QExact.make(_poly.mul(n1, n2), _poly.mul(d1, d2),
                           self.shift + other.shift, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QExact":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return QExact.make(self.den, self.num, -self.shift, reduced=True)

    def __truediv__(self, other):
        try:
            other = QExact.coerce(other)
        except MixedScalarError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QExact.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QExact):
            return (self.num, self.den, self.shift) == (other.num, other.den, other.shift)
        try:
            other = QExact.coerce(other)
        except MixedScalarError:
            return NotImplemented
        return self == other

    def __hash__(self):
        return hash((self.num, self.den, self.shift))

    # display ------------------------------------------------------------

    def __str__(self) -> str:
        top = _laurent_str(self.num, self.shift)
        if self.den == (1,):
            return top
        return f"({top})/({_laurent_str(self.den, 0)})"


def _laurent_str(c: tuple, shift: int) -> str:
    if not c:
        return "0"
    parts = []
    for i, x in enumerate(c):
        if not x:
            continue
        e = i + shift
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if not mono:
            s = str(abs(x))
        elif abs(x) == 1:
            s = mono
        else:
            s = f"{abs(x)}*{mono}"
        parts.append(("-" if x < 0 else "+", s))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {sg} {s}" for sg, s in parts[1:])


ZERO = QExact()
ONE = QExact((1,), (1,), 0)


# ---------------------------------------------------------------------------
# scalar fields


class ExactField:
    """Scalars are :class:`QExact`; ``q`` is the formal variable."""

    kind = "exact"

    def __repr__(self):
        return "EXACT"

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    @property
    def q(self) -> QExact:
        return _exact_qpow(1)

    def qpow(self, k: int) -> QExact:
        return _exact_qpow(k)

    def qint(self, m: int) -> QExact:
        return _exact_qint(m)

    def qangle(self, m: int) -> QExact:
        return _exact_qangle(m)

    def qgamma(self, m: int) -> QExact:
        return _exact_qgamma(m)

    def coerce(self, x) -> QExact:
        return QExact.coerce(x)

    def is_zero(self, x) -> bool:
        return not x


@lru_cache(maxsize=None)
def _exact_qpow(k: int) -> QExact:
    return QExact((1,), (1,), k)


@lru_cache(maxsize=None)
def _exact_qint(m: int) -> QExact:
    if m == 0:
        return ZERO
    if m < 0:
        return -_exact_qint(-m)
    # q^(m-1) + q^(m-3) + ... + q^(1-m)
    c = [0] * (2 * m - 1)
    c[::2] = [1] * m
    return QExact(tuple(c), (1,), 1 - m)


@lru_cache(maxsize=None)
def _exact_qangle(m: int) -> QExact:
    if m == 0:
        return QExact((2,), (1,), 0)
    m = abs(m)
    return QExact((1,) + (0,) * (2 * m - 1) + (1,), (1,), -m)


@lru_cache(maxsize=None)
def _exact_qgamma(m: int) -> QExact:
    top = _exact_qint(m + 1) * _exact_qint(m) * _exact_qint(m - 1)
    return top / (_exact_qint(2) * _exact_qint(3) * _exact_qangle(m))


EXACT = ExactField()


@dataclass(frozen=True)
class NumericField:
    """Scalars are Python complex numbers evaluated at a fixed complex ``q``.

    Supported parameter domains are real ``q > 0`` (``q != 1``) and
    unimodular ``q = exp(i*eps)``; any other nonzero ``q`` off ``{1, -1}`` is
    accepted but not recommended.
    """

    q: complex
    kind = "numeric"

    def __post_init__(self):
        q = complex(self.q)
        object.__setattr__(self, "q", q)
        if q == 0 or q == 1 or q == -1:
            raise ValueError(f"deformation parameter q={q} is not allowed")

    @classmethod
    def real(cls, q: float) -> "NumericField":
        return cls(complex(q, 0.0))

    @classmethod
    def unimodular(cls, arg: float) -> "NumericField":
        import cmath

        return cls(cmath.exp(1j * arg))

    @property
    def zero(self):
        return 0j

    @property
    def one(self):
        return 1 + 0j

    def qpow(self, k: int) -> complex:
        return _num_qpow(self.q, k)

    def qint(self, m: int) -> complex:
        if m < 0:
            return -self.qint(-m)
        # summed form avoids cancellation in (q^m - q^-m)/(q - 1/q) near q = 1
        return sum((self.qpow(m - 1 - 2 * j) for j in range(m)), 0j)

    def qangle(self, m: int) -> complex:
        return self.qpow(m) + self.qpow(-m)

    def qgamma(self, m: int) -> complex:
        top = self.qint(m + 1) * self.qint(m) * self.qint(m - 1)
        return top / (self.qint(2) * self.qint(3) * self.qangle(m))

    def coerce(self, x) -> complex:
        if isinstance(x, QExact):
            raise MixedScalarError("cannot combine numeric scalar with an exact one")
        if isinstance(x, Complex):
            return complex(x)
        if isinstance(x, Fraction):
            return complex(float(x))
        raise MixedScalarError(f"cannot use {type(x).__name__} as a numeric scalar")

    def is_zero(self, x) -> bool:
        return x == 0

    def min_angle(self, n_max: int) -> float:
        """min |<n>| over |n| <= n_max; small values flag a near root of unity."""
        return min(abs(self.qangle(n)) for n in range(n_max + 1))


@lru_cache(maxsize=4096)
def _num_qpow(q: complex, k: int) -> complex:
    return q ** k


# ---------------------------------------------------------------------------
# q-numbers


def qint(m: int, field=EXACT):
    """q-integer ``[m] = (q^m - q^-m)/(q - q^-1)``."""
    return field.qint(m)


def qangle(m: int, field=EXACT):
    """``<m> = q^m + q^-m``."""
    return field.qangle(m)


def qgamma(m: int, field=EXACT):
    """Central coefficient ``[m+1][m][m-1] / ([2][3]<m>)``; odd in ``m``."""
    return field.qgamma(m)


def cocycle_norm(field=EXACT):
    """The normalisation ``a = 1/([2][3])`` of the cocycle."""
    one = field.one
    return one / (field.qint(2) * field.qint(3))


# ---------------------------------------------------------------------------
# scalar identities; each *_sides function returns (lhs, rhs)


def identity_Z_sides(m: int, n: int, p: int, field=EXACT):
    B, A = field.qint, field.qangle
    lhs = (B(m - n) * B(m + n - p) * A(p)
           + B(n - p) * B(n + p - m) * A(m)
           + B(p - m) * B(p + m - n) * A(n))
    return lhs, field.zero


def identity_X_sides(m: int, n: int, p: int, field=EXACT):
    if m + n + p != 0:
        raise ConstraintError(f"identity X needs m+n+p=0, got {m}+{n}+{p}")
    B = field.qint

    def cube(k):
        return B(k + 1) * B(k) * B(k - 1)

    lhs = cube(p) * B(m - n) + cube(m) * B(n - p) + cube(n) * B(p - m)
    return lhs, field.zero


def identity_Y_sides(m: int, n: int, field=EXACT):
    B = field.qint
    lhs = (B(m + 1) * B(m) * B(m - 1) * B(2 * n + m)
           - B(m + n - 1) * B(m + n) * B(m + n + 1) * B(m - n)
           - B(n + 1) * B(n) * B(n - 1) * B(n + 2 * m))
    return lhs, field.zero


def identity_W_sides(m: int, n: int, field=EXACT):
    # outer square brackets are grouping; equals (q - 1/q)^4 times the Y form
    A = field.qangle
    lhs = ((A(2 * m + 1) - A(1)) * (A(2 * n + 2 * m - 1) - A(2 * n + 1))
           - (A(2 * m + 2 * n - 1) - A(1)) * (A(2 * m + 1) - A(2 * n + 1))
           - (A(2 * n + 1) - A(1)) * (A(2 * n + 2 * m - 1) - A(2 * m + 1)))
    return lhs, field.zero


def identity_A10_sides(m: int, n: int, field=EXACT):
    B = field.qint
    lhs = field.qpow(m + 1) * B(n + 1) - field.qpow(n + 1) * B(m + 1)
    return lhs, B(n - m)


def check_identity_Z(m: int, n: int, p: int) -> bool:
    lhs, rhs = identity_Z_sides(m, n, p)
    return lhs == rhs


def check_identity_X(m: int, n: int, p: int) -> bool:
    lhs, rhs = identity_X_sides(m, n, p)
    return lhs == rhs


def check_identity_Y(m: int, n: int) -> bool:
    lhs, rhs = identity_Y_sides(m, n)
    return lhs == rhs


def check_identity_W(m: int, n: int) -> bool:
    lhs, rhs = identity_W_sides(m, n)
    return lhs == rhs


def check_identity_A10(m: int, n: int) -> bool:
    lhs, rhs = identity_A10_sides(m, n)
    return lhs == rhs
