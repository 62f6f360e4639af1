"""Laurent polynomial fields on the circle and the q-difference calculus.

A field ``v(z) = sum v_n z^n`` is a :class:`LaurentPoly` over one scalar
field (exact or numeric). Operators act on modes:

* ``dq``: ``z^n -> [n] z^(n-1)``
* ``tau(f, k)``: ``z^n -> q^(kn) z^n``
* ``theta``: ``z^n -> z^n / <n>``, the inverse of ``tau + tau^-1``
* ``integrate``: the ``z^-1`` coefficient
"""
from __future__ import annotations

from typing import Callable, Iterator, Mapping

import numpy as np

from .errors import DivergentSeriesError, MixedScalarError, VanishingAngleError
from .qscalar import EXACT, NumericField

# |<n>| below this is treated as a vanishing angle in numeric fields
ANGLE_TOL = 1e-8

_DENSE_MIN = 64


class LaurentPoly:
    """Finitely supported map from integer exponents to scalars of one field."""

    __slots__ = ("_c", "field", "_lo", "_hi")

    def __init__(self, coeffs: Mapping[int, object] | None = None, field=EXACT):
        clean = {}
        for n, c in (coeffs or {}).items():
            c = field.coerce(c)
            if c != 0:
                clean[int(n)] = c
        self._set(clean, field)

    @classmethod
    def _raw(cls, coeffs: dict, field) -> "LaurentPoly":
        # coeffs already coerced; zeros are dropped here
        obj = cls.__new__(cls)
        obj._set({n: c for n, c in coeffs.items() if c != 0}, field)
        return obj

    def _set(self, coeffs: dict, field):
        self._c = coeffs
        self.field = field
        if coeffs:
            self._lo, self._hi = min(coeffs), max(coeffs)
        else:
            self._lo = self._hi = None

    # queries --------------------------------------------------------------

    @property
    def min_exp(self) -> int | None:
        return self._lo

    @property
    def max_exp(self) -> int | None:
        return self._hi

    def coeff(self, n: int):
        return self._c.get(n, self.field.zero)

    def items(self) -> Iterator[tuple[int, object]]:
        return iter(sorted(self._c.items()))

    def support(self) -> list[int]:
        return sorted(self._c)

    def to_dict(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self._c)

    # arithmetic -----------------------------------------------------------

    def _same_field(self, other: "LaurentPoly"):
        if other.field != self.field:
            raise MixedScalarError(f"cannot combine fields {self.field!r} and {other.field!r}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._same_field(other)
        out = dict(self._c)
        for n, c in other._c.items():
            out[n] = out[n] + c if n in out else c
        return LaurentPoly._raw(out, self.field)

    def __neg__(self):
        return LaurentPoly._raw({n: -c for n, c in self._c.items()}, self.field)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return mul(self, other)
        s = self.field.coerce(other)
        return LaurentPoly._raw({n: s * c for n, c in self._c.items()}, self.field)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    __hash__ = None

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({c})*z^{n}" for n, c in self.items())
        return f"LaurentPoly({terms})"


def monomial(n: int, c=1, field=EXACT) -> LaurentPoly:
    """``c * z^n``."""
    return LaurentPoly({n: c}, field)


def zero(field=EXACT) -> LaurentPoly:
    return LaurentPoly({}, field)


def _diag(f: LaurentPoly, weight: Callable[[int], object]) -> LaurentPoly:
    return LaurentPoly._raw({n: weight(n) * c for n, c in f._c.items()}, f.field)


# ---------------------------------------------------------------------------
# operators


def dq(f: LaurentPoly) -> LaurentPoly:
    """Jackson-type derivative ``z^n -> [n] z^(n-1)``."""
    qint = f.field.qint
    return LaurentPoly._raw({n - 1: qint(n) * c for n, c in f._c.items()}, f.field)


def tau(f: LaurentPoly, k: int = 1) -> LaurentPoly:
    """``tau^k``: ``f(z) -> f(q^k z)``."""
    if k == 0:
        return f
    qpow = f.field.qpow
    return _diag(f, lambda n: qpow(k * n))


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Pointwise product (convolution of exponents)."""
    f._same_field(g)
    if not f._c or not g._c:
        return LaurentPoly._raw({}, f.field)
    if isinstance(f.field, NumericField) and len(f) * len(g) >= _DENSE_MIN:
        return _mul_dense(f, g)
    out: dict = {}
    for i, a in f._c.items():
        for j, b in g._c.items():
            k = i + j
            out[k] = out[k] + a * b if k in out else a * b
    return LaurentPoly._raw(out, f.field)


def _mul_dense(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    a = to_dense(f)
    b = to_dense(g)
    c = np.convolve(a, b)
    lo = f._lo + g._lo
    return LaurentPoly._raw({lo + i: complex(x) for i, x in enumerate(c)}, f.field)


def to_dense(f: LaurentPoly, lo: int | None = None, hi: int | None = None) -> np.ndarray:
    """Complex coefficient vector over ``[lo, hi]`` (default: own support)."""
    lo = f._lo if lo is None else lo
    hi = f._hi if hi is None else hi
    out = np.zeros(hi - lo + 1, dtype=complex)
    for n, c in f._c.items():
        if lo <= n <= hi:
            out[n - lo] = c
    return out


def from_dense(values, lo: int, field) -> LaurentPoly:
    return LaurentPoly._raw({lo + i: complex(x) for i, x in enumerate(values)}, field)


def plus_minus_tau(f: LaurentPoly) -> LaurentPoly:
    """``(tau + tau^-1) f``: ``z^n -> <n> z^n``."""
    return _diag(f, f.field.qangle)


def theta(f: LaurentPoly) -> LaurentPoly:
    """``(tau + tau^-1)^-1`` as exact diagonal division by ``<n>``."""
    field = f.field
    out = {}
    for n, c in f._c.items():
        ang = field.qangle(n)
        if isinstance(field, NumericField) and abs(ang) < ANGLE_TOL:
            raise VanishingAngleError(f"<{n}> = {ang} vanishes at q={field.q}")
        out[n] = c / ang
    return LaurentPoly._raw(out, field)


def theta_neumann(f: LaurentPoly, terms: int) -> LaurentPoly:
    """Partial sum ``tau * sum_{j<terms} (-1)^j tau^(2j)`` applied to ``f``.

    Converges to :func:`theta` on modes with ``|q^(2k)| < 1``. The constant
    mode is allowed although its partial sums only oscillate.
    """
    if not isinstance(f.field, NumericField):
        raise MixedScalarError("theta_neumann needs a numeric field")
    if terms < 1:
        raise ValueError("terms must be positive")
    for k in f._c:
        if k != 0 and abs(f.field.qpow(2 * k)) >= 1:
            raise DivergentSeriesError(f"mode {k}: |q^{2 * k}| >= 1 at q={f.field.q}")
    acc = zero(f.field)
    for j in range(terms):
        term = tau(f, 2 * j + 1)
        acc = acc - term if j % 2 else acc + term
    return acc


def integrate(f: LaurentPoly):
    """Circle integral: the coefficient of ``z^-1``."""
    return f.coeff(-1)


def pairing(v: LaurentPoly, a, u: LaurentPoly, c):
    """``<(v dq, a), (u, c)> = integral(v u) + a c``."""
    field = v.field
    return integrate(mul(v, u)) + field.coerce(a) * field.coerce(c)


def bracket_vec(v: LaurentPoly, w: LaurentPoly) -> LaurentPoly:
    """Coefficient field of ``[v dq, w dq] = ((tau v)(dq w) - (tau w)(dq v)) dq``."""
    return mul(tau(v, 1), dq(w)) - mul(tau(w, 1), dq(v))


# ---------------------------------------------------------------------------
# operator identities; *_sides return (lhs, rhs)


def leibniz_sides(a: LaurentPoly, b: LaurentPoly):
    lhs = dq(mul(a, b))
    rhs = mul(tau(a, 1), dq(b)) + mul(dq(a), tau(b, -1))
    return lhs, rhs


def check_leibniz(a: LaurentPoly, b: LaurentPoly) -> bool:
    lhs, rhs = leibniz_sides(a, b)
    return lhs == rhs


def A9_sides(p: int, k: int, field=EXACT):
    """``dq . z^(p+1) = q^(p+1) z^(p+1) dq + [p+1] z^p tau^-1`` on ``z^k``."""
    f = monomial(k, 1, field)
    lhs = dq(mul(monomial(p + 1, 1, field), f))
    rhs = (mul(monomial(p + 1, field.qpow(p + 1), field), dq(f))
           + mul(monomial(p, field.qint(p + 1), field), tau(f, -1)))
    return lhs, rhs


def check_A9(p: int, k: int) -> bool:
    lhs, rhs = A9_sides(p, k)
    return lhs == rhs


def A12_sides(f: LaurentPoly, g: LaurentPoly):
    lhs = f.field.qpow(1) * integrate(mul(f, g))
    rhs = integrate(mul(tau(f, -1), tau(g, -1)))
    return lhs, rhs


def check_A12(f: LaurentPoly, g: LaurentPoly) -> bool:
    lhs, rhs = A12_sides(f, g)
    return lhs == rhs


def A5_sides(n: int, field=EXACT):
    """Both commutation rules on ``z^n``.

    Returns ``[(dq tau, q tau dq), (tau^-1 dq, q dq tau^-1)]``.
    """
    f = monomial(n, 1, field)
    q = field.qpow(1)
    return [
        (dq(tau(f, 1)), tau(dq(f), 1) * q),
        (tau(dq(f), -1), dq(tau(f, -1)) * q),
    ]


def check_A5(n: int) -> bool:
    return all(lhs == rhs for lhs, rhs in A5_sides(n))
