"""The centrally extended q-Witt algebra V_q on the span of its generators.

Elements are finite combinations ``sum x_m d_m + c * chat``. The bracket is

    [d_m, d_n] = [m-n] d_{m+n} + gamma_m delta_{m+n,0} chat,

with ``chat`` central. :func:`realize` maps elements to operators on
:class:`~qvirasoro.qseries.LaurentPoly` using ``d_m -> -z^(m+1) dq`` and
``chat -> tau``; the central term is not carried by the realization.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .errors import MixedScalarError
from .qscalar import EXACT
from .qseries import LaurentPoly, dq, monomial, mul, tau, zero


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    d_part: dict = dc_field(default_factory=dict)
    central: object = None
    field: object = EXACT

    def __post_init__(self):
        f = self.field
        d = {}
        for m, c in self.d_part.items():
            c = f.coerce(c)
            if c != 0:
                d[int(m)] = c
        object.__setattr__(self, "d_part", d)
        object.__setattr__(self, "central", f.zero if self.central is None else f.coerce(self.central))

    def coeff(self, m: int):
        return self.d_part.get(m, self.field.zero)

    def is_zero(self) -> bool:
        return not self.d_part and self.central == 0

    def grades(self) -> list[int]:
        return sorted(self.d_part)

    def _check(self, other: "AlgebraElement"):
        if other.field != self.field:
            raise MixedScalarError("algebra elements over different fields")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        d = dict(self.d_part)
        for m, c in other.d_part.items():
            d[m] = d[m] + c if m in d else c
        return AlgebraElement(d, self.central + other.central, self.field)

    def __neg__(self):
        return AlgebraElement({m: -c for m, c in self.d_part.items()}, -self.central, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        s = self.field.coerce(s)
        return AlgebraElement({m: s * c for m, c in self.d_part.items()}, s * self.central, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.field == other.field and self.d_part == other.d_part
                and self.central == other.central)

    __hash__ = None

    def __repr__(self):
        parts = [f"({c})*d[{m}]" for m, c in sorted(self.d_part.items())]
        if self.central != 0:
            parts.append(f"({self.central})*chat")
        return " + ".join(parts) if parts else "0"


def d(m: int, c=1, field=EXACT) -> AlgebraElement:
    """The generator ``c * d_m``."""
    return AlgebraElement({m: c}, None, field)


def chat(c=1, field=EXACT) -> AlgebraElement:
    """The central element ``c * chat``."""
    return AlgebraElement({}, c, field)


def d_bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear bracket; ``chat`` brackets to zero against everything."""
    x._check(y)
    f = x.field
    out: dict = {}
    cen = f.zero
    for m, a in x.d_part.items():
        for n, b in y.d_part.items():
            ab = a * b
            k = m + n
            coef = f.qint(m - n) * ab
            if coef != 0:
                out[k] = out[k] + coef if k in out else coef
            if k == 0:
                cen = cen + f.qgamma(m) * ab
    return AlgebraElement(out, cen, f)


def gamma_op(x: AlgebraElement) -> AlgebraElement:
    """``Gamma(d_p) = <p> d_p``; undefined on the central direction."""
    if x.central != 0:
        raise ValueError("Gamma is only defined on the span of the d_m")
    f = x.field
    return AlgebraElement({p: f.qangle(p) * c for p, c in x.d_part.items()}, None, f)


def jacobi_defect(m: int, n: int, p: int, field=EXACT) -> AlgebraElement:
    """``Xi_{m,n,p}``: the Gamma-twisted cyclic Jacobi sum; zero for V_q."""
    dm, dn, dp = d(m, 1, field), d(n, 1, field), d(p, 1, field)
    return (d_bracket(d_bracket(dm, dn), gamma_op(dp))
            + d_bracket(d_bracket(dn, dp), gamma_op(dm))
            + d_bracket(d_bracket(dp, dm), gamma_op(dn)))


# ---------------------------------------------------------------------------
# operator realization

Operator = Callable[[LaurentPoly], LaurentPoly]


def realize(x: AlgebraElement) -> Operator:
    """Operator ``sum x_m (-z^(m+1) dq) + c tau`` on Laurent fields."""
    terms = sorted(x.d_part.items())
    cen = x.central

    def op(f: LaurentPoly) -> LaurentPoly:
        if f.field != x.field:
            raise MixedScalarError("operator and field over different scalars")
        out = zero(f.field)
        g = dq(f) if terms else None
        for m, c in terms:
            out = out + mul(monomial(m + 1, -c, f.field), g)
        if cen != 0:
            out = out + tau(f, 1) * cen
        return out

    return op


def ell(m: int, field=EXACT) -> Operator:
    """``l_m = -z^(m+1) dq tau``."""
    dm = realize(d(m, 1, field))
    return lambda f: dm(tau(f, 1))


def twisted_bracket_sides(m: int, n: int, k: int, field=EXACT):
    """``q^m d_m d_n tau - q^n d_n d_m tau`` vs ``[m-n] d_{m+n}`` on ``z^k``."""
    f = monomial(k, 1, field)
    Dm, Dn = realize(d(m, 1, field)), realize(d(n, 1, field))
    lhs = (Dm(Dn(tau(f, 1))) * field.qpow(m)
           - Dn(Dm(tau(f, 1))) * field.qpow(n))
    rhs = realize(d(m + n, field.qint(m - n), field))(f)
    return lhs, rhs


def check_twisted_bracket(m: int, n: int, k: int) -> bool:
    lhs, rhs = twisted_bracket_sides(m, n, k)
    return lhs == rhs


def ell_relation_sides(m: int, n: int, k: int, field=EXACT):
    """``q^(m-n) l_m l_n - q^(n-m) l_n l_m`` vs ``[m-n] l_{m+n}`` on ``z^k``."""
    f = monomial(k, 1, field)
    Lm, Ln = ell(m, field), ell(n, field)
    lhs = Lm(Ln(f)) * field.qpow(m - n) - Ln(Lm(f)) * field.qpow(n - m)
    rhs = ell(m + n, field)(f) * field.qint(m - n)
    return lhs, rhs


def check_ell_relation(m: int, n: int, k: int) -> bool:
    lhs, rhs = ell_relation_sides(m, n, k)
    return lhs == rhs


def chat_commutation_sides(m: int, k: int, field=EXACT):
    """``chat' l_m`` vs ``q^(2m) l_m chat'`` on ``z^k``, with ``chat' = tau^2``."""
    f = monomial(k, 1, field)
    Lm = ell(m, field)
    return tau(Lm(f), 2), Lm(tau(f, 2)) * field.qpow(2 * m)


def check_chat_commutation(m: int, k: int) -> bool:
    lhs, rhs = chat_commutation_sides(m, k)
    return lhs == rhs
