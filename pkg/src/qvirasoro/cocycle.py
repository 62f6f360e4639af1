"""The 2-cocycle phi on q-vector fields ``v dq``.

``phi(v dq, w dq) = a * integral(w * dq^2 theta dq v)`` with ``a = 1/([2][3])``,
which on modes is ``sum_n v_{n+1} w_{1-n} gamma_n``.
"""
from __future__ import annotations

from .qscalar import cocycle_norm
from .qseries import LaurentPoly, bracket_vec, dq, integrate, mul, theta


def phi_integral(v: LaurentPoly, w: LaurentPoly):
    """Cocycle evaluated through the operator ``dq^2 theta dq`` and the circle integral."""
    v._same_field(w)
    core = dq(dq(theta(dq(v))))
    return cocycle_norm(v.field) * integrate(mul(w, core))


def phi_modes(v: LaurentPoly, w: LaurentPoly):
    """Cocycle from the mode sum ``sum_n v_{n+1} w_{1-n} gamma_n``."""
    v._same_field(w)
    f = v.field
    # group by n so each gamma_n is multiplied once
    weights: dict = {}
    for k, a in v.items():
        n = k - 1
        b = w.coeff(1 - n)
        if b != 0:
            weights[n] = a * b
    total = f.zero
    for n in sorted(weights):
        g = f.qgamma(n)
        if g != 0:
            total = total + g * weights[n]
    return total


def gamma_vec(u: LaurentPoly) -> LaurentPoly:
    """Vector-field form of Gamma: ``z^(p+1) -> <p> z^(p+1)``."""
    f = u.field
    return LaurentPoly._raw({k: f.qangle(k - 1) * c for k, c in u.items()}, f)


def upsilon(u: LaurentPoly, v: LaurentPoly, w: LaurentPoly):
    """Gamma-twisted cyclic cocycle sum; vanishes when phi is a cocycle."""
    return (phi_modes(bracket_vec(v, w), gamma_vec(u))
            + phi_modes(bracket_vec(w, u), gamma_vec(v))
            + phi_modes(bracket_vec(u, v), gamma_vec(w)))
