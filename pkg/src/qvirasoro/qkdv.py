"""The qKdV equation on truncated Laurent modes.

The evolution solved here is

    u_t = -( c' dq^2 theta dq u + dq(u * tau u) + (tau^-1 u) * dq(tau^-1 u) )

on modes ``|k| <= N``. Products are full convolutions followed by
truncation. Time stepping is classical explicit RK4 with a blow-up guard.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .cocycle import phi_integral
from .errors import ConfigError, StabilityError
from .qscalar import NumericField, cocycle_norm
from .qseries import (ANGLE_TOL, LaurentPoly, bracket_vec, dq, integrate, mul,
                      tau, theta)

BLOWUP = 1e12

Rhs = Callable[[LaurentPoly, object], LaurentPoly]


# ---------------------------------------------------------------------------
# right-hand sides


def _linear_core(u: LaurentPoly) -> LaurentPoly:
    return dq(dq(theta(dq(u))))


def linear_term(u: LaurentPoly, cprime) -> LaurentPoly:
    """``c' dq^2 theta dq u``; ``z^k -> c' [k][k-1][k-2]/<k-1> z^(k-3)``."""
    return _linear_core(u) * cprime


def nonlinear_terms(u: LaurentPoly) -> LaurentPoly:
    """``dq(u tau u) + (tau^-1 u) dq(tau^-1 u)``."""
    ui = tau(u, -1)
    return dq(mul(u, tau(u, 1))) + mul(ui, dq(ui))


def rhs_eq2(u: LaurentPoly, cprime) -> LaurentPoly:
    """``u_t`` for the canonical qKdV equation with linear coefficient ``c'``."""
    return -(linear_term(u, cprime) + nonlinear_terms(u))


def rhs_eq7(u: LaurentPoly, c, a) -> LaurentPoly:
    """``u_t`` from the Euler form ``q u_t = -q c a L u - tau^-1 dq(tau u tau^2 u) - tau^-1(u dq u)``.

    Agrees with ``rhs_eq2(u, a*c)``.
    """
    f = u.field
    q = f.qpow(1)
    qut = (-(_linear_core(u) * (q * f.coerce(c) * f.coerce(a)))
           - tau(dq(mul(tau(u, 1), tau(u, 2))), -1)
           - tau(mul(u, dq(u)), -1))
    return qut * (f.one / q)


def euler_pairing_sides(f: LaurentPoly, g: LaurentPoly, u: LaurentPoly, c):
    """Both ends of the integration-by-parts chain for the Euler equation.

    ``lhs = -q * integral(bracket_vec(f, g) u) + c q phi(f, g)``
    ``rhs = integral(g [tau^-1 dq(tau u tau^2 f) + tau^-1(u dq f) + a q c L f])``
    """
    fld = f.field
    q = fld.qpow(1)
    c = fld.coerce(c)
    a = cocycle_norm(fld)
    lhs = -(q * integrate(mul(bracket_vec(f, g), u))) + c * q * phi_integral(f, g)
    inner = (tau(dq(mul(tau(u, 1), tau(f, 2))), -1)
             + tau(mul(u, dq(f)), -1)
             + _linear_core(f) * (a * q * c))
    rhs = integrate(mul(g, inner))
    return lhs, rhs


def euler_pairing_check(f: LaurentPoly, g: LaurentPoly, u: LaurentPoly, c) -> bool:
    lhs, rhs = euler_pairing_sides(f, g, u, c)
    return lhs == rhs


def classical_derivative(u: LaurentPoly) -> LaurentPoly:
    """Ordinary ``d/dz``: ``z^n -> n z^(n-1)``."""
    return LaurentPoly._raw({n - 1: n * c for n, c in u.items()}, u.field)


def classical_kdv_rhs(u: LaurentPoly, cprime) -> LaurentPoly:
    """q -> 1 limit: ``u_t = -(c'/2) u''' - 3 u u'`` in z-modes."""
    fld = u.field
    d1 = classical_derivative(u)
    d3 = classical_derivative(classical_derivative(d1))
    half = fld.coerce(Fraction(1, 2)) * fld.coerce(cprime)
    return -(d3 * half + mul(u, d1) * 3)


def truncate(f: LaurentPoly, n_max: int) -> LaurentPoly:
    """Galerkin projection onto ``|k| <= n_max``."""
    return LaurentPoly._raw({k: c for k, c in f.items() if -n_max <= k <= n_max}, f.field)


# ---------------------------------------------------------------------------
# simulation


@dataclass(frozen=True)
class SimConfig:
    q: complex
    cprime: float = 1.0
    n_modes: int = 32
    dt: float = 1e-4
    steps: int = 1000
    output_every: int = 10

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))

    @property
    def field(self) -> NumericField:
        return NumericField(self.q)

    def validate(self) -> "SimConfig":
        try:
            fld = self.field
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ConfigError(f"dt must be positive, got {self.dt}")
        if self.n_modes < 4:
            raise ConfigError(f"n_modes must be >= 4, got {self.n_modes}")
        if self.steps < 0:
            raise ConfigError("steps must be >= 0")
        if self.output_every < 1:
            raise ConfigError("output_every must be >= 1")
        if not math.isfinite(abs(complex(self.cprime))):
            raise ConfigError("cprime must be finite")
        worst = fld.min_angle(self.n_modes + 3)
        if worst < ANGLE_TOL:
            raise ConfigError(f"q={self.q} is too close to a root of unity: min|<n>| = {worst:.3g}")
        return self


@dataclass(frozen=True)
class SimState:
    t: float
    modes: LaurentPoly
    step: int = 0

    def check(self, n_max: int):
        lo, hi = self.modes.min_exp, self.modes.max_exp
        if lo is not None and (lo < -n_max or hi > n_max):
            raise ConfigError(f"state support [{lo}, {hi}] exceeds [-{n_max}, {n_max}]")
        for k, c in self.modes.items():
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise StabilityError(f"non-finite coefficient at mode {k}", step=self.step)


@dataclass
class Trajectory:
    config: SimConfig
    states: list = dc_field(default_factory=list)
    status: str = "ok"
    message: str = ""

    def integral_drift(self) -> list[tuple[float, complex]]:
        """``z^-1`` coefficient relative to the first sample, per sample time."""
        if not self.states:
            return []
        base = integrate(self.states[0].modes)
        return [(s.t, integrate(s.modes) - base) for s in self.states]


def _guard(u: LaurentPoly, step: int):
    for k, c in u.items():
        a = abs(c)
        if not math.isfinite(a) or a > BLOWUP:
            raise StabilityError(f"blow-up at step {step}: |u_{k}| = {a:.3g}", step=step)


def step_rk4(state: SimState, config: SimConfig, rhs: Rhs | None = None) -> SimState:
    """One classical RK4 step of ``u_t = truncate(rhs(u, c'), N)``."""
    rhs = rhs_eq2 if rhs is None else rhs
    N, dt, cp = config.n_modes, config.dt, config.cprime

    def F(u):
        return truncate(rhs(u, cp), N)

    u = state.modes
    k1 = F(u)
    k2 = F(u + k1 * (dt / 2))
    k3 = F(u + k2 * (dt / 2))
    k4 = F(u + k3 * dt)
    new = truncate(u + (k1 + k2 * 2 + k3 * 2 + k4) * (dt / 6), N)
    step = state.step + 1
    _guard(new, step)
    return SimState(state.t + dt, new, step)


def simulate(config: SimConfig, init: SimState, rhs: Rhs | None = None) -> Trajectory:
    """Run ``config.steps`` RK4 steps, sampling every ``output_every`` steps from ``t=0``.

    On blow-up a :class:`StabilityError` is raised whose ``partial`` holds the
    trajectory sampled so far.
    """
    config.validate()
    init.check(config.n_modes)
    traj = Trajectory(config, [init])
    state = init
    t0 = init.t
    for i in range(1, config.steps + 1):
        try:
            state = step_rk4(state, config, rhs)
        except StabilityError as exc:
            traj.status = "blowup"
            traj.message = str(exc)
            exc.partial = traj
            raise
        # t from the step count, not accumulated, so sample times are exact multiples
        state = SimState(t0 + i * config.dt, state.modes, state.step)
        if i % config.output_every == 0:
            traj.states.append(state)
    return traj


# ---------------------------------------------------------------------------
# configuration files


def parse_config(data: dict) -> tuple[SimConfig, SimState]:
    """Build a validated config and initial state from the JSON object form."""
    try:
        qspec = data["q"]
        if set(qspec) == {"real"}:
            qv = float(qspec["real"])
            if not qv > 0:
                raise ConfigError("real q must be positive")
            q = complex(qv, 0.0)
        elif set(qspec) == {"arg"}:
            q = NumericField.unimodular(float(qspec["arg"])).q
        else:
            raise ConfigError('q must be {"real": x} or {"arg": x}')
        config = SimConfig(
            q=q,
            cprime=float(data.get("cprime", 1.0)),
            n_modes=int(data.get("n_modes", 32)),
            dt=float(data.get("dt", 1e-4)),
            steps=int(data.get("steps", 1000)),
            output_every=int(data.get("output_every", 10)),
        )
        config.validate()
        init = {int(k): complex(float(v[0]), float(v[1]))
                for k, v in data.get("init", {}).items()}
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ConfigError(f"malformed config: {exc}") from None
    state = SimState(0.0, LaurentPoly(init, config.field))
    state.check(config.n_modes)
    return config, state


def load_config(path) -> tuple[SimConfig, SimState]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return parse_config(data)


# ---------------------------------------------------------------------------
# q -> 1 limit


def _norm(f: LaurentPoly) -> float:
    return math.sqrt(sum(abs(c) ** 2 for _, c in f.items()))


def limit_error(u_coeffs: dict, eps: float, cprime: float = 1.0) -> float:
    """Relative gap ``|rhs_eq2 at q=1+eps - classical_kdv_rhs| / |classical_kdv_rhs|``."""
    fld = NumericField.real(1.0 + eps)
    u = LaurentPoly(u_coeffs, fld)
    ref = classical_kdv_rhs(u, cprime)
    return _norm(rhs_eq2(u, cprime) - ref) / _norm(ref)


def limit_term_errors(u_coeffs: dict, eps: float, cprime: float = 1.0) -> dict[str, float]:
    """Absolute q -> 1 gap of each term of the right-hand side separately."""
    fld = NumericField.real(1.0 + eps)
    u = LaurentPoly(u_coeffs, fld)
    du = classical_derivative(u)
    ui = tau(u, -1)
    d3 = classical_derivative(classical_derivative(du))
    return {
        "linear": _norm(linear_term(u, cprime) - d3 * (cprime / 2)),
        "transport": _norm(dq(mul(u, tau(u, 1))) - classical_derivative(mul(u, u))),
        "twisted": _norm(mul(ui, dq(ui)) - mul(u, du)),
    }


def fit_slope(xs, ys) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    import numpy as np

    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
