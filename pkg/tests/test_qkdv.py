import math

import pytest

from qvirasoro.errors import ConfigError, StabilityError
from qvirasoro.qkdv import (SimConfig, SimState, classical_kdv_rhs, euler_pairing_check,
                            fit_slope, limit_term_errors, linear_term, nonlinear_terms,
                            parse_config, rhs_eq2, rhs_eq7, simulate, step_rk4, truncate)
from qvirasoro.qscalar import EXACT, NumericField, cocycle_norm, qangle, qint
from qvirasoro.qseries import LaurentPoly, dq, integrate, monomial, mul, tau, zero
from qvirasoro.sampling import random_modes, random_triples

z = monomial


def test_linear_term_examples():
    assert linear_term(z(2), 1).is_zero()
    for k in range(-6, 9):
        coef = qint(k) * qint(k - 1) * qint(k - 2) / qangle(k - 1)
        assert linear_term(z(k), 1) == z(k - 3, coef)


def test_linear_term_classical_limit():
    fld = NumericField.real(1 + 1e-6)
    for k in range(3, 10):
        got = linear_term(monomial(k, 1, fld), 1.0).coeff(k - 3)
        want = k * (k - 1) * (k - 2) / 2
        assert abs(got - want) <= 1e-3 * want


def test_nonlinear_terms_examples():
    assert nonlinear_terms(zero()).is_zero()
    q = EXACT.qpow(1)
    assert nonlinear_terms(z(1)) == z(1, q * qint(2) + EXACT.qpow(-2))


def test_rhs_eq2_zero_and_linearization():
    assert rhs_eq2(zero(), 3).is_zero()
    fld = NumericField.real(1.05)
    eps, k = 1e-6, 7
    u = monomial(k, eps, fld)
    lin = -eps * 2.0 * fld.qint(k) * fld.qint(k - 1) * fld.qint(k - 2) / fld.qangle(k - 1)
    r = rhs_eq2(u, 2.0)
    assert abs(r.coeff(k - 3) - lin) < 1e-9 * abs(lin)


def test_rhs_forms_agree_exactly():
    a = cocycle_norm()
    for u in (z(2), z(-3) + z(4) * 2, zero()):
        assert rhs_eq7(u, 5, a) == rhs_eq2(u, a * 5)
    for _, _, u in random_triples(3, 20, 5):
        assert rhs_eq7(u, -2, a) == rhs_eq2(u, a * -2)


def test_euler_pairing_examples():
    assert euler_pairing_check(z(2), z(-1), z(0), 1)
    f = LaurentPoly({-1: 2, 3: 1})
    assert euler_pairing_check(f, f, LaurentPoly({-2: 1, 0: 3}), 4)
    for f, g, u in random_triples(99, 15, 5):
        assert euler_pairing_check(f, g, u, 3)


def test_total_derivative_terms_have_no_residue():
    for _, _, u in random_triples(17, 20, 5):
        assert integrate(linear_term(u, 1)) == 0
        assert integrate(dq(mul(u, tau(u, 1)))) == 0


def test_classical_rhs_examples():
    fld = NumericField.real(2.0)
    assert classical_kdv_rhs(zero(fld), 1.0).is_zero()
    assert classical_kdv_rhs(monomial(3, 1, fld), 1.0).coeff(0) == -3
    # u = z: -3 u u' = -3 z
    assert classical_kdv_rhs(monomial(1, 1, fld), 1.0) == monomial(1, -3, fld)


def test_each_nonlinear_piece_is_first_order_but_sum_is_second_order():
    eps = [1e-2, 1e-3, 1e-4]
    coeffs = random_modes(5, 8)
    rows = [limit_term_errors(coeffs, e) for e in eps]
    assert fit_slope(eps, [r["transport"] for r in rows]) == pytest.approx(1.0, abs=0.1)
    assert fit_slope(eps, [r["twisted"] for r in rows]) == pytest.approx(1.0, abs=0.1)
    assert fit_slope(eps, [r["linear"] for r in rows]) == pytest.approx(2.0, abs=0.1)


def test_truncate():
    N = 6
    assert truncate(z(N + 1), N).is_zero()
    f = LaurentPoly({-6: 1, 0: 2, 6: 3})
    assert truncate(f, N) == f
    g = LaurentPoly({-9: 1, 0: 2, 8: 3})
    assert truncate(truncate(g, N), N) == truncate(g, N)


def _cfg(**kw):
    base = dict(q=1.02, cprime=1.0, n_modes=8, dt=1e-3, steps=10, output_every=2)
    base.update(kw)
    return SimConfig(**base)


def test_step_zero_state():
    cfg = _cfg()
    s = step_rk4(SimState(0.0, zero(cfg.field)), cfg)
    assert s.modes.is_zero() and s.t == pytest.approx(cfg.dt)


def test_simulate_trivial_cases():
    cfg = _cfg(steps=0)
    init = SimState(0.0, LaurentPoly({1: 0.1}, cfg.field))
    tr = simulate(cfg, init)
    assert tr.states == [init]
    cfg = _cfg(steps=10)
    tr = simulate(cfg, SimState(0.0, zero(cfg.field)))
    assert len(tr.states) == 6
    assert all(s.modes.is_zero() for s in tr.states)
    assert [s.t for s in tr.states] == [i * 2e-3 for i in range(6)]


def test_simulate_bit_deterministic():
    cfg = _cfg(steps=20)
    init = SimState(0.0, LaurentPoly({1: 0.3, -1: 0.2j, 4: -0.1}, cfg.field))
    a = simulate(cfg, init)
    b = simulate(cfg, init)
    assert [s.modes.to_dict() for s in a.states] == [s.modes.to_dict() for s in b.states]


def test_support_stays_in_band():
    cfg = _cfg(steps=20, output_every=1)
    init = SimState(0.0, LaurentPoly({8: 0.5, -8: 0.5, 1: 1.0}, cfg.field))
    for s in simulate(cfg, init).states:
        lo, hi = s.modes.min_exp, s.modes.max_exp
        assert -8 <= lo and hi <= 8


def test_blowup_reports_step_and_partial():
    cfg = _cfg(dt=0.5, steps=50, output_every=1)
    init = SimState(0.0, LaurentPoly({8: 100.0, -3: 50.0}, cfg.field))
    with pytest.raises(StabilityError) as info:
        simulate(cfg, init)
    err = info.value
    assert err.step >= 1
    assert err.partial.status == "blowup"
    assert len(err.partial.states) == err.step


def test_config_validation():
    with pytest.raises(ConfigError):
        _cfg(q=1.0).validate()
    with pytest.raises(ConfigError):
        _cfg(dt=0).validate()
    with pytest.raises(ConfigError):
        _cfg(n_modes=3).validate()
    with pytest.raises(ConfigError):
        _cfg(q=1j).validate()  # root of unity: <1> = 0
    init = SimState(0.0, monomial(9, 1.0, _cfg().field))
    with pytest.raises(ConfigError):
        simulate(_cfg(), init)


def test_parse_config():
    cfg, init = parse_config({"q": {"real": 1.01}, "cprime": 1.0, "n_modes": 32, "dt": 1e-4,
                              "steps": 1000, "output_every": 10,
                              "init": {"1": [0.1, 0.0], "-1": [0.1, 0.0]}})
    assert cfg.q == 1.01 and cfg.n_modes == 32
    assert init.modes.coeff(1) == 0.1 and init.modes.coeff(-1) == 0.1
    cfg, _ = parse_config({"q": {"arg": 0.01}, "n_modes": 8})
    assert abs(cfg.q - complex(math.cos(0.01), math.sin(0.01))) < 1e-15
    for bad in ({"q": {"real": 1.0}}, {"q": {"real": -2}}, {"q": 1.1}, {},
                {"q": {"real": 1.1}, "init": {"x": [1, 0]}}):
        with pytest.raises(ConfigError):
            parse_config(bad)


def test_integral_drift_is_reported():
    cfg = _cfg(steps=10)
    init = SimState(0.0, LaurentPoly({1: 0.4, -1: 0.3, 2: 0.2}, cfg.field))
    drift = simulate(cfg, init).integral_drift()
    assert drift[0] == (0.0, 0)
    assert len(drift) == 6
