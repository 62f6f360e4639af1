"""Verification suites and their machine-readable reports."""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from . import qkdv
from .cocycle import phi_integral, phi_modes, upsilon
from .qscalar import (EXACT, identity_A10_sides, identity_W_sides, identity_X_sides,
                      identity_Y_sides, identity_Z_sides)
from .qseries import A5_sides, A9_sides, A12_sides, leibniz_sides, monomial
from .qwitt import (chat_commutation_sides, ell_relation_sides, jacobi_defect,
                    twisted_bracket_sides)
from .sampling import random_modes, random_triples


@dataclass
class VerifyReport:
    suite: str
    parameters: dict
    cases: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return sum(self.cases.values())

    def record(self, check: str, inputs: dict, lhs, rhs) -> bool:
        self.cases[check] = self.cases.get(check, 0) + 1
        if lhs == rhs:
            return True
        self.failures.append({"check": check, "inputs": inputs,
                              "lhs": str(lhs), "rhs": str(rhs)})
        return False

    def fail(self, check: str, inputs: dict, reason: str):
        self.failures.append({"check": check, "inputs": inputs, "reason": reason})

    def as_dict(self) -> dict:
        # wall time is left out so reports are byte-identical across runs
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "cases": dict(sorted(self.cases.items())),
            "total": self.total,
            "failures": self.failures,
            "details": self.details,
            "verdict": "pass" if self.ok else "fail",
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"suite {self.suite} ({params})"]
        for name, count in sorted(self.cases.items()):
            nfail = sum(1 for f in self.failures if f["check"] == name)
            lines.append(f"  {name:<20} {count:>7} cases  {nfail} failed")
        for key, val in sorted(self.details.items()):
            lines.append(f"  {key}: {val}")
        for f in self.failures:
            lines.append(f"  FAIL {f['check']} {f['inputs']}: "
                         + (f.get("reason") or f"{f['lhs']} != {f['rhs']}"))
        lines.append(f"verdict: {'pass' if self.ok else 'fail'} ({self.total} cases)")
        return "\n".join(lines)


def _rng(n: int):
    return range(-n, n + 1)


def _timed(report: VerifyReport, t0: float) -> VerifyReport:
    report.wall_time = time.perf_counter() - t0
    return report


def run_identities(max_index: int) -> VerifyReport:
    t0 = time.perf_counter()
    rep = VerifyReport("identities", {"max": max_index})
    R = _rng(max_index)
    for m, n, p in itertools.product(R, R, R):
        rep.record("Z", {"m": m, "n": n, "p": p}, *identity_Z_sides(m, n, p))
    q4 = (EXACT.qpow(1) - EXACT.qpow(-1)) ** 4
    for m, n in itertools.product(R, R):
        inp = {"m": m, "n": n}
        rep.record("X", {"m": m, "n": n, "p": -m - n}, *identity_X_sides(m, n, -m - n))
        y, _ = identity_Y_sides(m, n)
        w, _ = identity_W_sides(m, n)
        rep.record("Y", inp, y, 0)
        rep.record("W", inp, w, 0)
        rep.record("Y_W_agree", inp, y * q4, w)
        rep.record("A10", inp, *identity_A10_sides(m, n))
    return _timed(rep, t0)


def run_jacobi(max_index: int) -> VerifyReport:
    t0 = time.perf_counter()
    rep = VerifyReport("jacobi", {"max": max_index})
    R = _rng(max_index)
    for m, n, p in itertools.product(R, R, R):
        xi = jacobi_defect(m, n, p)
        inp = {"m": m, "n": n, "p": p}
        rep.record("xi_d", inp, xi.coeff(m + n + p), 0)
        rep.record("xi_central", inp, xi.central, 0)
        stray = [k for k in xi.d_part if k != m + n + p]
        if stray:
            rep.fail("xi_d", inp, f"unexpected grades {stray}")
    return _timed(rep, t0)


def _cocycle_pair(rep: VerifyReport, v, w, inp: dict):
    a = phi_modes(v, w)
    rep.record("phi_agree", inp, phi_integral(v, w), a)
    rep.record("phi_antisym", inp, a + phi_modes(w, v), 0)


def run_cocycle(max_degree: int, trials: int, seed: int,
                pair_degree: int | None = None) -> VerifyReport:
    t0 = time.perf_counter()
    pair_degree = max_degree if pair_degree is None else pair_degree
    rep = VerifyReport("cocycle", {"max_degree": max_degree, "trials": trials, "seed": seed,
                                   "pair_degree": pair_degree})
    P = _rng(pair_degree)
    for i, j in itertools.product(P, P):
        _cocycle_pair(rep, monomial(i), monomial(j), {"v": f"z^{i}", "w": f"z^{j}"})
    R = _rng(max_degree)
    for i, j, k in itertools.product(R, R, R):
        rep.record("upsilon_monomial", {"u": f"z^{i}", "v": f"z^{j}", "w": f"z^{k}"},
                   upsilon(monomial(i), monomial(j), monomial(k)), 0)
    for t, (u, v, w) in enumerate(random_triples(seed, trials, max_degree)):
        inp = {"trial": t, "u": repr(u), "v": repr(v), "w": repr(w)}
        _cocycle_pair(rep, u, v, inp)
        rep.record("upsilon_random", inp, upsilon(u, v, w), 0)
    return _timed(rep, t0)


def run_operators(max_index: int) -> VerifyReport:
    t0 = time.perf_counter()
    rep = VerifyReport("operators", {"max": max_index})
    R = _rng(max_index)
    for m, n, k in itertools.product(R, R, R):
        inp = {"m": m, "n": n, "k": k}
        rep.record("twisted_bracket", inp, *twisted_bracket_sides(m, n, k))
        rep.record("ell_relation", inp, *ell_relation_sides(m, n, k))
    for a, b in itertools.product(R, R):
        rep.record("chat_commutation", {"m": a, "k": b}, *chat_commutation_sides(a, b))
        rep.record("A9", {"p": a, "k": b}, *A9_sides(a, b))
        fa, fb = monomial(a), monomial(b)
        rep.record("leibniz", {"a": f"z^{a}", "b": f"z^{b}"}, *leibniz_sides(fa, fb))
        rep.record("A12", {"f": f"z^{a}", "g": f"z^{b}"}, *A12_sides(fa, fb))
    for n in R:
        (l1, r1), (l2, r2) = A5_sides(n)
        rep.record("A5", {"n": n}, l1, r1)
        rep.record("A5_inverse", {"n": n}, l2, r2)
    return _timed(rep, t0)


SLOPE_BAND = (0.8, 1.2)


def run_limit_check(epsilons, modes: int, seed: int, cprime: float = 1.0) -> VerifyReport:
    t0 = time.perf_counter()
    rep = VerifyReport("limit-check", {"epsilons": list(epsilons), "modes": modes,
                                       "seed": seed, "cprime": cprime})
    coeffs = random_modes(seed, modes)
    errs = [qkdv.limit_error(coeffs, e, cprime) for e in epsilons]
    rep.cases["epsilon"] = len(errs)
    rep.details["relative_error"] = {repr(e): err for e, err in zip(epsilons, errs)}
    if len(errs) >= 2:
        slope = qkdv.fit_slope(epsilons, errs)
        rep.details["slope"] = slope
        per_term = [qkdv.limit_term_errors(coeffs, e, cprime) for e in epsilons]
        rep.details["term_slopes"] = {
            name: qkdv.fit_slope(epsilons, [row[name] for row in per_term])
            for name in sorted(per_term[0])
        }
        rep.cases["slope"] = 1
        if not SLOPE_BAND[0] <= slope <= SLOPE_BAND[1]:
            rep.fail("slope", {"epsilons": list(epsilons)},
                     f"slope {slope:.4f} outside [{SLOPE_BAND[0]}, {SLOPE_BAND[1]}]")
    else:
        rep.details["slope"] = None
    return _timed(rep, t0)
