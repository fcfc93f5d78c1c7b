"""Self-verification suites behind the ``verify`` CLI subcommand.

Each check evaluates one analytic contract (closed-form equivalence, flux
conservation, SUSY identities, Wronskian constancy, wave-equation
residuals, quasinormal poles, potential identities) and reports its worst
residual against the contracted tolerance.  ``full`` adds the numerical
integration sweeps.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import oracle, scattering, solutions
from .potentials import (
    PotentialKind,
    PotentialSpec,
    potential,
    potential_antiderivative,
    potential_hyperbolic,
    shape_invariance_check,
)

__all__ = ["CheckResult", "run_checks", "QUICK", "FULL"]

QUICK = "quick"
FULL = "full"


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    tolerance: float
    seconds: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance


def _omega_grid(m: float, count: int = 50):
    return [m * (1.0 + 5.0 * i / count) for i in range(1, count + 1)]


def _check(name, tolerance, fn):
    start = time.perf_counter()
    residual = float(fn())
    return CheckResult(name=name, max_residual=residual, tolerance=tolerance,
                       seconds=time.perf_counter() - start)


def _closed_form_equivalence():
    worst = 0.0
    for m in (0.5, 1.0, 2.0):
        for omega in _omega_grid(m):
            res = scattering.reflection_transmission(PotentialKind.PLUS, omega, m)
            r2, t2 = scattering.coefficients_closed_form(omega, m)
            worst = max(worst, abs(res.R2 - r2) / max(abs(r2), abs(res.R2)))
            worst = max(worst, abs(res.T2 - t2) / max(abs(t2), abs(res.T2)))
    return worst


def _flux_conservation():
    worst = 0.0
    for m in (0.5, 1.0, 2.0):
        for omega in _omega_grid(m):
            for kind in (PotentialKind.PLUS, PotentialKind.MINUS):
                worst = max(worst, abs(scattering.reflection_transmission(kind, omega, m).flux - 1.0))
            worst = max(worst, abs(scattering.step_amplitudes(omega, m).flux - 1.0))
    return worst


def _susy_relations():
    worst = 0.0
    for m in (0.5, 1.0, 2.0):
        for omega in _omega_grid(m, count=20):
            r_sum, t_diff = scattering.susy_relation_check(omega, m)
            worst = max(worst, abs(r_sum), abs(t_diff))
    return worst


def _wronskian_constancy():
    worst = 0.0
    for omega, m in ((2.0, 1.0), (1.5, 1.0), (3.0, 2.0)):
        c1 = 2j * omega + 0.5
        for sign in (1, -1):
            expected = sign * 2.0 * omega / m * (1.0 - c1)
            values = [solutions.wronskian(sign, omega, m, z) for z in (0.2, 0.5, 0.8)]
            worst = max(worst, max(abs(v - expected) for v in values))
            worst = max(worst, abs(values[0] - values[-1]))
    return worst


def _wave_equation_residual(pairs=((2.0, 1.0), (1.5, 1.0))):
    zs = np.linspace(0.05, 0.95, 19)
    worst = 0.0
    for omega, m in pairs:
        for branch in ("I", "II"):
            for sign in (1, -1):
                worst = max(worst, _zform_residual(branch, sign, omega, m, zs))
    return worst


def _zform_residual(branch, sign, omega, m, zs):
    worst = 0.0
    for z in zs:
        h = 0.01 * z * (1.0 - z)
        f = [solutions.exact_solution_at_z(branch, sign, omega, m, z + k * h) for k in (-2, -1, 0, 1, 2)]
        d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
        d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
        q = (omega * omega - m * m) / (1 - z) + omega * omega / z + sign * m / (2.0 * np.sqrt(z))
        res = (1 - 2 * z) * d1 + z * (1 - z) * d2 + q * f[2]
        scale = abs(q * f[2]) + abs((1 - 2 * z) * d1) + abs(z * (1 - z) * d2)
        worst = max(worst, abs(res) / scale)
    return worst


def _qnm_poles():
    worst = 0.0
    for n in range(6):
        worst = max(worst, scattering.qnm_pole_check(PotentialKind.PLUS, n, 1.0))
        freq = scattering.qnm(PotentialKind.PLUS, n, 1.0)
        off = scattering.inverse_transmission_magnitude(PotentialKind.PLUS, freq.omega + 0.1, 1.0)
        if off <= 1e-3:  # perturbed frequency must NOT look like a pole
            worst = max(worst, 1.0)
    return worst


def _potential_identities():
    rng = np.random.default_rng(20240813)
    xs = rng.uniform(-40.0, 40.0, size=64)
    ms = rng.uniform(0.2, 4.0, size=8)
    worst = 0.0
    for m in ms:
        worst = max(worst, float(np.max(np.abs(shape_invariance_check(m, xs)))))
        for spec in (PotentialSpec.plus(m), PotentialSpec.minus(m)):
            worst = max(worst, float(np.max(np.abs(potential(spec, xs) - potential_hyperbolic(spec, xs)))))
            h = 1e-5
            deriv = (potential_antiderivative(spec, xs + h) - potential_antiderivative(spec, xs - h)) / (2 * h)
            worst = max(worst, float(np.max(np.abs(deriv - potential(spec, xs)))))
    return worst


def _figure_difference_window():
    grid = np.linspace(1.05, 3.0, 391)
    diffs = [abs(d) for _, _, d in scattering.compare_reflection(grid, 1.0)]
    peak = max(diffs)
    # contract: visible in a difference plot (> 1e-4) yet invisible at
    # reflection-plot scale (< 0.05)
    if not 1e-4 < peak < 0.05:
        return 1.0
    return 0.0


def _oracle_agreement():
    worst = 0.0
    for omega in (1.2, 1.5, 2.0, 3.0):
        for spec in (PotentialSpec.plus(1.0), PotentialSpec.minus(1.0), PotentialSpec.step(1.0)):
            num = oracle.numerical_rt(spec, omega)
            if spec.kind is PotentialKind.STEP:
                ana = scattering.step_amplitudes(omega, 1.0)
            else:
                ana = scattering.reflection_transmission(spec.kind, omega, 1.0)
            worst = max(worst, abs(num.R - ana.R), abs(num.T - ana.T))
    return worst


def _oracle_flux():
    worst = 0.0
    for omega in (1.2, 2.0):
        for spec in (PotentialSpec.plus(1.0), PotentialSpec.step(1.0)):
            worst = max(worst, abs(oracle.numerical_rt(spec, omega).flux - 1.0))
    return worst


def run_checks(level: str = QUICK, inject_failure: bool = False):
    """Run the verification suite; returns a list of CheckResult."""
    if level not in (QUICK, FULL):
        raise ValueError(f"level must be {QUICK!r} or {FULL!r}, got {level!r}")
    results = [
        _check("closed-form equivalence (Gamma vs sinh)", 1e-10, _closed_form_equivalence),
        _check("flux conservation", 1e-9, _flux_conservation),
        _check("SUSY amplitude relations", 1e-11, _susy_relations),
        _check("Wronskian value and constancy", 1e-9, _wronskian_constancy),
        _check("wave-equation residual in z", 1e-7, _wave_equation_residual),
        _check("quasinormal transmission poles", 1e-6, _qnm_poles),
        _check("potential identities", 1e-8, _potential_identities),
        _check("reflection-difference window", 0.5, _figure_difference_window),
    ]
    if level == FULL:
        results.append(_check("oracle amplitude agreement", 1e-5, _oracle_agreement))
        results.append(_check("oracle flux conservation", 1e-6, _oracle_flux))
    if inject_failure:
        # Negative control: report the Wronskian check against a constant
        # perturbed by 1e-3; it must fail and drive a nonzero exit status.
        def perturbed():
            value = solutions.wronskian(1, 2.0, 1.0, 0.3)
            expected = 2.0 * 2.0 / 1.0 * (1.0 - (2j * 2.0 + 0.5)) + 1e-3
            return abs(value - expected)

        results.append(_check("failure injection (perturbed constant)", 1e-9, perturbed))
    return results
