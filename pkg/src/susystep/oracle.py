"""Independent numerical verification path: fixed-step integration of the
wave equation Z'' + (omega^2 - V) Z = 0 in x, and extraction of reflection
and transmission amplitudes by least-squares boundary matching.

The integration marches right-to-left from a pure transmitted wave
Z = e^(i k' x) at x_max, which pins the solution without solving a
two-point boundary problem and matches the amplitude conventions of the
analytic formulas directly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BlowUpError, ConfigError, DomainError, IllConditionedError
from .potentials import PotentialSpec, potential
from .scattering import ScatteringResult
from .solutions import WaveField

__all__ = [
    "IntegrationConfig",
    "DEFAULT_CONFIG",
    "integrate_wavefunction",
    "extract_rt",
    "numerical_rt",
]

_BLOWUP_LIMIT = 1e12
_COND_LIMIT = 1e8


@dataclass(frozen=True)
class IntegrationConfig:
    """Fixed-step integration window and matching-window geometry.

    The defaults put the boundaries where the residual potential is below
    1e-12 (the potentials decay like e^-|x|) and sample densely enough
    that (max|V - omega^2|) step^2 stays well under the 0.01 stability
    bound checked at integration time.  The 5-unit matching window keeps
    the slowly decaying e^(x/2) contamination near the left boundary below
    the 1e-6 flux budget even just above threshold (a 10-unit window
    admits ~1.4e-6 flux error at omega = 1.2 m).
    """

    x_min: float = -30.0
    x_max: float = 30.0
    step: float = 1e-3
    method_order: int = 4
    match_window: float = 5.0

    def __post_init__(self):
        if not self.x_min < -5.0:
            raise ConfigError(f"x_min must be < -5, got {self.x_min}")
        if not self.x_max > 5.0:
            raise ConfigError(f"x_max must be > 5, got {self.x_max}")
        if not self.step > 0:
            raise ConfigError(f"step must be positive, got {self.step}")
        if self.method_order != 4:
            raise ConfigError(
                "only the classic fourth-order fixed-step integrator is provided; "
                f"method_order must be 4, got {self.method_order}"
            )
        if not self.match_window > 0:
            raise ConfigError(f"match_window must be positive, got {self.match_window}")


DEFAULT_CONFIG = IntegrationConfig()


def integrate_wavefunction(spec: PotentialSpec, omega: float, cfg: IntegrationConfig = DEFAULT_CONFIG) -> WaveField:
    """Integrate Z'' = (V - omega^2) Z from x_max down to x_min.

    Initial data at x_max is the pure transmitted wave Z = e^(i k' x),
    Z' = i k' e^(i k' x) with k' = sqrt(omega^2 - V(+inf)).  Classic RK4
    with the configured fixed step; the potential is pre-sampled on the
    half-step grid, so each step costs four complex multiply-adds.

    Raises
    ------
    ConfigError
        If omega is not above the right asymptote (no propagating
        transmitted wave) or the step violates the stability bound.
    BlowUpError
        If |Z| exceeds 1e12 during the march.
    """
    asym = spec.right_asymptote
    if not omega * omega > asym:
        raise ConfigError(
            f"omega = {omega} is below the propagation threshold sqrt({asym}) of the right asymptote"
        )
    n_steps = int(round((cfg.x_max - cfg.x_min) / cfg.step))
    if n_steps < 2:
        raise ConfigError("fewer than 2 integration steps; shrink step or widen the window")
    h = (cfg.x_max - cfg.x_min) / n_steps

    xs_half = np.linspace(cfg.x_min, cfg.x_max, 2 * n_steps + 1)
    q = np.asarray(potential(spec, xs_half), dtype=float) - omega * omega
    if float(np.max(np.abs(q))) * h * h >= 0.01:
        raise ConfigError(
            f"step {h} too coarse: (max|V - omega^2|) step^2 = "
            f"{float(np.max(np.abs(q))) * h * h:.3g} >= 0.01"
        )

    kprime = math.sqrt(omega * omega - asym)
    zc = cmath.exp(1j * kprime * cfg.x_max)
    dz = 1j * kprime * zc

    values = np.empty(n_steps + 1, dtype=complex)
    values[n_steps] = zc
    qh = q  # local alias for the march
    hm = -h  # marching right to left
    for i in range(n_steps):
        base = 2 * (n_steps - i)
        q0 = qh[base]
        qm = qh[base - 1]
        q1 = qh[base - 2]
        k1z = dz
        k1d = q0 * zc
        k2z = dz + 0.5 * hm * k1d
        k2d = qm * (zc + 0.5 * hm * k1z)
        k3z = dz + 0.5 * hm * k2d
        k3d = qm * (zc + 0.5 * hm * k2z)
        k4z = dz + hm * k3d
        k4d = q1 * (zc + hm * k3z)
        zc = zc + hm / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z)
        dz = dz + hm / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
        values[n_steps - i - 1] = zc
        if abs(zc) > _BLOWUP_LIMIT:
            raise BlowUpError(
                f"|Z| exceeded {_BLOWUP_LIMIT:g} at x = {cfg.x_max + (i + 1) * hm:.3f}; "
                "omega below threshold or step too coarse"
            )

    grid = np.linspace(cfg.x_min, cfg.x_max, n_steps + 1)
    return WaveField(
        grid=grid, values=values, omega=float(omega), m=spec.m, kind=spec.kind,
        branch=None, meta={"spec": spec, "config": cfg},
    )


def extract_rt(field: WaveField, omega: float, m_effective: float, cfg: IntegrationConfig = DEFAULT_CONFIG) -> ScatteringResult:
    """Fit Z ~ A e^(i omega x) + B e^(-i omega x) over the left matching
    window and return R = B/A, T = 1/A (transmitted amplitude was set to 1
    by the integration initial data).

    A least-squares fit over the whole window averages out the residual
    exponentially small contamination near the boundary.  Raises
    IllConditionedError if the design matrix has condition number above
    1e8 (e.g. a window too short to separate the two exponentials).
    """
    if not m_effective >= 0:
        raise DomainError(f"m_effective must be >= 0, got {m_effective}")
    if not omega * omega > m_effective * m_effective:
        raise DomainError("omega must exceed the right asymptote threshold")
    xs = field.grid
    sel = xs <= xs[0] + cfg.match_window
    x_win = xs[sel]
    design = np.column_stack([np.exp(1j * omega * x_win), np.exp(-1j * omega * x_win)])
    cond = np.linalg.cond(design) if x_win.size >= 2 else float("inf")
    if not cond < _COND_LIMIT:
        raise IllConditionedError(
            f"matching fit condition number {cond:.3g} exceeds {_COND_LIMIT:g}"
        )
    coef, *_ = np.linalg.lstsq(design, field.values[sel], rcond=None)
    a_in, b_refl = coef
    R = b_refl / a_in
    T = 1.0 / a_in
    kprime = math.sqrt(omega * omega - m_effective * m_effective)
    R2 = abs(R) ** 2
    T2 = abs(T) ** 2
    return ScatteringResult(
        omega=float(omega), m=field.m, kind=field.kind, R=R, T=T,
        R2=R2, T2=T2, flux=R2 + (kprime / omega) * T2, k=float(omega), kprime=kprime,
    )


def numerical_rt(spec: PotentialSpec, omega: float, cfg: IntegrationConfig = DEFAULT_CONFIG) -> ScatteringResult:
    """Integrate and extract in one call."""
    field = integrate_wavefunction(spec, omega, cfg)
    return extract_rt(field, omega, math.sqrt(spec.right_asymptote), cfg)
