"""Exact wavefunctions of the partner potentials.

The construction: map x to z = e^x/(e^x+1), peel off power factors
z^C (1-z)^B with exponents solving the indicial equations, and the
remainder satisfies the Gauss hypergeometric equation.  Each linearly
independent solution Z_+/-^I, Z_+/-^II is a fixed linear combination of two
hypergeometric terms whose coefficients are locked to each other by the
coupled first-order system.

Power factors are evaluated from log z and log(1-z) computed directly from
x (never via the subtraction 1 - z), so the closed forms stay accurate all
the way into the asymptotic regions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import DegenerateCError, DomainError, ZeroFrequencyError
from .potentials import PotentialKind, superpotential

__all__ = [
    "SolutionExponents",
    "HypSolutionParams",
    "SolutionCoefficients",
    "WaveField",
    "x_to_z",
    "z_to_x",
    "b_exponent",
    "make_exponents",
    "exact_solution",
    "exact_solution_at_z",
    "rotated_component",
    "coupled_residual",
    "wronskian",
    "sample_wavefield",
]

_QUARTER_TURN = cmath.exp(-0.25j * cmath.pi)


def x_to_z(x: float) -> float:
    """z = e^x / (e^x + 1), the map onto (0, 1); overflow-safe.

    In floating point the value saturates to exactly 0.0 or 1.0 once
    |x| exceeds ~37; the solution evaluators below avoid that loss by
    working with log z and log(1-z) directly.
    """
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def z_to_x(z: float) -> float:
    """Inverse map x = ln(z / (1 - z)) for z in (0, 1)."""
    if not 0.0 < z < 1.0:
        raise DomainError(f"z = {z} outside (0, 1)")
    return math.log(z) - math.log1p(-z)


def _logs_from_x(x: float):
    """(z, u, log z, log u) with u = 1 - z, all at full relative accuracy."""
    if x >= 0.0:
        t = math.exp(-x)
        log_z = -math.log1p(t)
        return 1.0 / (1.0 + t), t / (1.0 + t), log_z, log_z - x
    s = math.exp(x)
    log_u = -math.log1p(s)
    return s / (1.0 + s), 1.0 / (1.0 + s), log_u + x, log_u


def _logs_from_z(z: float):
    if not 0.0 < z < 1.0:
        raise DomainError(f"z = {z} outside (0, 1)")
    return z, 1.0 - z, math.log(z), math.log1p(-z)


def b_exponent(omega: complex, m: float) -> complex:
    """The branch of B = sqrt(m^2 - omega^2) used throughout.

    Real omega > m: +i sqrt(omega^2 - m^2), so the first connection term
    carries e^(-i sqrt(omega^2-m^2) x) as x -> +infinity.  Real omega < m:
    the positive real root (solution decaying to the right).  Complex
    omega: the root with positive imaginary part, continuous from the
    omega > m case; when the root is real (omega on the imaginary axis)
    the tie is broken toward positive real part.
    """
    r = cmath.sqrt(m * m - omega * omega + 0.0j)
    if abs(r.imag) <= 1e-14 * abs(r):
        return r  # real root: principal sqrt already has Re >= 0
    return r if r.imag > 0 else -r


@dataclass(frozen=True)
class SolutionExponents:
    """Power-factor exponents B_j, C_j of the two rotated components.

    B1 = B2 = sqrt(m^2 - omega^2) (branch per ``b_exponent``), C1 = i omega,
    C2 = C1 + 1/2; each pair solves C^2 - C/2 + i omega eps/2 + omega^2 = 0
    and B^2 + omega^2 - m^2 = 0 with eps = +1 for j=1 and -1 for j=2.
    """

    omega: complex
    m: float
    B1: complex
    B2: complex
    C1: complex
    C2: complex
    epsilon1: int = 1
    epsilon2: int = -1

    def indicial_residuals(self) -> float:
        """Largest residual of the defining algebraic equations."""
        res = 0.0
        for C, eps in ((self.C1, self.epsilon1), (self.C2, self.epsilon2)):
            res = max(res, abs(C * C - 0.5 * C + 0.5j * self.omega * eps + self.omega**2))
        for B in (self.B1, self.B2):
            res = max(res, abs(B * B + self.omega**2 - self.m**2))
        return res


@dataclass(frozen=True)
class HypSolutionParams:
    """Hypergeometric parameters a_j = C_j + B_j + 1/2, b_j = C_j + B_j,
    c_j = 2 C_j + 1/2; the j=2 set satisfies a2 = b1 + 1, b2 = a1,
    c2 = c1 + 1."""

    a1: complex
    b1: complex
    c1: complex
    a2: complex
    b2: complex
    c2: complex


@dataclass(frozen=True)
class SolutionCoefficients:
    """Free constants of the two solution branches.

    The coupled system fixes the second-component constants:
    G2 = i (a1 - c1) b1 G1 / (m c1) and H2 = i (1 - c1) H1 / m.
    Use :meth:`for_params` and the constraints hold by construction.
    """

    G1: complex = 1.0 + 0.0j
    G2: complex = 0.0j
    H1: complex = 1.0 + 0.0j
    H2: complex = 0.0j

    @classmethod
    def for_params(cls, omega: complex, m: float, G1: complex = 1.0, H1: complex = 1.0):
        _, hyp = make_exponents(omega, m)
        g2 = 1j * (hyp.a1 - hyp.c1) * hyp.b1 * G1 / (m * hyp.c1)
        h2 = 1j * (1.0 - hyp.c1) * H1 / m
        return cls(G1=complex(G1), G2=g2, H1=complex(H1), H2=h2)


@dataclass(frozen=True)
class WaveField:
    """A complex wavefunction sampled on a strictly increasing x grid."""

    grid: np.ndarray
    values: np.ndarray
    omega: complex
    m: float
    kind: PotentialKind
    branch: str | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        if grid.ndim != 1 or grid.size != values.size:
            raise DomainError("grid and values must be 1-d arrays of equal length")
        if grid.size >= 2 and not np.all(np.diff(grid) > 0):
            raise DomainError("grid must be strictly increasing")
        if not np.all(np.isfinite(values.view(float))):
            raise DomainError("wavefunction values must be finite")


def make_exponents(omega: complex, m: float):
    """Build the exponent set and hypergeometric parameters for (omega, m).

    Raises
    ------
    ZeroFrequencyError
        For omega = 0, where the first-order factorization that couples
        Z+ and Z- breaks down.
    DegenerateCError
        When c1 = 2 i omega + 1/2 is within tolerance of an integer and
        the second power-series solution would pick up logarithms.
    """
    omega = complex(omega)
    if abs(omega) < 1e-12:
        raise ZeroFrequencyError("solutions require omega != 0")
    if m == 0:
        raise DomainError("solutions require m != 0")
    B1 = b_exponent(omega, m)
    C1 = 1j * omega
    C2 = C1 + 0.5
    c1 = 2.0 * C1 + 0.5
    if abs(c1 - round(c1.real)) < specfun.POLE_TOL:
        raise DegenerateCError(f"c1 = {c1} is within tolerance of an integer")
    exps = SolutionExponents(omega=omega, m=float(m), B1=B1, B2=B1, C1=C1, C2=C2)
    a1 = C1 + B1 + 0.5
    b1 = C1 + B1
    hyp = HypSolutionParams(a1=a1, b1=b1, c1=c1, a2=b1 + 1.0, b2=a1, c2=c1 + 1.0)
    return exps, hyp


def _f21(a, b, c, z, u, log_u):
    """2F1 with the complement u = 1 - z supplied exactly."""
    if z <= specfun.Z_SWITCH:
        return specfun._gauss_series(a, b, c, z)
    return specfun._hyp2f1_complement(a, b, c, u, log_u)


def _rotated(j, branch, exps, hyp, coeff, z, u, log_z, log_u):
    """Rotated component (R-tilde)_j of the requested solution branch."""
    B = exps.B1
    if branch == "I":
        if j == 1:
            pw = cmath.exp(exps.C1 * log_z + B * log_u)
            return coeff.G1 * pw * _f21(hyp.a1, hyp.b1, hyp.c1, z, u, log_u)
        pw = cmath.exp(exps.C2 * log_z + B * log_u)
        return coeff.G2 * pw * _f21(hyp.a2, hyp.b2, hyp.c2, z, u, log_u)
    if branch == "II":
        if j == 1:
            pw = cmath.exp((exps.C1 + 1.0 - hyp.c1) * log_z + B * log_u)
            return coeff.H1 * pw * _f21(
                hyp.a1 - hyp.c1 + 1.0, hyp.b1 - hyp.c1 + 1.0, 2.0 - hyp.c1, z, u, log_u
            )
        pw = cmath.exp((exps.C2 + 1.0 - hyp.c2) * log_z + B * log_u)
        return coeff.H2 * pw * _f21(
            hyp.a2 - hyp.c2 + 1.0, hyp.b2 - hyp.c2 + 1.0, 2.0 - hyp.c2, z, u, log_u
        )
    raise DomainError(f"branch must be 'I' or 'II', got {branch!r}")


def _solution_from_logs(branch, sign, exps, hyp, coeff, z, u, log_z, log_u):
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    r1 = _rotated(1, branch, exps, hyp, coeff, z, u, log_z, log_u)
    r2 = _rotated(2, branch, exps, hyp, coeff, z, u, log_z, log_u)
    return _QUARTER_TURN * (r1 + sign * 1j * r2)


def _prepare(omega, m, coeff):
    exps, hyp = make_exponents(omega, m)
    if coeff is None:
        coeff = SolutionCoefficients.for_params(omega, m)
    return exps, hyp, coeff


def exact_solution(branch, sign, omega, m, x, coeff: SolutionCoefficients | None = None) -> complex:
    """Closed-form wavefunction Z_sign^branch at position x.

    Parameters
    ----------
    branch : "I" or "II"
        Which linearly independent solution.
    sign : +1 or -1
        Partner choice: +1 for the V+ equation, -1 for V-.
    omega, m : complex, float
        Frequency (E = omega^2) and coupling.
    coeff : SolutionCoefficients, optional
        Defaults to the unit normalization G1 = H1 = 1.

    Evaluation is stable for any finite x; the hypergeometric argument and
    all power factors come from log-space forms of z(x).
    """
    exps, hyp, coeff = _prepare(omega, m, coeff)
    z, u, log_z, log_u = _logs_from_x(float(x))
    return _solution_from_logs(branch, sign, exps, hyp, coeff, z, u, log_z, log_u)


def exact_solution_at_z(branch, sign, omega, m, z, coeff: SolutionCoefficients | None = None) -> complex:
    """Same as :func:`exact_solution` but parametrized by z in (0, 1)."""
    exps, hyp, coeff = _prepare(omega, m, coeff)
    zz, u, log_z, log_u = _logs_from_z(float(z))
    return _solution_from_logs(branch, sign, exps, hyp, coeff, zz, u, log_z, log_u)


def rotated_component(j, branch, omega, m, z, coeff: SolutionCoefficients | None = None) -> complex:
    """Rotated component (R-tilde)_j (j = 1, 2) of a solution branch at z.

    These are the functions in which the first-order system decouples;
    Z+/- = e^(-i pi/4) ((R-tilde)_1 +/- i (R-tilde)_2).
    """
    if j not in (1, 2):
        raise DomainError(f"component index must be 1 or 2, got {j!r}")
    exps, hyp, coeff = _prepare(omega, m, coeff)
    zz, u, log_z, log_u = _logs_from_z(float(z))
    return _rotated(j, branch, exps, hyp, coeff, zz, u, log_z, log_u)


def coupled_residual(omega, m, x_grid, branch="I", coeff: SolutionCoefficients | None = None) -> float:
    """Largest scaled residual of the coupled first-order system

        (d/dx - W) Z+ = i omega Z-,      (d/dx + W) Z- = i omega Z+

    over ``x_grid``, with Z+/- reconstructed from the rotated components
    and d/dx taken by five-point central differences with step equal to
    half the smallest grid spacing.  Requires at least 3 grid points.
    """
    xs = np.asarray(x_grid, dtype=float)
    if xs.ndim != 1 or xs.size < 3:
        raise DomainError("coupled_residual needs a grid of at least 3 points")
    if not np.all(np.diff(xs) > 0):
        raise DomainError("x_grid must be strictly increasing")
    exps, hyp, coeff = _prepare(omega, m, coeff)
    h = 0.5 * float(np.min(np.diff(xs)))

    def z_pair(x):
        z, u, log_z, log_u = _logs_from_x(x)
        r1 = _rotated(1, branch, exps, hyp, coeff, z, u, log_z, log_u)
        r2 = _rotated(2, branch, exps, hyp, coeff, z, u, log_z, log_u)
        return _QUARTER_TURN * (r1 + 1j * r2), _QUARTER_TURN * (r1 - 1j * r2)

    worst = 0.0
    iw = 1j * complex(omega)
    for x in xs:
        zp, zm = zip(*(z_pair(x + k * h) for k in (-2, -1, 0, 1, 2)))
        dzp = (zp[0] - 8 * zp[1] + 8 * zp[3] - zp[4]) / (12 * h)
        dzm = (zm[0] - 8 * zm[1] + 8 * zm[3] - zm[4]) / (12 * h)
        w = float(superpotential(x, m))
        res1 = dzp - w * zp[2] - iw * zm[2]
        res2 = dzm + w * zm[2] - iw * zp[2]
        scale = (1.0 + abs(iw) + abs(w)) * (abs(zp[2]) + abs(zm[2]))
        worst = max(worst, max(abs(res1), abs(res2)) / scale)
    return worst


def wronskian(sign, omega, m, z) -> complex:
    """Flux-form Wronskian z(1-z) (Z^I dZ^II/dz - Z^II dZ^I/dz) at z.

    The z(1-z) weight is the self-adjoint coefficient of the transformed
    wave equation (equivalently, this is the plain x-Wronskian), so the
    value is z-independent:  +/- (2 omega / m)(1 - c1) for the unit
    normalization G1 = H1 = 1, which this routine fixes.

    The derivatives are evaluated numerically (five-point stencil) so the
    constancy check is independent of the algebra that predicts it.
    """
    exps, hyp, coeff = _prepare(omega, m, None)
    z = float(z)
    if not 0.0 < z < 1.0:
        raise DomainError(f"z = {z} outside (0, 1)")
    h = 1e-3 * min(z, 1.0 - z, 0.5)

    def val(branch, zz):
        return exact_solution_at_z(branch, sign, omega, m, zz, coeff)

    d = {}
    for branch in ("I", "II"):
        f = [val(branch, z + k * h) for k in (-2, -1, 1, 2)]
        d[branch] = (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * h)
    zi = val("I", z)
    zii = val("II", z)
    return z * (1.0 - z) * (zi * d["II"] - zii * d["I"])


def sample_wavefield(branch, sign, omega, m, grid, coeff: SolutionCoefficients | None = None) -> WaveField:
    """Sample an exact solution on an x grid into a :class:`WaveField`."""
    exps, hyp, coeff = _prepare(omega, m, coeff)
    xs = np.asarray(grid, dtype=float)
    vals = np.empty(xs.size, dtype=complex)
    for i, x in enumerate(xs.ravel()):
        z, u, log_z, log_u = _logs_from_x(float(x))
        vals[i] = _solution_from_logs(branch, sign, exps, hyp, coeff, z, u, log_z, log_u)
    kind = PotentialKind.PLUS if sign == 1 else PotentialKind.MINUS
    return WaveField(grid=xs, values=vals, omega=omega, m=float(m), kind=kind, branch=branch)
