"""Complex-argument special functions: log-Gamma, Gamma ratios, and the
Gauss hypergeometric function 2F1(a,b;c;z) for complex parameters and real
argument z in [0, 1).

Everything here is a pure function of its inputs and safe to call
concurrently.  The evaluation strategy:

* ``lngamma`` -- Lanczos rational approximation for small ``|z|`` in the
  right half-plane, a compensated Stirling series (with recurrence
  shifting) for large ``|z|``, and the reflection formula for
  ``Re(z) < 1/2``.
* ``hyp2f1`` -- the defining Gauss series up to ``z = Z_SWITCH``; beyond
  that the connection formula toward z = 1 (``connect_near_one``), whose
  series argument ``1 - z`` is then small.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateParamsError, DomainError, NonConvergenceError, PoleError

__all__ = [
    "Hyp2F1Params",
    "POLE_TOL",
    "Z_SWITCH",
    "MAX_SERIES_TERMS",
    "lngamma",
    "gamma_ratio",
    "hyp2f1",
    "connect_near_one",
]

# An argument within this distance of a non-positive integer is treated as
# sitting on a Gamma pole; the same tolerance flags integer degeneracies.
POLE_TOL = 1e-9

# Hand-off point between the Gauss series and the connection formula.  Both
# representations converge comfortably in a window around it, which the test
# suite uses as a consistency check.
Z_SWITCH = 0.5

MAX_SERIES_TERMS = 10_000
_SERIES_STOP = 1e-16

_LOG_PI = 1.1447298858494001741434273
_HALF_LOG_TWO_PI_HI = 0.9189385332046727
_HALF_LOG_TWO_PI_LO = 5.2907123667054244e-17

# Lanczos coefficients, g = 7, n = 9.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_{2n} / (2n (2n-1)) for the Stirling asymptotic series of log-Gamma.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
)

# |z| above which the shifted Stirling branch takes over from Lanczos.
_STIRLING_RADIUS = 10.0
# Recurrence shifts push Re(z) at least this far right before the series.
_STIRLING_SHIFT_TO = 24.0


def _pole_distance(z: complex) -> float:
    """Distance from z to the nearest non-positive integer."""
    n = round(z.real)
    if n > 0:
        n = 0
    return abs(z - n)


def _near_integer(z: complex, tol: float = POLE_TOL) -> bool:
    return abs(z - round(z.real)) < tol


# -- error-free transformations for the compensated Stirling evaluation ----

def _two_sum(a: float, b: float):
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _split(a: float):
    t = 134217729.0 * a  # 2**27 + 1
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a: float, b: float):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(xh: float, xl: float, yh: float, yl: float):
    sh, sl = _two_sum(xh, yh)
    sl += xl + yl
    return _two_sum(sh, sl)


def _lngamma_stirling(z: complex) -> complex:
    """Stirling series after shifting Re(z) right; the dominant
    (z - 1/2) log z - z term is accumulated in double-double arithmetic so
    exp(lngamma) keeps ~1e-14 relative accuracy out to |z| = 100."""
    sh_re = sh_im = sl_re = sl_im = 0.0
    while z.real < _STIRLING_SHIFT_TO:
        lg = cmath.log(z)
        sh_re, sl_re = _dd_add(sh_re, sl_re, lg.real, 0.0)
        sh_im, sl_im = _dd_add(sh_im, sl_im, lg.imag, 0.0)
        z += 1.0

    w2 = 1.0 / (z * z)
    series = 0.0j
    for c in reversed(_STIRLING):
        series = (series + c) * w2
    series *= z  # series = sum c_n z^{-(2n-1)}

    lg = cmath.log(z)
    zr, zi = z.real - 0.5, z.imag
    # (z - 1/2) * log z, real and imaginary parts in double-double
    p1h, p1l = _two_prod(zr, lg.real)
    p2h, p2l = _two_prod(-zi, lg.imag)
    reh, rel = _dd_add(p1h, p1l, p2h, p2l)
    q1h, q1l = _two_prod(zr, lg.imag)
    q2h, q2l = _two_prod(zi, lg.real)
    imh, iml = _dd_add(q1h, q1l, q2h, q2l)

    reh, rel = _dd_add(reh, rel, -z.real, 0.0)
    imh, iml = _dd_add(imh, iml, -z.imag, 0.0)
    reh, rel = _dd_add(reh, rel, _HALF_LOG_TWO_PI_HI, _HALF_LOG_TWO_PI_LO)
    reh, rel = _dd_add(reh, rel, series.real, 0.0)
    imh, iml = _dd_add(imh, iml, series.imag, 0.0)
    reh, rel = _dd_add(reh, rel, -sh_re, -sl_re)
    imh, iml = _dd_add(imh, iml, -sh_im, -sl_im)
    return complex(reh + rel, imh + iml)


def lngamma(z: complex) -> complex:
    """Log-Gamma of a complex argument.

    Satisfies ``exp(lngamma(z)) == Gamma(z)`` to better than 1e-13 relative
    accuracy for ``|z| <= 100`` away from the poles.  The imaginary part is
    continuous on the right half-plane; across the reflection step it is
    only defined modulo 2*pi*i, which every downstream use (ratios fed
    through ``exp``) is insensitive to.

    Raises
    ------
    PoleError
        If ``z`` is within ``POLE_TOL`` of a non-positive integer.
    """
    z = complex(z)
    if _pole_distance(z) < POLE_TOL:
        raise PoleError(z)
    if z.real < 0.5:
        # reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        return _LOG_PI - cmath.log(cmath.sin(cmath.pi * z)) - lngamma(1.0 - z)
    if abs(z) >= _STIRLING_RADIUS:
        return _lngamma_stirling(z)
    zm1 = z - 1.0
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (zm1 + i)
    t = zm1 + 7.5
    # t = z + 6.5, so (z - 1/2)(log t - 1) - 7 avoids the large cancellation
    # of (z - 1/2) log t - t.
    return _HALF_LOG_TWO_PI_HI + (zm1 + 0.5) * (cmath.log(t) - 1.0) - 7.0 + cmath.log(acc)


def gamma_ratio(numerators, denominators) -> complex:
    """prod Gamma(numerators) / prod Gamma(denominators), evaluated in log
    space so products like Gamma(1-a1)Gamma(1-b1)Gamma(c1)/... neither
    overflow nor lose precision to cancellation.

    Numerator arguments at a pole raise ``PoleError(location="numerator")``
    (the ratio is infinite -- an amplitude pole); denominator poles violate
    the precondition and raise ``PoleError(location="denominator")``.
    Numerator poles are reported first when both occur.
    """
    for u in numerators:
        if _pole_distance(complex(u)) < POLE_TOL:
            raise PoleError(complex(u), location="numerator")
    for v in denominators:
        if _pole_distance(complex(v)) < POLE_TOL:
            raise PoleError(complex(v), location="denominator")
    acc = 0.0j
    for u in numerators:
        acc += lngamma(u)
    for v in denominators:
        acc -= lngamma(v)
    return cmath.exp(acc)


@dataclass(frozen=True)
class Hyp2F1Params:
    """Arguments of 2F1(a, b; c; z) on the real segment z in [0, 1).

    ``c`` must stay clear of the non-positive integers (the series
    coefficients have Gamma(c + k) poles there) and ``z`` must lie in
    [0, 1); both are checked at construction.
    """

    a: complex
    b: complex
    c: complex
    z: float

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "z", float(self.z))
        if _pole_distance(self.c) < POLE_TOL:
            raise PoleError(self.c, location="denominator")
        if not 0.0 <= self.z < 1.0:
            raise DomainError(f"z = {self.z} outside [0, 1)")


def _gauss_series(a, b, c, z, max_terms=MAX_SERIES_TERMS) -> complex:
    """Raw Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k with a term-ratio
    stopping rule.  Assumes |z| < 1 and c off the pole set."""
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        total += term
        if abs(term) <= _SERIES_STOP * abs(total):
            return total
    raise NonConvergenceError(
        f"Gauss series for 2F1({a}, {b}; {c}; {z}) did not converge in {max_terms} terms"
    )


def _ratio_or_zero(numerators, denominators) -> complex:
    """Gamma ratio where a denominator pole means the ratio is exactly zero
    (1/Gamma vanishing), as happens when a connection coefficient dies."""
    try:
        return gamma_ratio(numerators, denominators)
    except PoleError as err:
        if err.location == "denominator":
            return 0.0j
        raise


def _hyp2f1_complement(a, b, c, u, log_u, max_terms=MAX_SERIES_TERMS) -> complex:
    """Connection-formula value of 2F1(a,b;c;1-u) from the complement u=1-z.

    ``u`` and ``log_u`` are supplied separately so callers that know u to
    full relative precision (e.g. u = 1/(1+e^x)) do not lose digits to the
    1-z subtraction.  Requires c-a-b away from the integers.
    """
    s = c - a - b
    if _near_integer(s):
        raise DegenerateParamsError(
            f"c - a - b = {s} is within {POLE_TOL} of an integer; "
            "the connection formula degenerates"
        )
    first = _ratio_or_zero([c, s], [c - a, c - b])
    if first != 0.0:
        first *= _gauss_series(a, b, 1.0 - s, u, max_terms)
    second = _ratio_or_zero([c, -s], [a, b])
    if second != 0.0:
        second *= cmath.exp(s * log_u) * _gauss_series(c - a, c - b, 1.0 + s, u, max_terms)
    return first + second


def hyp2f1(p: Hyp2F1Params, max_terms: int = MAX_SERIES_TERMS) -> complex:
    """2F1(a, b; c; z) for complex parameters and real z in [0, 1).

    Uses the Gauss series for ``z <= Z_SWITCH`` and the connection formula
    toward z = 1 otherwise.  Relative accuracy is ~1e-11 or better away
    from the c-a-b integer degeneracy.

    Raises
    ------
    NonConvergenceError
        If the series fails to meet the term-ratio stop within
        ``max_terms`` terms.
    DegenerateParamsError
        If ``z > Z_SWITCH`` and c-a-b is within tolerance of an integer.
    """
    if p.z <= Z_SWITCH:
        return _gauss_series(p.a, p.b, p.c, p.z, max_terms)
    return connect_near_one(p, max_terms)


def connect_near_one(p: Hyp2F1Params, max_terms: int = MAX_SERIES_TERMS) -> complex:
    """Evaluate 2F1(a, b; c; z) through the connection formula at 1 - z:

        G(c)G(c-a-b)/(G(c-a)G(c-b)) * 2F1(a, b; a+b+1-c; 1-z)
      + G(c)G(a+b-c)/(G(a)G(b)) * (1-z)^(c-a-b) * 2F1(c-a, c-b; c+1-a-b; 1-z)

    with principal-branch powers (1 - z > 0 on the physical domain).
    Intended for z above ``Z_SWITCH`` but valid on the whole overlap
    window, which the tests exercise.
    """
    u = 1.0 - p.z
    return _hyp2f1_complement(p.a, p.b, p.c, u, math.log(u), max_terms)
