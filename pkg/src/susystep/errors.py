"""Exception hierarchy shared by all susystep modules."""


class SusystepError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SusystepError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(SusystepError):
    """A Gamma-function argument sits on (or too close to) a pole.

    ``location`` distinguishes where the pole occurred inside a Gamma
    ratio: ``"numerator"`` poles make the ratio infinite (an amplitude
    pole, which quasinormal-mode detection exploits), ``"denominator"``
    poles make it zero and violate the caller's precondition.
    """

    def __init__(self, argument, location="numerator"):
        self.argument = argument
        self.location = location
        super().__init__(
            f"Gamma argument {argument} is within tolerance of a non-positive "
            f"integer ({location} pole)"
        )


class NonConvergenceError(SusystepError):
    """A series failed to converge within the allowed number of terms."""


class DegenerateParamsError(SusystepError):
    """c - a - b is too close to an integer for the connection formula."""


class ZeroFrequencyError(SusystepError):
    """omega = 0, where the first-order factorization of the wave equation fails."""


class DegenerateCError(SusystepError):
    """The hypergeometric parameter c1 is too close to an integer, so the
    two power-series solutions degenerate (a logarithmic branch appears)."""


class GammaPoleError(SusystepError):
    """A scattering Gamma-product hit a pole; signals a quasinormal
    frequency or degenerate parameters rather than a numerical bug."""


class ConfigError(SusystepError):
    """An integration configuration is inconsistent or unusable."""


class BlowUpError(SusystepError):
    """The integrated wavefunction exceeded the overflow guard; the
    frequency is below the propagation threshold or the step is too coarse."""


class IllConditionedError(SusystepError):
    """The boundary-matching least-squares system is numerically singular."""
