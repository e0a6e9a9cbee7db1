"""Domain exceptions shared across the package."""


class OrecodecError(Exception):
    """Base class for all structured errors raised by orecodec."""


class MixedFieldContexts(OrecodecError):
    """Operands belong to different field contexts."""


class InvalidModulus(OrecodecError):
    """Field modulus is malformed or reducible."""


class InverseOfZero(OrecodecError):
    """Multiplicative inverse of zero requested."""


class DivisionByZeroPoly(OrecodecError):
    """Polynomial division by the zero polynomial."""


class ConjugateByZero(OrecodecError):
    """Twisted conjugation requires an invertible conjugator."""


class NotMonic(OrecodecError):
    """A monic polynomial was required."""


class NotRightDivisor(OrecodecError):
    """Generator does not right-divide the modulus."""


class DimensionMismatch(OrecodecError):
    """Vector or matrix dimensions do not match."""


class SingularMatrix(OrecodecError):
    """Matrix inversion attempted on a singular matrix."""


class SingularP(SingularMatrix):
    """Similarity witness matrix is not invertible."""


class PreconditionViolated(OrecodecError):
    """A stated hypothesis of the operation does not hold."""


class TooLargeToEnumerate(OrecodecError):
    """Enumeration guard tripped; raise the limit or pass force=True."""


class SearchSpaceTooLarge(OrecodecError):
    """Search guard tripped; pass force=True to run anyway."""


class DecompositionHypothesisViolated(OrecodecError):
    """Eigenspace decomposition hypotheses fail for the given data."""


class NoBezoutSolution(OrecodecError):
    """No projection polynomials exist within the solver's degree bounds."""
