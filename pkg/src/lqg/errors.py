"""Exception types shared across the toolkit."""


class LqgError(Exception):
    """Base class for every toolkit error."""


class DimensionMismatch(LqgError):
    """Operands live on carrier sets of different sizes."""


class NotAQuasigroup(LqgError):
    """A table is not a Latin square."""


class NotAssociative(LqgError):
    """A Latin table fails associativity, so it is not a group table."""


class NoIdentity(LqgError):
    """A table has no two-sided identity element."""


class MorphismViolation(LqgError):
    """A map does not satisfy the morphism condition its role requires."""


class KindMismatch(LqgError):
    """An operation received a LinearSpec of an unsupported kind."""


class NotAQuasiendomorphism(LqgError):
    """A self-map is not the third component of any endotopy of the group."""


class HNotClosed(LqgError):
    """A subset is not closed under the quasigroup operation and divisions."""


class PreconditionFailed(LqgError):
    """A checker was invoked on an instance outside its hypotheses."""


class PredictionFailed(LqgError):
    """A predicted parastrophe form does not match the computed table."""

    def __init__(self, tag, detail):
        super().__init__(f"prediction failed for parastrophe {tag}: {detail}")
        self.tag = tag
        self.detail = detail


class FormulaViolation(LqgError):
    """A closed-form endotopy fails the defining identity; carries the parameters."""

    def __init__(self, params, cell, message=""):
        super().__init__(message or f"closed-form triple {params} violates the endotopy identity at {cell}")
        self.params = params
        self.cell = cell


class NoDecomposition(LqgError):
    """An endomorphism admits no parameter triple in the closed form."""


class WitnessNotFound(LqgError):
    """A medial table for which no abelian linear witness could be produced."""
