"""Error taxonomy for the engine.

Every failure mode that callers are expected to catch has its own class and a
stable ``code`` string, so CLI reports and tests can match on codes rather
than message text.  Errors that carry mathematical evidence (a vector that
breaks well-definedness, a basis index tuple violating an axiom) expose it as
a ``witness`` attribute in serializable form.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""

    code = "ENGINE_ERROR"

    def __init__(self, message="", **data):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.data = data

    def to_dict(self):
        out = {"code": self.code, "message": self.message}
        out.update(self.data)
        return out


class FieldMismatchError(EngineError):
    code = "FIELD_MISMATCH"


class DivisionByZeroError(EngineError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class ShapeMismatchError(EngineError):
    code = "SHAPE_MISMATCH"


class NoSolutionError(EngineError):
    code = "NO_SOLUTION"


class NotWellDefinedError(EngineError):
    """A map does not descend to a quotient; ``witness`` is a vector of the
    killed subspace whose image escapes the target's killed subspace."""

    code = "NOT_WELL_DEFINED"

    def __init__(self, message="", witness=None, **data):
        super().__init__(message, **data)
        self.witness = witness

    def to_dict(self):
        out = super().to_dict()
        out["witness"] = self.witness
        return out


class AntipodeNotBijectiveError(EngineError):
    code = "ANTIPODE_NOT_BIJECTIVE"


class VersionMismatchError(EngineError):
    code = "VERSION_MISMATCH"


class NotEpimorphismError(EngineError):
    code = "NOT_EPIMORPHISM"


class HypothesisFailedError(EngineError):
    """A lemma's hypothesis fails; ``which`` names the hypothesis."""

    code = "HYPOTHESIS_FAILED"

    def __init__(self, message="", which="", **data):
        super().__init__(message, which=which, **data)
        self.which = which


class CoinvariantsTooLargeError(EngineError):
    code = "COINVARIANTS_TOO_LARGE"


class NotGaloisError(EngineError):
    code = "NOT_GALOIS"


class NotCyclicError(EngineError):
    code = "NOT_CYCLIC"


class RequiresDegreesError(EngineError):
    """Computation at degree n needs levels up to ``needed`` but the complex
    was built lower."""

    code = "REQUIRES_DEGREES"

    def __init__(self, message="", needed=None, **data):
        super().__init__(message, needed=needed, **data)
        self.needed = needed


class TauNotWellDefinedError(EngineError):
    """The cyclic operator (or the flip-over face) fails to descend to the
    tensor-over-H quotient.  ``failures`` lists (degree, operator, witness)
    for every failing degree up to the requested cap."""

    code = "TAU_NOT_WELL_DEFINED"

    def __init__(self, message="", failures=None, ayd_report=None, **data):
        super().__init__(message, **data)
        self.failures = failures or []
        self.ayd_report = ayd_report

    def to_dict(self):
        out = super().to_dict()
        out["failures"] = [
            {"degree": d, "operator": op, "witness": w} for (d, op, w) in self.failures
        ]
        if self.ayd_report is not None:
            out["ayd_check"] = self.ayd_report.to_dict()
        return out


class OperatorEscapesSubspaceError(EngineError):
    """An operator of a Hom-type complex does not preserve the invariant or
    cotensor subspace cut out at some level."""

    code = "OPERATOR_ESCAPES_SUBSPACE"

    def __init__(self, message="", failures=None, **data):
        super().__init__(message, **data)
        self.failures = failures or []

    def to_dict(self):
        out = super().to_dict()
        out["failures"] = [
            {"degree": d, "operator": op, "witness": w} for (d, op, w) in self.failures
        ]
        return out


class ResourceCapError(EngineError):
    code = "RESOURCE_CAP"


class RepresentativeInvalidError(EngineError):
    code = "REPRESENTATIVE_INVALID"


class OutputNotCocycleError(EngineError):
    """A pairing produced a cochain that is not a cyclic cocycle.  This is a
    hard internal defect: it must abort, never be repaired silently."""

    code = "OUTPUT_NOT_COCYCLE"


class ParseError(EngineError):
    code = "PARSE_ERROR"

    def __init__(self, message="", where="", **data):
        super().__init__(message, where=where, **data)
        self.where = where
