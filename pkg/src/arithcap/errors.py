"""Exception hierarchy.

Every error carries an ``exit_code`` class attribute so the CLI can map it to
one of three classes: 1 (bad input), 2 (numeric failure), 3 (a domain
hypothesis does not hold for the input).
"""


class CapacityError(Exception):
    exit_code = 1
    code = "error"


class SchemaError(CapacityError):
    code = "schema"


class DomainError(CapacityError, ValueError):
    code = "domain"


class DimensionMismatch(CapacityError, ValueError):
    code = "dimension_mismatch"


class AsymmetricMatrix(CapacityError, ValueError):
    code = "asymmetric_matrix"


class SymmetryViolation(CapacityError, ValueError):
    code = "symmetry_violation"

    def __init__(self, message, i=None, j=None, generator=None):
        super().__init__(message)
        self.i, self.j, self.generator = i, j, generator


class InconsistentScenario(CapacityError):
    code = "inconsistent_scenario"


class ScaleCap(CapacityError, ValueError):
    code = "scale_cap"


class NumericFailure(CapacityError, ArithmeticError):
    exit_code = 2
    code = "numeric_failure"


class NotNegativeDefinite(NumericFailure):
    code = "not_negative_definite"


class SingularMatrix(NumericFailure):
    code = "singular_matrix"


class SearchExhausted(NumericFailure):
    code = "search_exhausted"


class DomainHypothesisFailure(CapacityError):
    exit_code = 3
    code = "hypothesis_failure"


class BoundaryOptimum(DomainHypothesisFailure):
    code = "boundary_optimum"

    def __init__(self, message, s_hat=None):
        super().__init__(message)
        self.s_hat = s_hat


class NotSupercritical(DomainHypothesisFailure):
    code = "not_supercritical"
