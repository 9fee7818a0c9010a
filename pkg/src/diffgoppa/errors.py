"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``code`` string; the CLI maps
these to exit status 1 (input problems) and serializes them on stderr.
"""


class DiffGoppaError(Exception):
    code = "error"

    def __init__(self, message="", **context):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.context = context


class NotPrime(DiffGoppaError):
    code = "not-prime"


class ReducibleModulus(DiffGoppaError):
    code = "reducible-modulus"


class NoBuiltinModulus(DiffGoppaError):
    code = "no-builtin-modulus"


class DivisionByZero(DiffGoppaError):
    code = "division-by-zero"


class FieldMismatch(DiffGoppaError):
    code = "field-mismatch"


class BudgetExceeded(DiffGoppaError):
    code = "budget-exceeded"


class NotAUnit(DiffGoppaError):
    code = "not-a-unit"


class NonvanishingConstantTerm(DiffGoppaError):
    code = "nonvanishing-constant-term"


class NotAReparametrization(DiffGoppaError):
    code = "not-a-reparametrization"


class PrecisionUnderflow(DiffGoppaError):
    code = "precision-underflow"


class CombinatorialBudgetExceeded(DiffGoppaError):
    code = "combinatorial-budget-exceeded"


class TwoTorsionPoint(DiffGoppaError):
    code = "two-torsion-point"


class Unsupported(DiffGoppaError):
    code = "unsupported"


class NegativeDualDegree(DiffGoppaError):
    code = "negative-dual-degree"


class RankDeficiency(DiffGoppaError):
    code = "rank-deficiency"


class NonUniformBlocks(DiffGoppaError):
    code = "non-uniform-blocks"


class BlockMismatch(DiffGoppaError):
    code = "block-mismatch"


class OrderMismatch(DiffGoppaError):
    code = "order-mismatch"


class ZeroVector(DiffGoppaError):
    code = "zero-vector"


class RankDeficient(DiffGoppaError):
    code = "rank-deficient"


class FieldTooSmall(DiffGoppaError):
    code = "field-too-small"


class InputError(DiffGoppaError):
    code = "input-error"
