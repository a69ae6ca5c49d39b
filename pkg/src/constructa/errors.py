"""Exception hierarchy.

Every domain error carries a short ``code`` that the CLI prints in machine
mode (``error <code>``).  Errors that signal a violated existence theorem
(``NoIrreducibleFound``, ``NoGeneratorFound``, ...) must never fire; if one
does, there is a bug.
"""


class ConstructaError(Exception):
    code = "constructa-error"


class ArgumentOutOfRange(ConstructaError, ValueError):
    code = "argument-out-of-range"


class IterateBudgetExceeded(ConstructaError, RuntimeError):
    code = "iterate-budget-exceeded"


class DivisorZero(ConstructaError, ZeroDivisionError):
    code = "divisor-zero"


class ElementNotInCarrier(ConstructaError, ValueError):
    code = "element-not-in-carrier"


class NotCancellative(ConstructaError, ValueError):
    code = "not-cancellative"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptySet(ConstructaError, ValueError):
    code = "empty-set"


class NoDecompositionFound(ConstructaError, RuntimeError):
    code = "no-decomposition-found"


class ModulusTooSmall(ConstructaError, ValueError):
    code = "modulus-too-small"


class NotAUnit(ConstructaError, ValueError):
    code = "not-a-unit"


class ModuliNotCoprime(ConstructaError, ValueError):
    code = "moduli-not-coprime"

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class UnsupportedDigitRule(ConstructaError, ValueError):
    code = "unsupported-digit-rule"


class FieldMismatch(ConstructaError, ValueError):
    code = "field-mismatch"


class DivisionByZeroPoly(ConstructaError, ZeroDivisionError):
    code = "division-by-zero-poly"


class ZeroPolynomial(ConstructaError, ValueError):
    code = "zero-polynomial"


class NoIrreducibleFound(ConstructaError, RuntimeError):
    code = "no-irreducible-found"


class NotPrime(ConstructaError, ValueError):
    code = "not-prime"


class ReducibleModulus(ConstructaError, ValueError):
    code = "reducible-modulus"

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class CarrierCapExceeded(ConstructaError, ValueError):
    code = "carrier-cap-exceeded"


class NoGeneratorFound(ConstructaError, RuntimeError):
    code = "no-generator-found"


class SplitCheckFailed(ConstructaError, RuntimeError):
    code = "split-check-failed"


class OrderMismatch(ConstructaError, ValueError):
    code = "order-mismatch"


class NoRootFound(ConstructaError, RuntimeError):
    code = "no-root-found"


class CharacteristicUndetermined(ConstructaError, RuntimeError):
    code = "characteristic-undetermined"
