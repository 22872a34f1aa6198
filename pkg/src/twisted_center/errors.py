"""Exception hierarchy.

``InputError`` subclasses describe bad user input (CLI exit code 2).
``MethodsDisagree`` and ``InternalInconsistency`` signal bugs and are fatal.
"""


class TwistedCenterError(Exception):
    pass


class InputError(TwistedCenterError, ValueError):
    pass


class NotPrime(InputError):
    def __init__(self, p):
        super().__init__(f"{p} is not a prime")
        self.p = p


class NotAUnit(TwistedCenterError, ArithmeticError):
    def __init__(self, value, modulus):
        super().__init__(f"{value} is not invertible mod {modulus}")
        self.value = value
        self.modulus = modulus


class EmptyShape(InputError):
    pass


class ExponentsNotStrictlyDecreasing(InputError):
    pass


class WrongDimensions(InputError):
    pass


class NotAntisymmetric(InputError):
    """Entries (u, v) and (v, u) do not sum to zero; indices are 1-based."""

    def __init__(self, u, v, modulus):
        super().__init__(
            f"matrix is not antisymmetric at entries ({u},{v}) and ({v},{u}) "
            f"mod {modulus}"
        )
        self.u = u
        self.v = v


class NonzeroDiagonal(InputError):
    def __init__(self, u):
        super().__init__(f"diagonal entry ({u},{u}) is nonzero")
        self.u = u


class TooLargeToEnumerate(InputError):
    def __init__(self, size, cap):
        super().__init__(f"{size} items exceed the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class TooLargeToValidate(InputError):
    def __init__(self, order, cap):
        super().__init__(f"group of order {order} exceeds the cocycle cap {cap}")
        self.order = order
        self.cap = cap


class NotACocycle(InputError):
    """The 2-cocycle identity fails at the (lexicographically first) triple."""

    def __init__(self, sigma, tau, rho):
        super().__init__(f"cocycle identity fails at ({sigma}, {tau}, {rho})")
        self.triple = (sigma, tau, rho)


class PairingOrderViolation(InputError):
    def __init__(self, u, v, exponent, divisor):
        super().__init__(
            f"commutator exponent {exponent} at generators ({u},{v}) is not "
            f"divisible by {divisor}"
        )
        self.u = u
        self.v = v


class DuplicatePrime(InputError):
    def __init__(self, p):
        super().__init__(f"prime {p} appears more than once")
        self.p = p


class MethodsDisagree(TwistedCenterError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class InternalInconsistency(TwistedCenterError):
    pass
