"""Exception hierarchy shared by every module in the package."""


class EntBasisError(ValueError):
    """Base class for all errors raised by entbasis."""


class EmptyPattern(EntBasisError):
    pass


class InvalidPattern(EntBasisError):
    pass


class InvalidSign(EntBasisError):
    pass


class OutOfRange(EntBasisError):
    pass


class TooFewQubits(EntBasisError):
    pass


class TooManyQubits(EntBasisError):
    """Raised when a dense allocation would exceed the memory guard."""


class LabelLengthMismatch(EntBasisError):
    pass


class QubitOutOfRange(EntBasisError):
    pass


class WidthMismatch(EntBasisError):
    pass


class QasmError(EntBasisError):
    """Base class for QASM parse failures. Carries the 1-based line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class QasmSyntaxError(QasmError):
    pass


class UnsupportedGate(QasmError):
    pass


class RegisterMismatch(QasmError):
    pass
