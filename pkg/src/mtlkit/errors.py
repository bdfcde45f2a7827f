"""Exception hierarchy for mtlkit."""


class MTLError(Exception):
    """Base class for every error raised by mtlkit."""


class FormulaSyntaxError(MTLError, ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class PowerZero(FormulaSyntaxError):
    pass


class DimensionMismatch(MTLError, ValueError):
    pass


class NotResiduated(MTLError):
    def __init__(self, x, y):
        super().__init__(f"no residuum for pair ({x}, {y})")
        self.pair = (x, y)


class Unverified(MTLError):
    pass


class VerificationFailed(MTLError):
    def __init__(self, report, message=None):
        failed = [law for law in report.laws if not law.holds]
        if message is None:
            message = "verification failed: " + ", ".join(
                f"{law.name} (witness {law.witness})" for law in failed
            )
        super().__init__(message)
        self.report = report


class BadSize(MTLError, ValueError):
    pass


class NotChain(MTLError):
    pass


class NotAFilter(MTLError, ValueError):
    pass


class Trivial(MTLError):
    pass


class UnboundVariable(MTLError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unbound variable {self.name!r}"


class BudgetExceeded(MTLError):
    pass


class PremiseNotValid(MTLError):
    pass


class InvalidSpan(MTLError, ValueError):
    pass


class _UnknownName(MTLError, KeyError):
    what = "name"

    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown {self.what} {self.name!r}"


class UnknownScenario(_UnknownName):
    what = "scenario"


class UnknownProperty(_UnknownName):
    what = "property"


class FormatError(MTLError, ValueError):
    """Malformed algebra, span or census file."""
