class PcplabError(ValueError):
    """Base class for every error raised by pcplab."""


class BaseMismatchError(PcplabError):
    """Two values built over different bases n (or different sessions) were combined."""


class NotNAdicError(PcplabError):
    """A rational that must be of the form p/n^e is not."""


class DomainError(PcplabError):
    """A point or set lies outside the domain of a partial map."""


class ComposabilityError(PcplabError):
    """Two groupoid elements do not form a composable pair."""


class CoefficientInvariantError(PcplabError):
    """A monomial coefficient is not supported inside ran beta_g."""

    def __init__(self, message: str, interval=None, allowed=None):
        super().__init__(message)
        self.interval = interval
        self.allowed = allowed


class ExprSyntaxError(PcplabError):
    """The expression text does not match the grammar."""

    def __init__(self, message: str, position: int = 0, column: int = 1):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.column = column


class ConfigError(PcplabError):
    """Invalid session configuration or out-of-range parameter."""
