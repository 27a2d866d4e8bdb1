"""Exception types shared across the package."""


class AssessmentError(Exception):
    """Base class for every error raised by this package."""


class ScoreRangeError(AssessmentError):
    """A raw score lies outside the 0-100 marking scale."""


class EmptyGroupError(AssessmentError):
    """An operation that needs at least one student got none."""


class ConfigurationError(AssessmentError):
    """A grade scale or trapezoid geometry violates its constraints."""


class UsageError(AssessmentError):
    """Arguments cannot be compared, ranked or labelled as requested."""


class GeometryError(AssessmentError):
    """A polygon or particle system is degenerate."""


class ParseError(AssessmentError):
    """A score file or config file could not be parsed."""


class EmptyInputError(ParseError):
    """A score file contained no data rows."""
