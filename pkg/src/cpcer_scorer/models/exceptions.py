"""Exceptions raised by the scorer, each mapped to a CLI exit code."""

from typing import Optional


class CpcerError(Exception):
    """Base class for every scorer failure."""

    error_code = "CPCER_ERROR"
    exit_code = 3

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ConfigError(CpcerError):
    """Invalid configuration file or option values."""

    error_code = "CONFIG_ERROR"
    exit_code = 1


class InvalidEncoding(CpcerError):
    """Input bytes are not valid UTF-8."""

    error_code = "INVALID_ENCODING"
    exit_code = 2


class ParseError(CpcerError):
    """A transcript file could not be parsed."""

    error_code = "PARSE_ERROR"
    exit_code = 2

    def __init__(self, message: str, source: str = "<bytes>", location: Optional[str] = None):
        self.source = source
        self.location = location
        where = f"{source}:{location}" if location is not None else source
        super().__init__(f"{where}: {message}")


class ScoringError(CpcerError):
    """A session or corpus cannot be scored."""

    error_code = "SCORING_ERROR"
    exit_code = 3


class EmptyReference(ScoringError):
    """The reference has no tokens, so the error rate is undefined."""

    error_code = "EMPTY_REFERENCE"


class TooManySpeakers(ScoringError):
    """Permutation enumeration was requested for too many speakers."""

    error_code = "TOO_MANY_SPEAKERS"


class NoOverlap(ScoringError):
    """Reference and hypothesis share no session."""

    error_code = "NO_OVERLAP"


class ReportIoError(CpcerError):
    """The report could not be written."""

    error_code = "IO_ERROR"
    exit_code = 3
