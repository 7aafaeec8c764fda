"""Exception hierarchy shared by the vdemask modules."""

from __future__ import annotations


class VdeMaskError(Exception):
    """Base class for all vdemask errors."""


class DomainError(VdeMaskError, ValueError):
    """An argument lies outside the domain of an operation."""


class UnitError(DomainError):
    """Two decibel quantities of incompatible kinds or bandwidths were combined."""


class InfeasibleBudgetError(VdeMaskError):
    """The wanted carrier cannot meet its protection ratio even with zero interference.

    ``shortfall_db`` is how far the available carrier-to-noise ratio falls
    short of what the criterion needs.
    """

    def __init__(self, message: str, shortfall_db: float):
        super().__init__(f"{message} (shortfall {shortfall_db:.2f} dB)")
        self.shortfall_db = shortfall_db


class ConfigError(VdeMaskError):
    """Base class for scenario configuration problems."""


class ConfigNotFoundError(ConfigError):
    pass


class ConfigSyntaxError(ConfigError):
    def __init__(self, path: str, line: int | None, detail: str):
        where = f"{path}, line {line}" if line is not None else path
        super().__init__(f"syntax error in {where}: {detail}")
        self.line = line


class UnknownKeyError(ConfigError):
    def __init__(self, key: str):
        super().__init__(f"unknown configuration key: {key}")
        self.key = key


class OutOfRangeError(ConfigError):
    def __init__(self, key: str, value: object, reason: str):
        super().__init__(f"value {value!r} for '{key}' is out of range: {reason}")
        self.key = key
        self.value = value


class DataFileError(VdeMaskError):
    """A mask or overlay CSV could not be read."""
