"""Exception hierarchy for the extortion package."""

from __future__ import annotations


class ExtortionError(Exception):
    """Base class for every error raised by this package."""


class GameValidationError(ExtortionError):
    """A game definition is malformed (labels, dimensions, payoff tensor)."""


class ThreatValidationError(ExtortionError):
    """A binding threat is inconsistent with itself or with its base game."""


class DegeneracyError(ExtortionError):
    """A payoff tie breaks a comparison the analysis requires to be strict."""


class AmbiguousEquilibriumError(ExtortionError):
    """A game that must have a unique pure equilibrium has zero or several."""


class ConsistencyError(ExtortionError):
    """A closed-form prediction disagrees with brute-force re-verification."""


class FileFormatError(ExtortionError):
    """An input document does not conform to the expected file format."""
