"""Shared exception types."""

from __future__ import annotations


class TreeGradedError(Exception):
    """Base class for input and precondition errors raised by this package."""


class ShapeError(TreeGradedError):
    """A point, word, label, or map does not fit the piece it was used with."""


class OutOfRangeError(TreeGradedError):
    """A parameter lies outside its admissible interval."""


class FamilyMismatchError(TreeGradedError):
    """Values built over different piece families were combined."""


class AdmissibilityError(TreeGradedError):
    """The operation needs a non-empty admissible step sequence."""


class CapExceededError(TreeGradedError):
    """Geodesic enumeration exceeded the configured cap."""
