"""Exceptions raised by the workbench."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for every error the workbench raises on purpose."""


class SeriesShapeError(WorkbenchError, ValueError):
    """A series was built with the wrong length or combined across orders."""


class ParameterError(WorkbenchError, ValueError):
    """A numeric parameter is outside the range an operation accepts."""


class InputFormatError(WorkbenchError, ValueError):
    """A JSON input document is malformed. The message names the field."""

    def __init__(self, field: str, problem: str):
        super().__init__(f"{field}: {problem}")
        self.field = field


class BracketError(WorkbenchError, ArithmeticError):
    """A bisection bracket does not straddle a sign change."""
