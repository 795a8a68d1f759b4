"""Error types shared across the engine, CLI, and service."""

from __future__ import annotations


class TriaxisError(Exception):
    """Base class for all engine errors. ``category`` feeds the CLI error
    prefix and the service error envelope."""

    category = "internal"

    def __init__(self, message: str, *, field_path: str | None = None):
        super().__init__(message)
        self.message = message
        self.field_path = field_path


class ValidationError(TriaxisError):
    """Invalid input: out-of-range value, broken invariant, unresolved
    reference, or malformed document. ``field_path`` names the offending
    field when known (e.g. ``roles[2].impact.scale``)."""

    category = "validation"


class InfeasibleError(TriaxisError):
    """The inputs are valid but the requested result does not exist
    (e.g. a household game with no feasible strategy profile)."""

    category = "infeasible"
