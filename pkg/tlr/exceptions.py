from typing import Any


class TlrError(Exception):
    """Base error carrying structured details about what went wrong.

    The rendered message is a single line so it can be surfaced directly as a
    CLI diagnostic.
    """

    def __init__(
        self,
        message: str | None = None,
        *,
        key: str | None = None,
        expected: str | list[str] | None = None,
        got: Any = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        parts: list[str] = []
        if message:
            parts.append(message)
        if expected is not None:
            exp_text = (
                ", ".join(expected) if isinstance(expected, list) else str(expected)
            )
            parts.append(f"expected: {exp_text}")
        if got is not None:
            got_text = str(got)
            # Long arrays make unreadable diagnostics
            got_text = got_text if len(got_text) <= 200 else got_text[:197] + "..."
            parts.append(f"got: {got_text}")
        if details:
            parts.append(f"details: {details}")

        prefix = f"{key}: " if key is not None else ""
        super().__init__(prefix + "; ".join(parts) if parts or prefix else None)
        self.key = key
        self.expected = expected
        self.got = got
        self.details = details or {}


class ModelValidationError(TlrError, ValueError):
    """Raised when inputs or configuration violate a documented precondition."""


class PhysicalDomainError(TlrError, ValueError):
    """Raised when a state leaves the physically meaningful domain of a law."""


class SolverError(TlrError, RuntimeError):
    """Raised when a linear solve fails or the system is singular."""


class TautLineError(SolverError):
    """Raised when the sag chain is driven into the taut-line regime (L <= S_L)."""
