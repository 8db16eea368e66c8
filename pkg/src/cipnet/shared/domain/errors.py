"""Domain error primitives shared by every module.

Each module raises its own subclasses (see ``<module>/exceptions.py``).
The CLI catches ``CipnetError`` in one place and translates ``code`` and
``exit_status`` into a one-line diagnostic and a process exit status.
"""

from __future__ import annotations

from typing import Any


class CipnetError(Exception):
    """Root of every error raised by the package."""

    code: str = "cipnet_error"
    exit_status: int = 1

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context = context

    def as_dict(self) -> dict[str, Any]:
        return {
            "code": self.code,
            "exit_status": self.exit_status,
            "message": self.message,
            **{key: str(value) for key, value in self.context.items()},
        }


class InvalidInput(CipnetError):
    """Input text, file or parameters violate a precondition."""

    code = "invalid_input"
    exit_status = 3


class DomainViolation(CipnetError):
    """The input is well formed but the math is undefined for it."""

    code = "domain_violation"
    exit_status = 3


class NotConverged(CipnetError):
    """An iterative numeric kernel ran out of iterations."""

    code = "not_converged"
    exit_status = 4
