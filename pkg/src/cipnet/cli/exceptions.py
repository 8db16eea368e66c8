"""CLI exceptions."""

from __future__ import annotations

from cipnet.shared.domain.errors import InvalidInput


class InvalidArguments(InvalidInput):
    """The command line does not parse."""

    code = "invalid_arguments"


class InvalidConfig(InvalidInput):
    """Parsed options fail validation."""

    code = "invalid_config"
