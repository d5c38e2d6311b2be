"""Command requests, logging setup and report output for the command line"""

from __future__ import annotations

__all__ = [
    "CommandRequest",
    "configure_logging",
    "emit",
]

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from level4_braids.config import Limits
from level4_braids.utils import resolve_path, write_report

# argparse fields that are not command parameters
_GLOBAL = ("command", "format", "out", "verbose", "progress", "bound", "seed")


@dataclass(frozen=True, slots=True)
class CommandRequest:
    """A parsed subcommand with its parameters and output settings."""
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    fmt: str = "json"
    out: Path | None = None
    seed: int = 0
    progress: bool = False
    limits: Limits = field(default_factory=Limits.from_env)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> CommandRequest:
        limits = Limits.from_env(seed=ns.seed)
        if ns.bound is not None:
            limits = limits.with_overrides(
                enumeration=ns.bound, oracle=ns.bound,
                presentation=max(ns.bound, limits.presentation),
            )
        params = {k: v for k, v in vars(ns).items() if k not in _GLOBAL}
        return cls(
            command=ns.command,
            params=params,
            fmt=ns.format,
            out=resolve_path(ns.out) if ns.out else None,
            seed=ns.seed,
            progress=ns.progress,
            limits=limits,
        )


def configure_logging(verbosity: int) -> None:
    """WARNING by default, INFO with -v, DEBUG with -vv; always on stderr."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def emit(payload: Any, request: CommandRequest) -> str:
    return write_report(payload, request.out, request.fmt)
