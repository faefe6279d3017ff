"""Command base class for sub-command implementations.

This lives under `command_managers` so commands can import it without
depending on the `cli_base` shell.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from modules.config_manager import RunConfig
from modules.exceptions import ConfigError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class Command:
    """Minimal base class for one sub-command.

    Subclasses override `add_arguments` and `run`. `run` returns the exit
    code; errors propagate to the shell, which maps them to exit codes.
    """

    name: str = "command"
    help: str = ""

    def configure(self, subparsers: Any) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        parser.set_defaults(command=self.name)
        self.add_arguments(parser)
        return parser

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        return None

    def run(self, app: Any, args: argparse.Namespace) -> int:
        raise NotImplementedError()


def add_rank_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags shared by every command that builds a crystal."""
    parser.add_argument("-n", type=int, required=True, help="rank of A_n")
    parser.add_argument("--lambda", dest="lam", metavar="L1,...,Ln", help="dominant weight in the Lambda basis")
    parser.add_argument("--p", metavar="P1,...,Pn", help="positive integers of the M(p; r; infinity) family")
    parser.add_argument("--r", type=int, default=0, help="spectral shift r (default 0)")
    parser.add_argument("--c", default="default", help="c-matrix: default, an upper-triangle bit string or random:<seed>")
    parser.add_argument("--threads", type=int, default=None, help="worker cap; overrides CRYSTAL_THREADS")


def add_input_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default="-", help="element JSON file, or - for standard input")


def build_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_namespace(args).validate()


def read_json(app: Any, source: str) -> dict:
    """Element JSON from a path or from the app's standard input."""
    if source == "-":
        text = app.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ConfigError(f"cannot read --input {source}: {exc}") from exc
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ConfigError("element JSON must be an object")
    return data


__all__ = [
    "Command",
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "add_rank_arguments",
    "add_input_argument",
    "build_config",
    "read_json",
]
