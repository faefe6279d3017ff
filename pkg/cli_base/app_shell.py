#!/usr/bin/env python3
"""Application shell - minimal command-line framework that delegates to commands.

This module contains only the parser, the dispatch to command managers and
the mapping from errors to exit codes. All work is delegated to commands
(generate, verify, convert, member).

Architecture:
- App owns: argument parsing, stream wiring, error reporting, exit codes
- Commands own: their flags and the flow of one sub-command
- Features own: verification checks, no output
- Modules own: domain logic (crystals, realizations, serialization)

All communication flows: App -> Command -> Feature -> Module (one direction only)

Exit codes: 0 success, 1 counterexample or failed membership, 2 bad
configuration or unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from command_managers.command import EXIT_FAILURE, EXIT_USAGE
from command_managers.command_registry import registry as command_registry
from modules.error_dispatcher import ErrorDispatcher, ErrorEvent, ErrorLevel
from modules.exceptions import CrystalError, MembershipError
from modules.save_manager import SaveManager

PROG = "pyNakajimaCrystals"


class CrystalCliApp:
    """Command-line application - minimal shell that delegates to command managers.

    Responsibilities:
    - Build the parser from the registered commands
    - Route one invocation to its command
    - Turn ERROR/CRITICAL events into one-line diagnostics on stderr
    """

    def __init__(
        self,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
        stdin: Optional[TextIO] = None,
    ) -> None:
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self.stdin = stdin if stdin is not None else sys.stdin
        self.save_manager = SaveManager(self.stdout)

        self._error_dispatcher = ErrorDispatcher.get_instance()
        self._error_dispatcher.subscribe(ErrorLevel.ERROR, self._on_error)
        self._error_dispatcher.subscribe(ErrorLevel.CRITICAL, self._on_critical_error)

        self.commands = {name: command_registry.get(name)() for name in command_registry.list()}
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog=PROG,
            description="Nakajima monomial and tableau realizations of A_n crystals",
        )
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for command in self.commands.values():
            command.configure(subparsers)
        return parser

    def close(self) -> None:
        """Drop the dispatcher subscriptions made by this app."""
        self._error_dispatcher.unsubscribe(ErrorLevel.ERROR, self._on_error)
        self._error_dispatcher.unsubscribe(ErrorLevel.CRITICAL, self._on_critical_error)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            # argparse already printed usage; --help exits 0
            return 0 if exc.code in (0, None) else EXIT_USAGE

        command = self.commands[args.command]
        context = f"{type(command).__name__}.run"
        try:
            return command.run(self, args)
        except MembershipError as exc:
            self._error_dispatcher.emit(
                ErrorLevel.ERROR,
                f"not a member ({exc.condition}): {exc}",
                context=context,
                data={"condition": exc.condition},
            )
            return EXIT_FAILURE
        except json.JSONDecodeError as exc:
            self._error_dispatcher.emit(ErrorLevel.ERROR, f"malformed JSON: {exc}", context=context)
            return EXIT_USAGE
        except CrystalError as exc:
            self._error_dispatcher.emit(ErrorLevel.ERROR, str(exc), context=context)
            return EXIT_USAGE
        except Exception as exc:
            self._error_dispatcher.emit(
                ErrorLevel.CRITICAL,
                f"unexpected failure: {exc}",
                context=context,
                exception=exc,
            )
            return EXIT_USAGE

    def _on_error(self, error_event: ErrorEvent) -> None:
        """Handle ERROR level events - one line on stderr."""
        self.stderr.write(f"{PROG}: error: {error_event.message}\n")

    def _on_critical_error(self, error_event: ErrorEvent) -> None:
        """Handle CRITICAL level events - error line plus exception type."""
        detail = ""
        if error_event.exception is not None:
            detail = f" [{type(error_event.exception).__name__}]"
        self.stderr.write(f"{PROG}: critical: {error_event.message}{detail}\n")


__all__ = ["CrystalCliApp", "PROG"]
