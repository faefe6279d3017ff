"""Sub-commands by name, in the order the parser lists them.

Each entry is loaded by import path; a command whose module fails to
import is reported at ERROR level and left out of the parser.
"""

from __future__ import annotations

import importlib
from typing import Optional

from modules.error_dispatcher import get_dispatcher

BUILTIN_COMMANDS = (
    ("generate", "command_managers.generate_command", "GenerateCommand"),
    ("verify", "command_managers.verify_command", "VerifyCommand"),
    ("convert", "command_managers.convert_command", "ConvertCommand"),
    ("member", "command_managers.member_command", "MemberCommand"),
)


class CommandRegistry:
    """Command classes keyed by sub-command name."""

    def __init__(self) -> None:
        self._commands: dict[str, type] = {}

    def register(self, name: str, cls: type) -> None:
        self._commands[name] = cls

    def load(self, name: str, module: str, class_name: str) -> Optional[type]:
        cls = get_dispatcher().safe_execute(
            lambda: getattr(importlib.import_module(module), class_name),
            context="CommandRegistry.load",
            message=f"could not load command {name!r}",
            data={"name": name, "module": module},
        )
        if cls is not None:
            self.register(name, cls)
        return cls

    def get(self, name: str) -> type:
        try:
            return self._commands[name]
        except KeyError:
            raise KeyError(f"No command registered under name: {name}") from None

    def list(self) -> list[str]:
        return list(self._commands.keys())


registry = CommandRegistry()

for _name, _module, _class_name in BUILTIN_COMMANDS:
    registry.load(_name, _module, _class_name)

__all__ = ["BUILTIN_COMMANDS", "CommandRegistry", "registry"]
