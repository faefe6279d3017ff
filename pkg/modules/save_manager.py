"""Centralized output for every command.

Commands never format output themselves: graphs, elements and verification
reports all go through `SaveManager`, which writes to a text stream
(standard output by default). Output is built as a string first and
written once, so a failed export leaves the stream untouched.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Callable, Optional, TextIO

from .config_manager import FORMATS
from .crystal_graph import CrystalGraph, export_dot, export_json, export_text
from .exceptions import ConfigError

_GRAPH_WRITERS: dict[str, Callable[[CrystalGraph], str]] = {
    "dot": export_dot,
    "json": export_json,
    "text": export_text,
}


class SaveManager:
    """Writes command results to a stream."""

    def __init__(self, stream: Optional[TextIO] = None) -> None:
        self.stream = stream

    def _out(self) -> TextIO:
        # resolved late so tests that swap sys.stdout see the output
        return self.stream if self.stream is not None else sys.stdout

    def render_graph(self, graph: CrystalGraph, fmt: str = "dot") -> str:
        writer = _GRAPH_WRITERS.get(fmt)
        if writer is None:
            raise ConfigError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
        return writer(graph)

    def save_graph(self, graph: CrystalGraph, fmt: str = "dot") -> str:
        text = self.render_graph(graph, fmt)
        self._out().write(text)
        return text

    def save_element(self, data: dict) -> str:
        """One element as compact, key-sorted JSON on a single line."""
        text = json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
        self._out().write(text)
        return text

    def save_report(self, summary: str, report: dict[str, Any]) -> str:
        """Human-readable summary line, then the report as JSON."""
        text = summary.rstrip("\n") + "\n" + json.dumps(report, separators=(",", ":")) + "\n"
        self._out().write(text)
        return text


__all__ = ["SaveManager"]
