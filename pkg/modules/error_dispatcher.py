"""Centralized diagnostics dispatching for the crystal toolkit.

A singleton ErrorDispatcher routes diagnostics to handlers by severity and
mirrors every event onto the `NakajimaCrystals` logger. Library code emits
here instead of printing; the CLI shell subscribes to ERROR and CRITICAL
events and turns them into one-line messages on standard error.

Architecture:
- Modules emit INFO events for progress (vertex counts, checks run)
- Features emit WARNING/ERROR events when a verification finds a counterexample
- The shell subscribes to ERROR/CRITICAL for user-facing output
- Standard output is never written from here, so command output stays
  byte-deterministic
"""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Optional

LOGGER_NAME = "NakajimaCrystals"
LOG_LEVEL_ENV = "CRYSTAL_LOG_LEVEL"


class ErrorLevel(Enum):
    """Severity levels for dispatch."""
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


_LOG_LEVELS = {
    ErrorLevel.INFO: logging.INFO,
    ErrorLevel.WARNING: logging.WARNING,
    ErrorLevel.ERROR: logging.ERROR,
    ErrorLevel.CRITICAL: logging.CRITICAL,
}


@dataclass
class ErrorEvent:
    """A single dispatched diagnostic."""

    level: ErrorLevel
    message: str
    context: str = "unknown"
    exception: Optional[BaseException] = None
    data: dict[str, Any] = field(default_factory=dict)
    timestamp: datetime = field(default_factory=datetime.now)

    def __str__(self) -> str:
        return f"[{self.level.value}] {self.context}: {self.message}"

    def to_dict(self) -> dict:
        """Convert to a JSON-friendly dictionary."""
        return {
            "level": self.level.value,
            "message": self.message,
            "context": self.context,
            "timestamp": self.timestamp.isoformat(),
            "data": self.data,
            "exception_type": type(self.exception).__name__ if self.exception else None,
            "exception_message": str(self.exception) if self.exception else None,
        }


class ErrorDispatcher:
    """Singleton dispatcher for diagnostics.

    Usage:
        dispatcher = ErrorDispatcher.get_instance()
        dispatcher.subscribe(ErrorLevel.ERROR, handler)
        dispatcher.emit(ErrorLevel.INFO, "bfs done", "crystal_graph.bfs_generate",
                        data={"vertices": 8})
    """

    _instance: Optional[ErrorDispatcher] = None

    def __init__(self) -> None:
        self._handlers: dict[ErrorLevel, list[Callable[[ErrorEvent], None]]] = {
            level: [] for level in ErrorLevel
        }
        self._history: list[ErrorEvent] = []
        self._max_history = 100
        self._logger = self._setup_logging()

    @classmethod
    def get_instance(cls) -> ErrorDispatcher:
        """Get or create the singleton instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton (tests use this to isolate subscriptions)."""
        cls._instance = None

    @staticmethod
    def _setup_logging() -> logging.Logger:
        logger = logging.getLogger(LOGGER_NAME)
        if not logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(
                logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            )
            logger.addHandler(handler)
            logger.propagate = False
        level_name = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
        logger.setLevel(getattr(logging, level_name, logging.WARNING))
        return logger

    @property
    def logger(self) -> logging.Logger:
        return self._logger

    def subscribe(self, level: ErrorLevel, handler: Callable[[ErrorEvent], None]) -> None:
        """Subscribe a handler to events of one level."""
        if handler not in self._handlers[level]:
            self._handlers[level].append(handler)

    def unsubscribe(self, level: ErrorLevel, handler: Callable[[ErrorEvent], None]) -> None:
        if handler in self._handlers[level]:
            self._handlers[level].remove(handler)

    def emit(
        self,
        level: ErrorLevel,
        message: str,
        context: str = "unknown",
        exception: Optional[BaseException] = None,
        data: Optional[dict] = None,
    ) -> ErrorEvent:
        """Emit an event: log it, keep it in history, and invoke handlers.

        Returns:
            The ErrorEvent that was emitted
        """
        event = ErrorEvent(level, message, context, exception, data or {})
        self._log_event(event)
        self._store_in_history(event)

        for handler in list(self._handlers[level]):
            try:
                handler(event)
            except Exception as handler_error:
                # A broken handler must not stop dispatch
                self._logger.error("Error in event handler: %s", handler_error, exc_info=True)
        return event

    def _log_event(self, event: ErrorEvent) -> None:
        log_level = _LOG_LEVELS[event.level]
        if event.data:
            message = f"{event} {event.data}"
        else:
            message = str(event)
        if event.exception is not None and log_level >= logging.ERROR:
            self._logger.log(log_level, message, exc_info=event.exception)
        else:
            self._logger.log(log_level, message)

    def _store_in_history(self, event: ErrorEvent) -> None:
        self._history.append(event)
        if len(self._history) > self._max_history:
            self._history = self._history[-self._max_history:]

    def get_history(self, level: Optional[ErrorLevel] = None) -> list[ErrorEvent]:
        """Get event history, optionally filtered by level."""
        if level is None:
            return self._history.copy()
        return [e for e in self._history if e.level == level]

    def safe_execute(
        self,
        func: Callable,
        *args,
        context: str = "unknown",
        message: str = "Operation failed",
        data: Optional[dict] = None,
        **kwargs,
    ):
        """Run `func`, emitting an ERROR event instead of raising.

        Returns:
            Result of func, or None if it raised
        """
        try:
            return func(*args, **kwargs)
        except Exception as e:
            self.emit(
                ErrorLevel.ERROR,
                f"{message}: {e}",
                context=context,
                exception=e,
                data=data,
            )
            return None


def get_dispatcher() -> ErrorDispatcher:
    """Get the global dispatcher instance."""
    return ErrorDispatcher.get_instance()
