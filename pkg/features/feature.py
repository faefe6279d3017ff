"""Verification feature base and report type."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

from modules.config_manager import RunConfig
from modules.crystal_graph import ZERO
from modules.error_dispatcher import ErrorLevel, get_dispatcher

Operator = Callable[[Any, int], Any]


@dataclass
class VerificationReport:
    """Outcome of one verification run."""

    kind: str
    ok: bool
    checked: int
    counterexample: Optional[str] = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"ok": self.ok, "checked": self.checked}
        if not self.ok:
            data["counterexample"] = self.counterexample
        return data

    def summary(self) -> str:
        if self.ok:
            return f"{self.kind}: verified ({self.checked} checks)"
        return f"{self.kind}: counterexample after {self.checked} checks: {self.counterexample}"


class Feature:
    """Base feature: one `verify` kind.

    Features run a check on a validated `RunConfig` and return a report;
    they never write output. Commands own the output.
    """
    name = "Feature"

    def run(self, cfg: RunConfig) -> VerificationReport:
        raise NotImplementedError()

    def passed(self, checked: int, **details: Any) -> VerificationReport:
        report = VerificationReport(self.name, True, checked, details=details)
        get_dispatcher().emit(
            ErrorLevel.INFO,
            f"{self.name} verified",
            context=f"{type(self).__name__}.run",
            data={"checked": checked, **details},
        )
        return report

    def failed(self, checked: int, counterexample: str, **details: Any) -> VerificationReport:
        get_dispatcher().emit(
            ErrorLevel.WARNING,
            f"{self.name} counterexample: {counterexample}",
            context=f"{type(self).__name__}.run",
            data={"checked": checked, **details},
        )
        return VerificationReport(self.name, False, checked, counterexample, details)


def check_intertwines(
    sources: Iterable[Any],
    bridge: Callable[[Any], Any],
    pairs: Iterable[tuple[str, Operator, Operator]],
    n: int,
    key: Callable[[Any], str] = str,
) -> tuple[int, Optional[str]]:
    """Check bridge(op_s(x, i)) == op_t(bridge(x), i) for every x, i and operator pair.

    ZERO must correspond to ZERO. Returns (checks made, first counterexample).
    """
    pairs = list(pairs)
    checked = 0
    for x in sources:
        image = bridge(x)
        for i in range(1, n + 1):
            for label, op_source, op_target in pairs:
                checked += 1
                left = op_source(x, i)
                right = op_target(image, i)
                if left is ZERO or right is ZERO:
                    if left is not right:
                        return checked, f"{label}_{i} at {key(x)}: ZERO on one side only"
                    continue
                if bridge(left) != right:
                    return checked, f"{label}_{i} at {key(x)}: {bridge(left)} != {right}"
    return checked, None


__all__ = ["VerificationReport", "Feature", "check_intertwines"]
