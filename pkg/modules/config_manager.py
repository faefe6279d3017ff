"""Run configuration assembled from command-line flags and the environment.

There are no configuration files: every run is described by its flags plus
two environment variables, CRYSTAL_THREADS (worker cap for graph
generation, 0 = sequential) and CRYSTAL_LOG_LEVEL (read by the dispatcher).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Any, Optional

from .cartan import Rank, Weight
from .error_dispatcher import ErrorLevel, get_dispatcher
from .exceptions import ConfigError, CrystalError, DomainError

THREADS_ENV = "CRYSTAL_THREADS"

MODELS = ("monomial-binf", "monomial-bla", "tableau-binf", "tableau-bla")
REALIZATIONS = (
    "monomial-binf",
    "xform-binf",
    "tableau-binf",
    "monomial-bla",
    "xform-bla",
    "tableau-bla",
)
FORMATS = ("dot", "json", "text")


def thread_count() -> int:
    """Worker cap from CRYSTAL_THREADS; unset or invalid means sequential."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 0
    try:
        value = int(raw)
    except ValueError:
        get_dispatcher().emit(
            ErrorLevel.WARNING,
            f"ignoring non-integer {THREADS_ENV}={raw!r}",
            context="config_manager.thread_count",
        )
        return 0
    return max(0, value)


def parse_int_vector(text: str, flag: str = "vector") -> tuple[int, ...]:
    """Parse "1,0,-2" into (1, 0, -2)."""
    if text is None or not str(text).strip():
        raise ConfigError(f"--{flag} is empty")
    try:
        return tuple(int(part) for part in str(text).split(","))
    except ValueError as exc:
        raise ConfigError(f"--{flag} must be comma-separated integers, got {text!r}") from exc


def parse_weight_flag(text: str, n: Optional[int] = None, flag: str = "lambda") -> Weight:
    coeffs = parse_int_vector(text, flag)
    if n is not None and len(coeffs) != n:
        raise ConfigError(f"--{flag} has {len(coeffs)} coefficients but n={n}")
    weight = Weight(coeffs)
    if not weight.is_dominant():
        raise ConfigError(f"--{flag} {text} is not a dominant weight")
    return weight


def parse_c_flag(text: Optional[str], n: int):
    """c-matrix from "default", an upper-triangle bit string, or "random:<seed>"."""
    from .monomial_core import CMatrix

    spec = (text or "default").strip()
    try:
        if spec == "default":
            return CMatrix.default(n)
        if spec.startswith("random:"):
            seed = int(spec.split(":", 1)[1])
            return CMatrix.random(n, random.Random(seed))
        return CMatrix.from_bits(n, spec)
    except ValueError as exc:
        raise ConfigError(f"invalid --c {spec!r}: {exc}") from exc
    except CrystalError as exc:
        raise ConfigError(f"invalid --c {spec!r}: {exc}") from exc


@dataclass
class RunConfig:
    """Everything one CLI command needs, validated up front."""

    n: int
    model: Optional[str] = None
    lam: Optional[Weight] = None
    p: Optional[tuple[int, ...]] = None
    r: int = 0
    c_spec: str = "default"
    depth: Optional[int] = None
    fmt: str = "dot"
    threads: int = field(default_factory=thread_count)
    mu: Optional[Weight] = None
    tau: Optional[Weight] = None
    networkx_check: bool = False

    @property
    def infinite(self) -> bool:
        return bool(self.model and self.model.endswith("-binf"))

    def validate(self) -> RunConfig:
        """Raise ConfigError on the first inconsistency; return self."""
        try:
            Rank(self.n)
        except DomainError as exc:
            raise ConfigError(f"-n must be a positive integer, got {self.n!r}") from exc
        if self.model is not None and self.model not in MODELS:
            raise ConfigError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}; choose from {', '.join(FORMATS)}")
        if self.model is not None and self.model.endswith("-bla"):
            self.require_lambda()
        if self.model is not None and self.infinite:
            self.require_depth()
        if self.lam is not None and self.lam.n != self.n:
            raise ConfigError(f"--lambda has {self.lam.n} coefficients but n={self.n}")
        if self.p is not None:
            if len(self.p) != self.n:
                raise ConfigError(f"--p has {len(self.p)} entries but n={self.n}")
            if any(v <= 0 for v in self.p):
                raise ConfigError(f"--p entries must be positive, got {self.p}")
        if self.depth is not None and self.depth < 0:
            raise ConfigError(f"--depth must be non-negative, got {self.depth}")
        self.c_matrix()
        return self

    def require_lambda(self) -> Weight:
        if self.lam is None:
            raise ConfigError(f"model {self.model or 'bla'} requires --lambda")
        return self.lam

    def require_depth(self) -> int:
        if self.depth is None:
            raise ConfigError(f"model {self.model or 'binf'} is infinite and requires --depth")
        return self.depth

    def p_vector(self) -> tuple[int, ...]:
        return self.p if self.p is not None else (1,) * self.n

    def c_matrix(self):
        return parse_c_flag(self.c_spec, self.n)

    @classmethod
    def from_namespace(cls, args: Any) -> RunConfig:
        """Build from an argparse namespace; absent attributes take defaults."""
        n = getattr(args, "n", None)
        if n is None:
            raise ConfigError("-n is required")
        lam_text = getattr(args, "lam", None)
        p_text = getattr(args, "p", None)
        threads = getattr(args, "threads", None)
        mu_text = getattr(args, "mu", None)
        tau_text = getattr(args, "tau", None)
        cfg = cls(
            n=n,
            model=getattr(args, "model", None),
            lam=parse_weight_flag(lam_text, n) if lam_text is not None else None,
            p=parse_int_vector(p_text, "p") if p_text is not None else None,
            r=getattr(args, "r", 0) or 0,
            c_spec=getattr(args, "c", None) or "default",
            depth=getattr(args, "depth", None),
            fmt=getattr(args, "format", None) or "dot",
            threads=thread_count() if threads is None else threads,
            mu=parse_weight_flag(mu_text, n, "mu") if mu_text is not None else None,
            tau=parse_weight_flag(tau_text, n, "tau") if tau_text is not None else None,
            networkx_check=bool(getattr(args, "networkx", False)),
        )
        return cfg


__all__ = [
    "THREADS_ENV",
    "MODELS",
    "REALIZATIONS",
    "FORMATS",
    "thread_count",
    "parse_int_vector",
    "parse_weight_flag",
    "parse_c_flag",
    "RunConfig",
]
