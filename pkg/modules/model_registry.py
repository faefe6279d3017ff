"""Registry of crystal realizations.

Each realization knows how to build its canonical seed from a `RunConfig`,
how to read and write one element as JSON, how to check membership, and how
to move an element to and from the X-form that links the realizations of
the same crystal. The module-level `registry` is pre-registered with the six
realizations the command line offers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from . import binf_model, bla_model
from .config_manager import RunConfig
from .crystal_graph import CrystalElement
from .error_dispatcher import get_dispatcher
from .exceptions import DomainError, MembershipError
from .monomial_core import (
    ExtMonomial,
    MonomialElement,
    PlainMonomial,
    monomial_from_dict,
    monomial_to_dict,
)
from .tableau_core import (
    Tableau,
    TableauInfElement,
    TableauLaElement,
    highest_weight_tableau,
    is_marginally_large,
    t_infinity,
    validate,
)


@dataclass(frozen=True)
class Realization:
    """Hooks for one realization; `family` is "binf" or "bla"."""

    name: str
    family: str
    seed: Callable[[RunConfig], CrystalElement]
    decode: Callable[[dict, RunConfig], Any]
    encode: Callable[[Any], dict]
    check: Callable[[Any, RunConfig], Optional[MembershipError]]
    to_xform: Callable[[Any, RunConfig], Any]
    from_xform: Callable[[Any, RunConfig], Any]


class ModelRegistry:
    """Registry for realizations.

    Methods:
        - register(realization)
        - get(name)
        - list(): registered names in registration order
    """

    def __init__(self) -> None:
        self._models: dict[str, Realization] = {}

    def register(self, realization: Realization) -> None:
        self._models[realization.name] = realization

    def get(self, name: str) -> Realization | None:
        return self._models.get(name)

    def list(self) -> list[str]:
        return list(self._models.keys())

    def load(self, builder: Callable[[], Realization]) -> Optional[Realization]:
        """Build one realization and register it; a failing builder is reported, not raised."""
        realization = get_dispatcher().safe_execute(
            builder,
            context="ModelRegistry.load",
            message=f"could not build realization {builder.__name__}",
            data={"builder": builder.__name__},
        )
        if realization is not None:
            self.register(realization)
        return realization

    def require(self, name: str) -> Realization:
        realization = self.get(name)
        if realization is None:
            raise KeyError(f"No realization registered under name: {name}")
        return realization


def convert(obj: Any, source: str, target: str, cfg: RunConfig, models: Optional[ModelRegistry] = None) -> Any:
    """Carry an element across realizations of the same crystal through its X-form.

    Raises:
        MembershipError: `obj` is not an element of the source realization
        DomainError: the two realizations model different crystals
    """
    models = models or registry
    src = models.require(source)
    dst = models.require(target)
    if src.family != dst.family:
        raise DomainError(f"cannot convert {source} into {target}: different crystals")
    violation = src.check(obj, cfg)
    if violation is not None:
        raise violation
    return dst.from_xform(src.to_xform(obj, cfg), cfg)


# ---------------------------------------------------------------------------
# B(infinity) realizations
# ---------------------------------------------------------------------------

def _mono_binf_check(M: Any, cfg: RunConfig) -> Optional[MembershipError]:
    return binf_model.membership_violation(M, cfg.p_vector(), cfg.r)


def _mono_binf_decode(data: dict, cfg: RunConfig) -> ExtMonomial:
    M = monomial_from_dict(data)
    if not isinstance(M, ExtMonomial):
        raise DomainError("M(infinity) elements are extended monomials")
    return M


def _xform_binf_check(X: Any, cfg: RunConfig) -> Optional[MembershipError]:
    if X.n != cfg.n:
        return MembershipError(f"X-form rank {X.n} does not match n={cfg.n}", "template")
    return None


def _tab_binf_check(T: Any, cfg: RunConfig) -> Optional[MembershipError]:
    if T.n != cfg.n or not is_marginally_large(T):
        return MembershipError(f"{T} is not a marginally large tableau for n={cfg.n}", "marginally large")
    return None


# ---------------------------------------------------------------------------
# B(lambda) realizations
# ---------------------------------------------------------------------------

def _mono_bla_check(M: Any, cfg: RunConfig) -> Optional[MembershipError]:
    return bla_model.membership_violation(M, cfg.require_lambda(), cfg.r)


def _mono_bla_decode(data: dict, cfg: RunConfig) -> PlainMonomial:
    M = monomial_from_dict(data)
    if not isinstance(M, PlainMonomial):
        raise DomainError("M(lambda) elements are plain monomials")
    return M


def _xform_bla_check(X: Any, cfg: RunConfig) -> Optional[MembershipError]:
    if X.lam != cfg.require_lambda():
        return MembershipError(f"X-form weight {X.lam} does not match --lambda {cfg.lam}", "template")
    return None


def _tab_bla_check(T: Any, cfg: RunConfig) -> Optional[MembershipError]:
    lam = cfg.require_lambda()
    if T.n != cfg.n or not validate(T, lam):
        return MembershipError(f"{T} is not semistandard of shape lambda={lam}", "semistandard")
    return None


def _monomial_binf() -> Realization:
    return Realization(
        name="monomial-binf",
        family="binf",
        seed=lambda cfg: MonomialElement(binf_model.m_infinity(cfg.n, cfg.p_vector(), cfg.r), cfg.c_matrix()),
        decode=_mono_binf_decode,
        encode=monomial_to_dict,
        check=_mono_binf_check,
        to_xform=lambda M, cfg: binf_model.to_xform(M, cfg.p_vector(), cfg.r),
        from_xform=lambda X, cfg: binf_model.from_xform(binf_model.phi_shift(X, cfg.p_vector(), cfg.r)),
    )


def _xform_binf() -> Realization:
    return Realization(
        name="xform-binf",
        family="binf",
        seed=lambda cfg: binf_model.XFormInfElement(binf_model.XFormInf.root(cfg.n, cfg.p_vector(), cfg.r)),
        decode=lambda data, cfg: binf_model.XFormInf.from_dict(data),
        encode=lambda X: X.to_dict(),
        check=_xform_binf_check,
        to_xform=lambda X, cfg: X,
        from_xform=lambda X, cfg: binf_model.phi_shift(X, cfg.p_vector(), cfg.r),
    )


def _tableau_binf() -> Realization:
    return Realization(
        name="tableau-binf",
        family="binf",
        seed=lambda cfg: TableauInfElement(t_infinity(cfg.n)),
        decode=lambda data, cfg: Tableau.from_dict(data),
        encode=lambda T: T.to_dict(),
        check=_tab_binf_check,
        to_xform=lambda T, cfg: binf_model.Phi(T),
        from_xform=lambda X, cfg: binf_model.Phi_inverse(X),
    )


def _monomial_bla() -> Realization:
    return Realization(
        name="monomial-bla",
        family="bla",
        seed=lambda cfg: MonomialElement(
            bla_model.m_lambda(cfg.require_lambda(), cfg.r), cfg.c_matrix(), infinite=False
        ),
        decode=_mono_bla_decode,
        encode=monomial_to_dict,
        check=_mono_bla_check,
        to_xform=lambda M, cfg: bla_model.to_xform(M, cfg.require_lambda(), cfg.r),
        from_xform=lambda X, cfg: bla_model.from_xform(bla_model.shift_map(X, cfg.r)),
    )


def _xform_bla() -> Realization:
    return Realization(
        name="xform-bla",
        family="bla",
        seed=lambda cfg: bla_model.XFormLaElement(bla_model.highest_xform(cfg.require_lambda(), cfg.r)),
        decode=lambda data, cfg: bla_model.XFormLa.from_dict(data),
        encode=lambda X: X.to_dict(),
        check=_xform_bla_check,
        to_xform=lambda X, cfg: X,
        from_xform=lambda X, cfg: bla_model.shift_map(X, cfg.r),
    )


def _tableau_bla() -> Realization:
    return Realization(
        name="tableau-bla",
        family="bla",
        seed=lambda cfg: TableauLaElement(highest_weight_tableau(cfg.require_lambda()), cfg.require_lambda()),
        decode=lambda data, cfg: Tableau.from_dict(data),
        encode=lambda T: T.to_dict(),
        check=_tab_bla_check,
        to_xform=lambda T, cfg: bla_model.Psi(T, cfg.require_lambda()),
        from_xform=lambda X, cfg: bla_model.Psi_inverse(X),
    )


BUILTIN_REALIZATIONS = (_monomial_binf, _xform_binf, _tableau_binf, _monomial_bla, _xform_bla, _tableau_bla)

registry = ModelRegistry()

for _builder in BUILTIN_REALIZATIONS:
    registry.load(_builder)

__all__ = ["Realization", "ModelRegistry", "BUILTIN_REALIZATIONS", "convert", "registry"]
