"""Tableau/monomial isomorphism checks for B(lambda) and B(infinity).

Both checks generate the tableau crystal and the monomial crystal from their
maximal vectors, compare the coloured rooted graphs and then walk the
tableau vertices through the X-form bijection, checking that it commutes
with every f_i and e_i. The bijections are stated for the default c-matrix,
so that is the one used here.
"""

from __future__ import annotations

from typing import Any, Optional

from features.feature import Feature, VerificationReport, check_intertwines
from modules import binf_model, bla_model
from modules.cartan import Weight, dimension_oracle, dominant_weights
from modules.config_manager import RunConfig
from modules.crystal_graph import CrystalGraph, bfs_generate, graphs_isomorphic, networkx_isomorphic
from modules.monomial_core import CMatrix, MonomialElement, canonical_serialize, e_tilde, f_tilde
from modules.tableau_core import (
    TableauInfElement,
    TableauLaElement,
    e_bla,
    e_tinf,
    f_bla,
    f_tinf,
    highest_weight_tableau,
    t_infinity,
)

SWEEP_LEVEL = 3


def isomorphism_problem(g1: CrystalGraph, g2: CrystalGraph, cfg: RunConfig) -> Optional[str]:
    """None when the graphs match; with `networkx_check` VF2 must agree too."""
    if not graphs_isomorphic(g1, g2):
        return "crystal graphs are not isomorphic"
    if cfg.networkx_check and not networkx_isomorphic(g1, g2):
        return "VF2 finds no isomorphism although the traversal matched"
    return None


class IsoBlaFeature(Feature):
    """B(lambda) tableaux against M(r; lambda) through the bijection Psi."""

    name = "iso-bla"

    def weights(self, cfg: RunConfig) -> list[Weight]:
        if cfg.lam is not None:
            return [cfg.lam]
        return list(dominant_weights(cfg.n, SWEEP_LEVEL))

    def run(self, cfg: RunConfig) -> VerificationReport:
        c = CMatrix.default(cfg.n)
        checked = 0
        weights = self.weights(cfg)
        for lam in weights:
            tableaux = bfs_generate(TableauLaElement(highest_weight_tableau(lam), lam), threads=cfg.threads)
            monomials = bfs_generate(
                MonomialElement(bla_model.m_lambda(lam, cfg.r), c, infinite=False), threads=cfg.threads
            )
            checked += 1
            expected = dimension_oracle(lam)
            if len(tableaux.vertices) != expected or len(monomials.vertices) != expected:
                return self.failed(
                    checked,
                    f"lambda={lam}: {len(tableaux.vertices)} tableaux, "
                    f"{len(monomials.vertices)} monomials, dimension {expected}",
                )
            checked += 1
            problem = isomorphism_problem(tableaux, monomials, cfg)
            if problem is not None:
                return self.failed(checked, f"lambda={lam}: {problem}")

            def bridge(T: Any) -> Any:
                return bla_model.from_xform(bla_model.shift_map(bla_model.Psi(T, lam), cfg.r))

            count, problem = check_intertwines(
                (element.tableau for element in tableaux.elements),
                bridge,
                [
                    ("f", f_bla, lambda M, i: f_tilde(M, i, c)),
                    ("e", e_bla, lambda M, i: e_tilde(M, i, c)),
                ],
                lam.n,
            )
            checked += count
            if problem is not None:
                return self.failed(checked, f"lambda={lam}: {problem}")
            keys = set(monomials.keys())
            for element in tableaux.elements:
                checked += 1
                image = canonical_serialize(bridge(element.tableau))
                if image not in keys:
                    return self.failed(checked, f"lambda={lam}: Psi({element.tableau}) = {image} is not generated")
        return self.passed(checked, weights=len(weights), networkx=cfg.networkx_check)


class IsoBinfFeature(Feature):
    """Truncated T(infinity) against M(p; r; infinity) through the bijection Phi."""

    name = "iso-binf"

    def run(self, cfg: RunConfig) -> VerificationReport:
        depth = cfg.require_depth()
        p = cfg.p_vector()
        c = CMatrix.default(cfg.n)
        tableaux = bfs_generate(TableauInfElement(t_infinity(cfg.n)), depth, cfg.threads)
        monomials = bfs_generate(
            MonomialElement(binf_model.m_infinity(cfg.n, p, cfg.r), c), depth, cfg.threads
        )
        checked = 1
        if len(tableaux.vertices) != len(monomials.vertices):
            return self.failed(
                checked,
                f"depth {depth}: {len(tableaux.vertices)} tableaux but {len(monomials.vertices)} monomials",
            )
        checked += 1
        problem = isomorphism_problem(tableaux, monomials, cfg)
        if problem is not None:
            return self.failed(checked, f"depth {depth}: truncated {problem}")

        def bridge(T: Any) -> Any:
            return binf_model.from_xform(binf_model.phi_shift(binf_model.Phi(T), p, cfg.r))

        # f is never ZERO on B(infinity); e is compared on every vertex
        count, problem = check_intertwines(
            (element.tableau for element in tableaux.elements),
            bridge,
            [
                ("f", f_tinf, lambda M, i: f_tilde(M, i, c)),
                ("e", e_tinf, lambda M, i: e_tilde(M, i, c)),
            ],
            cfg.n,
        )
        checked += count
        if problem is not None:
            return self.failed(checked, problem)
        keys = set(monomials.keys())
        images = set()
        for element in tableaux.elements:
            checked += 1
            image = canonical_serialize(bridge(element.tableau))
            if image not in keys:
                return self.failed(checked, f"Phi({element.tableau}) = {image} is not generated")
            images.add(image)
        if len(images) != len(tableaux.elements):
            return self.failed(checked, "Phi is not injective on the truncation")
        return self.passed(checked, vertices=len(tableaux.vertices), depth=depth, networkx=cfg.networkx_check)


__all__ = ["IsoBlaFeature", "IsoBinfFeature", "SWEEP_LEVEL", "isomorphism_problem"]
