"""Set-level checks: products of highest weight crystals and the generalized family."""

from __future__ import annotations

from typing import Any

from features.feature import Feature, VerificationReport, check_intertwines
from modules import binf_model, bla_model
from modules.config_manager import RunConfig
from modules.crystal_graph import bfs_generate, graphs_isomorphic
from modules.exceptions import ConfigError
from modules.monomial_core import CMatrix, MonomialElement, canonical_serialize, e_tilde, f_tilde

FAMILY_DEFAULT_DEPTH = 4


class ProductFeature(Feature):
    """M(r; mu + tau) equals the set of products M(r; mu) * M(r; tau)."""

    name = "product"

    def run(self, cfg: RunConfig) -> VerificationReport:
        if cfg.mu is None or cfg.tau is None:
            raise ConfigError("verify product needs --mu and --tau")
        products, target = bla_model.product_sets(cfg.mu, cfg.tau, cfg.r, cfg.c_matrix())
        checked = len(products | target)
        if products != target:
            extra = sorted(canonical_serialize(M) for M in products - target)
            missing = sorted(canonical_serialize(M) for M in target - products)
            if extra:
                return self.failed(checked, f"product {extra[0]} is not in M(mu+tau)", extra=len(extra))
            return self.failed(checked, f"{missing[0]} in M(mu+tau) is not a product", missing=len(missing))
        return self.passed(checked, products=len(products))


class FamilyFeature(Feature):
    """M(p; r; infinity) truncations match M(infinity) through phi_shift."""

    name = "family"

    def run(self, cfg: RunConfig) -> VerificationReport:
        depth = cfg.depth if cfg.depth is not None else FAMILY_DEFAULT_DEPTH
        p = cfg.p_vector()
        c = CMatrix.default(cfg.n)
        base = bfs_generate(MonomialElement(binf_model.m_infinity(cfg.n), c), depth, cfg.threads)
        family = bfs_generate(MonomialElement(binf_model.m_infinity(cfg.n, p, cfg.r), c), depth, cfg.threads)
        checked = 1
        if not graphs_isomorphic(base, family):
            return self.failed(checked, f"p={list(p)} r={cfg.r}: truncated graphs are not isomorphic")

        def bridge(M: Any) -> Any:
            return binf_model.from_xform(binf_model.phi_shift(binf_model.to_xform(M), p, cfg.r))

        count, problem = check_intertwines(
            (element.monomial for element in base.elements),
            bridge,
            [
                ("f", lambda M, i: f_tilde(M, i, c), lambda M, i: f_tilde(M, i, c)),
                ("e", lambda M, i: e_tilde(M, i, c), lambda M, i: e_tilde(M, i, c)),
            ],
            cfg.n,
        )
        checked += count
        if problem is not None:
            return self.failed(checked, problem)
        keys = set(family.keys())
        for element in base.elements:
            checked += 1
            image = canonical_serialize(bridge(element.monomial))
            if image not in keys:
                return self.failed(checked, f"phi_shift({element.monomial}) = {image} is not generated")
        return self.passed(checked, depth=depth, p=list(p), r=cfg.r)


__all__ = ["ProductFeature", "FamilyFeature", "FAMILY_DEFAULT_DEPTH"]
