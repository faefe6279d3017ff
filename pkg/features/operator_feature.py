"""Operator-level checks: signature rule vs generic operators, closure, c-independence."""

from __future__ import annotations

import random

from features.feature import Feature, VerificationReport, check_intertwines
from modules import binf_model, bla_model
from modules.cartan import Weight, dimension_oracle
from modules.config_manager import RunConfig
from modules.crystal_graph import ZERO, bfs_generate, graphs_isomorphic
from modules.exceptions import ConfigError
from modules.monomial_core import (
    CMatrix,
    MonomialElement,
    canonical_serialize,
    e_tilde,
    f_tilde,
)

C_RANDOM_SEED = 20240101


def _needs_target(cfg: RunConfig, kind: str) -> None:
    if cfg.depth is None and cfg.lam is None:
        raise ConfigError(f"verify {kind} needs --depth (B(infinity)), --lambda (B(lambda)) or both")


class OperatorEquivalenceFeature(Feature):
    """Signature-rule operators on X-forms agree with the generic monomial operators."""

    name = "op-equiv"

    def run(self, cfg: RunConfig) -> VerificationReport:
        _needs_target(cfg, self.name)
        c = CMatrix.default(cfg.n)
        checked = 0
        if cfg.depth is not None:
            root = binf_model.XFormInf.root(cfg.n, cfg.p_vector(), cfg.r)
            graph = bfs_generate(binf_model.XFormInfElement(root), cfg.depth, cfg.threads)
            count, problem = check_intertwines(
                (element.xform for element in graph.elements),
                binf_model.from_xform,
                [
                    ("f", binf_model.f_sig, lambda M, i: f_tilde(M, i, c)),
                    ("e", binf_model.e_sig, lambda M, i: e_tilde(M, i, c)),
                ],
                cfg.n,
                key=lambda X: X.describe(),
            )
            checked += count
            if problem is not None:
                return self.failed(checked, f"M(infinity): {problem}")
        if cfg.lam is not None:
            graph = bfs_generate(
                bla_model.XFormLaElement(bla_model.highest_xform(cfg.lam, cfg.r)), threads=cfg.threads
            )
            count, problem = check_intertwines(
                (element.xform for element in graph.elements),
                bla_model.from_xform,
                [
                    ("f", bla_model.f_sig, lambda M, i: f_tilde(M, i, c)),
                    ("e", bla_model.e_sig, lambda M, i: e_tilde(M, i, c)),
                ],
                cfg.n,
                key=lambda X: X.describe(),
            )
            checked += count
            if problem is not None:
                return self.failed(checked, f"M(lambda={cfg.lam}): {problem}")
        return self.passed(checked)


class ClosureFeature(Feature):
    """The operators stay inside the condition-defined sets, and those sets are the crystals."""

    name = "closure"

    def run(self, cfg: RunConfig) -> VerificationReport:
        _needs_target(cfg, self.name)
        c = CMatrix.default(cfg.n)
        checked = 0
        if cfg.depth is not None:
            p = cfg.p_vector()
            members = [binf_model.from_xform(X) for X in binf_model.enumerate_xforms(cfg.n, cfg.depth, p, cfg.r)]
            for M in members:
                for i in range(1, cfg.n + 1):
                    checked += 1
                    image = f_tilde(M, i, c)
                    if image is ZERO or not binf_model.is_member(image, p, cfg.r):
                        return self.failed(checked, f"f_{i} {M} leaves M(infinity)")
                    checked += 1
                    image = e_tilde(M, i, c)
                    if image is not ZERO and not binf_model.is_member(image, p, cfg.r):
                        return self.failed(checked, f"e_{i} {M} leaves M(infinity)")
            generated = bfs_generate(
                MonomialElement(binf_model.m_infinity(cfg.n, p, cfg.r), c), cfg.depth, cfg.threads
            )
            described = {canonical_serialize(M) for M in binf_model.enumerate_members(cfg.n, cfg.depth, p, cfg.r)}
            checked += 1
            if set(generated.keys()) != described or {canonical_serialize(M) for M in members} != described:
                missing = sorted(described.symmetric_difference(generated.keys()))
                where = missing[0] if missing else "the X-form enumeration"
                return self.failed(checked, f"M(infinity) membership oracle differs at {where}")
        if cfg.lam is not None:
            generated = bfs_generate(
                MonomialElement(bla_model.m_lambda(cfg.lam, cfg.r), c, infinite=False), threads=cfg.threads
            )
            described = {canonical_serialize(M) for M in bla_model.enumerate_members(cfg.lam, cfg.r)}
            checked += 1
            if set(generated.keys()) != described:
                missing = sorted(described.symmetric_difference(generated.keys()))
                return self.failed(checked, f"M(lambda={cfg.lam}) membership oracle differs at {missing[0]}")
            for element in generated.elements:
                M = element.monomial
                for i in range(1, cfg.n + 1):
                    for label, image in (("f", f_tilde(M, i, c)), ("e", e_tilde(M, i, c))):
                        checked += 1
                        if image is not ZERO and not bla_model.is_member(image, cfg.lam, cfg.r):
                            return self.failed(checked, f"{label}_{i} {M} leaves M(lambda={cfg.lam})")
        return self.passed(checked)


class CIndependenceFeature(Feature):
    """M(lambda) graphs built under different c-matrices are isomorphic."""

    name = "c-indep"

    def matrices(self, cfg: RunConfig) -> list[CMatrix]:
        n = cfg.n
        size = n * (n - 1) // 2
        candidates = [
            CMatrix.default(n),
            CMatrix.from_upper(n, (0,) * size),
            CMatrix.random(n, random.Random(C_RANDOM_SEED)),
            cfg.c_matrix(),
        ]
        unique: list[CMatrix] = []
        for matrix in candidates:
            if matrix not in unique:
                unique.append(matrix)
        return unique

    def run(self, cfg: RunConfig) -> VerificationReport:
        lam = cfg.lam if cfg.lam is not None else Weight((1,) * cfg.n)
        expected = dimension_oracle(lam)
        reference = None
        checked = 0
        for matrix in self.matrices(cfg):
            graph = bfs_generate(
                MonomialElement(bla_model.m_lambda(lam, cfg.r), matrix, infinite=False), threads=cfg.threads
            )
            checked += 1
            if len(graph.vertices) != expected:
                return self.failed(checked, f"c={matrix.describe()}: {len(graph.vertices)} vertices, dimension {expected}")
            if reference is None:
                reference = graph
                continue
            checked += 1
            if not graphs_isomorphic(reference, graph):
                return self.failed(checked, f"c={matrix.describe()}: graph differs from the default c-matrix")
        return self.passed(checked, lam=list(lam.coeffs))


__all__ = ["OperatorEquivalenceFeature", "ClosureFeature", "CIndependenceFeature"]
