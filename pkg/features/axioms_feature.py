"""Randomised crystal-axiom sampling across every realization."""

from __future__ import annotations

import random
from typing import Any, Optional

from features.feature import Feature, VerificationReport
from modules.cartan import Weight, simple_root
from modules.config_manager import REALIZATIONS, RunConfig
from modules.crystal_graph import ZERO, CrystalGraph, bfs_generate, check_edge_axioms
from modules.model_registry import registry as model_registry

SAMPLES = 1000
SAMPLE_SEED = 7
BINF_DEFAULT_DEPTH = 3
E_CHAIN_CAP = 64


def _e_string_length(element: Any, i: int) -> int:
    length = 0
    current = element.apply_e(i)
    while current is not ZERO and length < E_CHAIN_CAP:
        length += 1
        current = current.apply_e(i)
    return length


def check_axioms(element: Any, i: int) -> Optional[str]:
    """First crystal axiom that fails at (element, i), or None."""
    n = element.n
    wt = element.weight()
    eps = element.eps(i)
    phi = element.phi(i)
    alpha = simple_root(n, i)
    label = element.canonical_key()
    if phi - eps != wt[i]:
        return f"phi_{i} - eps_{i} != <h_{i}, wt> at {label}"
    if eps != _e_string_length(element, i):
        return f"eps_{i} is not the e_{i}-string length at {label}"
    lowered = element.apply_f(i)
    if lowered is not ZERO:
        if lowered.weight() != wt - alpha:
            return f"wt(f_{i} b) != wt(b) - alpha_{i} at {label}"
        if lowered.eps(i) != eps + 1 or lowered.phi(i) != phi - 1:
            return f"eps/phi do not step under f_{i} at {label}"
        back = lowered.apply_e(i)
        if back is ZERO or back.canonical_key() != label:
            return f"e_{i} f_{i} b != b at {label}"
    raised = element.apply_e(i)
    if raised is not ZERO:
        if raised.weight() != wt + alpha:
            return f"wt(e_{i} b) != wt(b) + alpha_{i} at {label}"
        if raised.eps(i) != eps - 1 or raised.phi(i) != phi + 1:
            return f"eps/phi do not step under e_{i} at {label}"
        back = raised.apply_f(i)
        if back is ZERO or back.canonical_key() != label:
            return f"f_{i} e_{i} b != b at {label}"
    return None


class AxiomsFeature(Feature):
    """Sample (element, i) pairs from every realization and check the crystal axioms."""

    name = "axioms"

    def __init__(self, samples: int = SAMPLES, seed: int = SAMPLE_SEED) -> None:
        self.samples = samples
        self.seed = seed

    def pools(self, cfg: RunConfig) -> dict[str, CrystalGraph]:
        depth = cfg.depth if cfg.depth is not None else BINF_DEFAULT_DEPTH
        lam = cfg.lam if cfg.lam is not None else Weight((1,) * cfg.n)
        sub = RunConfig(n=cfg.n, lam=lam, p=cfg.p, r=cfg.r, depth=depth, threads=cfg.threads)
        pools = {}
        for name in REALIZATIONS:
            seed = model_registry.require(name).seed(sub)
            pools[name] = bfs_generate(seed, depth if seed.infinite else None, cfg.threads)
        return pools

    def run(self, cfg: RunConfig) -> VerificationReport:
        pools = self.pools(cfg)
        checked = 0
        for name, graph in pools.items():
            checked += 1
            problems = check_edge_axioms(graph)
            if problems:
                return self.failed(checked, f"{name}: {problems[0]}")
        rng = random.Random(self.seed)
        names = list(pools)
        for _ in range(self.samples):
            name = rng.choice(names)
            element = rng.choice(pools[name].elements)
            i = rng.randint(1, cfg.n)
            checked += 1
            problem = check_axioms(element, i)
            if problem is not None:
                return self.failed(checked, f"{name}: {problem}")
        return self.passed(checked, pools=len(pools), samples=self.samples)


__all__ = ["AxiomsFeature", "check_axioms", "SAMPLES"]
