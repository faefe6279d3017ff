"""Registry for verification features.

Provides a `FeatureRegistry` class and a module-level `registry` instance
pre-registered with one feature per `verify` kind. A kind that fails to
import or construct is reported at ERROR level and left out.
"""

from __future__ import annotations

import importlib
from typing import Optional

from features.feature import Feature
from modules.error_dispatcher import get_dispatcher

# (module, class) per `verify` kind, in the order the CLI lists them
BUILTIN_FEATURES = (
    ("features.isomorphism_feature", "IsoBlaFeature"),
    ("features.isomorphism_feature", "IsoBinfFeature"),
    ("features.operator_feature", "OperatorEquivalenceFeature"),
    ("features.operator_feature", "ClosureFeature"),
    ("features.operator_feature", "CIndependenceFeature"),
    ("features.product_feature", "ProductFeature"),
    ("features.product_feature", "FamilyFeature"),
    ("features.axioms_feature", "AxiomsFeature"),
)


class FeatureRegistry:
    """Central registry of verification features, keyed by feature name."""

    def __init__(self) -> None:
        self._features: dict[str, Feature] = {}

    def register(self, feature: Feature) -> None:
        self._features[feature.name] = feature

    def load(self, module: str, class_name: str) -> Optional[Feature]:
        """Import `module`, construct `class_name` and register it.

        Returns:
            The registered feature, or None when loading failed
        """
        feature = get_dispatcher().safe_execute(
            lambda: getattr(importlib.import_module(module), class_name)(),
            context="FeatureRegistry.load",
            message=f"could not load verification feature {module}.{class_name}",
            data={"module": module, "class": class_name},
        )
        if feature is not None:
            self.register(feature)
        return feature

    def get(self, name: str) -> Feature | None:
        return self._features.get(name)

    def list(self) -> list[str]:
        return list(self._features.keys())


registry = FeatureRegistry()

for _module, _class_name in BUILTIN_FEATURES:
    registry.load(_module, _class_name)

__all__ = ["BUILTIN_FEATURES", "FeatureRegistry", "registry"]
