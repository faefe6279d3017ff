from features.feature import Feature, VerificationReport, check_intertwines
from features.feature_registry import FeatureRegistry
from features.isomorphism_feature import IsoBinfFeature, IsoBlaFeature
from features.operator_feature import CIndependenceFeature, ClosureFeature, OperatorEquivalenceFeature
from features.product_feature import FamilyFeature, ProductFeature
from features.axioms_feature import AxiomsFeature

__all__ = [
    "Feature",
    "VerificationReport",
    "check_intertwines",
    "FeatureRegistry",
    "IsoBlaFeature",
    "IsoBinfFeature",
    "OperatorEquivalenceFeature",
    "ClosureFeature",
    "CIndependenceFeature",
    "ProductFeature",
    "FamilyFeature",
    "AxiomsFeature",
]
