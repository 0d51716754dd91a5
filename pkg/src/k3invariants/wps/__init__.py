from .weighted_complete_intersection import WeightedCompleteIntersection
from .extensions import ExtensionCase, ExtensionRecord, extension_catalog, extension_case, universal_extension_check
