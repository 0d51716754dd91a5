from .series import TruncatedSeries, binomial, h_proj, series_one_over_products, series_ratio
from .wps import WeightedCompleteIntersection, universal_extension_check, extension_case, extension_catalog
from .curves import CurveInvariants, SpinDatum
from .surfaces import HirzebruchDivisor, QuadricDivisor, SingularityBudget
from .moduli import LocusDescriptor, LocusFamily, locus_dim, fibre_dim_ci
from .mukai import MukaiRecord, mukai_record
from .registry import Claim, ClaimStatus, Report, run_claims, load_manifest
from .io import emit_report, write_report
from .version import __version__
