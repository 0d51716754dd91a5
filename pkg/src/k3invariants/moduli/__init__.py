from .scenario import Summand, scenario_moduli
from .loci import LocusFamily, LocusDescriptor, locus_dim, curves_dim, remarkable_difference, theta_lower_bound
from .fibres import ideal_sheaf_h0, fibre_breakdown, fibre_dim_ci
