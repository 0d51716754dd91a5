from .curve_invariants import CurveInvariants, SpinDatum
from .genus import k3_curve_genus, ci_curve_genus, castelnuovo_genus
from .clifford import clifford_restriction, clifford_general, exceptional_low, max_k_for_genus, clifford_h0_bound
from .riemann_roch import rr_h0, serre_h1, h0_nonspecial
from .theta import HyperellipticTheta, theta_degree, expected_theta_codim, same_parity, hyperelliptic_theta_h0, \
    hyperelliptic_theta_loci
