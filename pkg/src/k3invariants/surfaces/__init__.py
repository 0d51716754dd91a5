from .hirzebruch_divisor import HirzebruchDivisor, hirzebruch_intersect, hirzebruch_canonical, hirzebruch_h0, \
    hirzebruch_pa, hirzebruch_adjoint, as_hirzebruch_divisor
from .quadric_divisor import QuadricDivisor, quadric_h0, quadric_pa, quadric_canonical, quadric_adjoint
from .del_pezzo import delpezzo_h0, delpezzo_pa
from .singularities import Singularity, SingularityBudget, geometric_genus
from .plane_models import plane_model_genus, plane_model_degree
from .automorphisms import aut_dim
