from .grassmannian import grassmann_dim
from .mukai_record import MukaiRecord, mukai_record, mukai_records
from .identities import ModuliMapCheck, ICFamilyCheck, moduli_map_check, ic_family_check, cork_general, \
    ribbon_space_dim, lines_dimension_drop
