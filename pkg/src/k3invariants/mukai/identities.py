from dataclasses import dataclass

from k3invariants.curves import k3_curve_genus
from k3invariants.mukai.grassmannian import grassmann_dim
from k3invariants.mukai.mukai_record import mukai_record


@dataclass(frozen=True)
class ModuliMapCheck:
    source_dim: int
    target_dim: int
    defect: int


@dataclass(frozen=True)
class ICFamilyCheck:
    ic_dim: int
    kc_dim: int
    group_dim: int

    @property
    def holds(self) -> bool:
        return self.ic_dim - self.group_dim == self.kc_dim


def moduli_map_check(g1: int) -> ModuliMapCheck:
    """
    Compares the dimension of the space of curve sections of M_g modulo G_g, that is
    dim G(g1 - 1, P^n) - dim G, with dim M_g1 = 3 g1 - 3.
    The defect is 0 for g1 in {7, 8, 9} and 1 for g1 = 10.

    :param g1: a genus in {7, 8, 9, 10}
    :return: the source and target dimensions with their difference
    """
    record = mukai_record(g1)
    source = grassmann_dim(g1 - 1, record.n) - record.dim_G
    target = 3 * g1 - 3
    return ModuliMapCheck(source, target, target - source)


def ic_family_check(g1: int) -> ICFamilyCheck:
    """
    Computes the dimension of the family of curves cut on M_g by a linear section and a quadric,
    dim G(g1, P^n) + h^0(2 L_1) - 1 with h^0(2 L_1) = 4 g1 - 2 on the K3 linear section,
    next to the dimension 19 + g of K3 surfaces with a curve in |2 L_1|.

    :param g1: a genus in {7, 8, 9, 10}
    :return: both dimensions and the dimension of the group acting on the first
    """
    record = mukai_record(g1)
    h0_of_square = 4 * g1 - 2
    ic_dim = grassmann_dim(g1, record.n) + h0_of_square - 1
    kc_dim = 19 + k3_curve_genus(g1, 2)
    return ICFamilyCheck(ic_dim, kc_dim, record.dim_G)


def cork_general(g1: int) -> int:
    """
    Returns the corank of the Gauss-Wahl map of a general curve section of a prime K3 surface:
    23 - 2 g1 for 7 <= g1 <= 11 except g1 = 10, where it is 4.
    """
    if not 7 <= g1 <= 11:
        raise ValueError(f"The corank formula covers 7 <= g1 <= 11, got {g1}.")
    return 4 if g1 == 10 else 23 - 2 * g1


def ribbon_space_dim(g1: int) -> int:
    """
    Returns cork - 1, the dimension of the projective space of ribbons over a general curve section.
    """
    return cork_general(g1) - 1


def lines_dimension_drop(g1: int) -> int:
    record = mukai_record(g1)
    return record.dim_M - record.dim_M_prime
