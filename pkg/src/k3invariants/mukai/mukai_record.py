from dataclasses import dataclass
from typing import Dict, Iterator


@dataclass(frozen=True)
class MukaiRecord:
    """
    The dimensions attached to the Mukai variety M_g = G / P in P(U_g) whose linear sections are
    the general prime K3 surfaces of genus g1 in {7, 8, 9, 10}.

    Attributes
    ----------
    g1 : int
        the genus
    group : str
        the name of the group G_g
    dim_G : int
        the dimension of G_g
    dim_U : int
        the dimension of the representation U_g
    dim_M : int
        the dimension of M_g
    k_g : int
        the largest divisibility for which the fibres of the moduli map are positive-dimensional
    dim_M_prime : int
        the dimension of the variety of lines in M_g through a point
    """
    g1: int
    group: str
    dim_G: int
    dim_U: int
    dim_M: int
    k_g: int
    dim_M_prime: int

    @property
    def n(self) -> int:
        """
        The dimension n(g) = dim(U_g) - 1 of the projective space containing M_g.
        """
        return self.dim_U - 1


_MUKAI_TABLE: Dict[int, MukaiRecord] = {
    7: MukaiRecord(7, 'Spin_10', 45, 16, 10, 4, 6),
    8: MukaiRecord(8, 'SL_6', 35, 15, 8, 3, 4),
    9: MukaiRecord(9, 'Sp_6', 21, 14, 6, 2, 2),
    10: MukaiRecord(10, 'G_2', 14, 14, 5, 2, 1),
}


def mukai_record(g1: int) -> MukaiRecord:
    """
    Returns the stored row for the given genus.

    :param g1: a genus in {7, 8, 9, 10}
    :return: the Mukai record
    """
    try:
        return _MUKAI_TABLE[g1]
    except KeyError:
        raise ValueError(f"Mukai varieties are tabulated for g1 in {sorted(_MUKAI_TABLE)}, got {g1}.") from None


def mukai_records() -> Iterator[MukaiRecord]:
    return iter(_MUKAI_TABLE[g1] for g1 in sorted(_MUKAI_TABLE))
