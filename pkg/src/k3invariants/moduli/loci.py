from dataclasses import dataclass
from enum import Enum

from k3invariants.series import binomial


class LocusFamily(Enum):
    GONAL = 'gonal'
    ELLIPTIC_COVER = 'elliptic_cover'
    GENUS_H_COVER = 'genus_h_cover'
    HYPERELLIPTIC = 'hyperelliptic'
    BIELLIPTIC = 'bielliptic'
    GENUS2_COVER = 'genus2_cover'
    CURVES = 'curves'
    K3_PAIRS = 'k3_pairs'


@dataclass(frozen=True)
class LocusDescriptor:
    """
    A locus in the moduli of curves, or of curves with roots of the canonical bundle, or of
    K3 surfaces with a curve.

    Attributes
    ----------
    family : LocusFamily
        the kind of locus
    g : int
        the genus of the curves
    k : int
        the degree of the cover, or the root order; unused by the hyperelliptic, curve and K3 loci
    h : int
        the genus of the base for genus_h_cover, or the number of Weierstrass points for hyperelliptic loci
    a : int
        the multiple of the hyperelliptic pencil for hyperelliptic loci

    Examples
    --------
    ::

        from k3invariants.moduli import LocusDescriptor, LocusFamily, locus_dim
        locus_dim(LocusDescriptor(LocusFamily.GENUS_H_COVER, g=13, k=2, h=2))  # 23

    """
    family: LocusFamily
    g: int
    k: int = 2
    h: int = 0
    a: int = 0

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"Expected genus g >= 2, got {self.g}.")
        if self.family in (LocusFamily.GONAL, LocusFamily.ELLIPTIC_COVER, LocusFamily.GENUS_H_COVER,
                           LocusFamily.BIELLIPTIC, LocusFamily.GENUS2_COVER) and self.k < 2:
            raise ValueError(f"{self.family.value} loci need k >= 2, got {self.k}.")
        if self.family is LocusFamily.GENUS_H_COVER and self.h < 2:
            raise ValueError(f"Covers of genus h curves need h >= 2, got {self.h}.")
        if self.family is LocusFamily.HYPERELLIPTIC and (self.a < 0 or not 0 <= self.h <= 2 * self.g + 2):
            raise ValueError(f"Hyperelliptic loci need a >= 0 and 0 <= h <= 2g + 2, got a = {self.a}, h = {self.h}.")


def locus_dim(locus: LocusDescriptor) -> int:
    """
    Returns the dimension of a locus.

    - gonal: 2g + 2k - 5
    - elliptic_cover, bielliptic: 2g - 2
    - genus_h_cover: 2g + 2k - 5 + h (3 - 2k)
    - hyperelliptic: 2g - 1
    - genus2_cover: 2g - 3
    - curves: 3g - 3
    - k3_pairs: 19 + g

    :param locus: the locus
    :return: its dimension
    """
    g, k, h = locus.g, locus.k, locus.h
    match locus.family:
        case LocusFamily.GONAL:
            return 2 * g + 2 * k - 5
        case LocusFamily.ELLIPTIC_COVER | LocusFamily.BIELLIPTIC:
            return 2 * g - 2
        case LocusFamily.GENUS_H_COVER:
            return 2 * g + 2 * k - 5 + h * (3 - 2 * k)
        case LocusFamily.HYPERELLIPTIC:
            return 2 * g - 1
        case LocusFamily.GENUS2_COVER:
            return 2 * g - 3
        case LocusFamily.CURVES:
            return 3 * g - 3
        case LocusFamily.K3_PAIRS:
            return 19 + g


def curves_dim(g: int) -> int:
    return locus_dim(LocusDescriptor(LocusFamily.CURVES, g))


def remarkable_difference(g1: int) -> int:
    """
    Returns (19 + g) - (3g - 3) + C(g1 + 1, 2) for g = 4 g1 - 3, the dimension of K3 pairs of genus g
    minus the dimension of the locus of curves with a root having g1 + 1 sections, as expected.
    It equals (g1 - 7)(g1 - 8) / 2.

    :param g1: the genus of the primitive polarization, at least 2
    :return: the difference
    """
    if g1 < 2:
        raise ValueError(f"Expected g1 >= 2, got {g1}.")
    g = 4 * g1 - 3
    return locus_dim(LocusDescriptor(LocusFamily.K3_PAIRS, g)) - curves_dim(g) + binomial(g1 + 1, 2)


def theta_lower_bound(g: int, g1: int) -> int:
    """
    Returns dim M_g - C(g1 + 1, 2), the lower bound on the dimension of any component of the locus
    of roots with at least g1 + 1 sections.
    """
    return curves_dim(g) - binomial(g1 + 1, 2)
