from typing import List, Sequence

from k3invariants.curves import k3_curve_genus
from k3invariants.moduli.scenario import Summand
from k3invariants.mukai.grassmannian import grassmann_dim
from k3invariants.series import h_proj, series_ratio

# Dimension of the affine group stabilizing a plane quartic section of a quartic surface.
_AFFINE_STABILIZER_DIM = 4

# General fibre dimensions for sextic double planes, k >= 2; zero beyond the table.
_SEXTIC_DOUBLE_PLANE_FIBRES = {2: 15, 3: 10, 4: 6, 5: 3, 6: 1}


def ideal_sheaf_h0(n: int, ci_degrees: Sequence[int], h: int) -> int:
    """
    Returns h^0(I_C(h)) for a complete intersection C of the given degrees in P^n, as
    h_n(h) minus the Hilbert function of C at h. Complete intersections are projectively normal.

    :param n: the dimension of the projective space
    :param ci_degrees: the degrees of the complete intersection
    :param h: a non-negative degree
    :return: the number of degree h forms vanishing on C
    """
    if h < 0:
        raise ValueError(f"Expected a non-negative degree, got {h}.")
    return h_proj(n, h) - series_ratio(ci_degrees, [1] * (n + 1), h)[h]


def fibre_breakdown(g1: int, k: int) -> List[Summand]:
    """
    Returns the labeled terms whose sum is the dimension of the general fibre of the map sending a
    K3 surface with a curve in |k L_1| to the curve, for L_1 primitive of genus g1 in {2, 3, 4, 5}.

    - g1 = 3: quartic surfaces through a (4, k) complete intersection of P^3.
    - g1 = 4: a quadric and a cubic through a (2, 3, k) complete intersection of P^4.
    - g1 = 5: nets of quadrics through a (2, 2, 2, k) complete intersection of P^5.
    - g1 = 2: stored values for sextic double planes.

    :param g1: the genus of the primitive polarization
    :param k: the divisibility, at least 1 (at least 2 unless g1 = 3)
    :return: the summands
    """
    if g1 not in (2, 3, 4, 5):
        raise ValueError(f"Fibre dimensions are available for g1 in {{2, 3, 4, 5}}, got {g1}.")
    if k < 1:
        raise ValueError(f"Expected k >= 1, got {k}.")
    if k == 1 and g1 != 3:
        raise ValueError(f"The primitive case k = 1 is only available for g1 = 3, got g1 = {g1}.")
    genus = k3_curve_genus(g1, k)

    if g1 == 3:
        if k == 1:
            return [Summand("quartics containing the plane quartic, h_3(3)", h_proj(3, 3)),
                    Summand("stabilizer Aff(3)", -_AFFINE_STABILIZER_DIM)]
        return [Summand(f"quartics containing C (genus {genus}), h_3({4 - k})", h_proj(3, 4 - k))]

    if g1 == 4:
        degrees = [2, 3, k]
        quadrics = ideal_sheaf_h0(4, degrees, 2)
        cubics = ideal_sheaf_h0(4, degrees, 3)
        return [Summand(f"quadrics containing C (genus {genus}), P^{quadrics - 1}", quadrics - 1),
                Summand(f"cubics containing C modulo multiples of the quadric, h^0(I_C(3)) - 1 - h_4(1)",
                        cubics - 1 - h_proj(4, 1))]

    if g1 == 5:
        quadrics = ideal_sheaf_h0(5, [2, 2, 2, k], 2)
        return [Summand(f"nets of quadrics containing C (genus {genus}), G(2, P^{quadrics - 1})",
                        grassmann_dim(2, quadrics - 1))]

    return [Summand(f"stored fibre dimension for sextic double planes (genus {genus})",
                    _SEXTIC_DOUBLE_PLANE_FIBRES.get(k, 0))]


def fibre_dim_ci(g1: int, k: int) -> int:
    """
    Returns the dimension of the general fibre over the moduli of curves of the map from K3 surfaces
    with a curve in |k L_1|, L_1 primitive of genus g1 in {2, 3, 4, 5}.

    :param g1: the genus of the primitive polarization
    :param k: the divisibility
    :return: the fibre dimension
    """
    return sum(s.value for s in fibre_breakdown(g1, k))
