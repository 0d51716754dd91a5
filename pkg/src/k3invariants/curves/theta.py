from dataclasses import dataclass
from typing import List

from k3invariants.series import binomial


@dataclass(frozen=True)
class HyperellipticTheta:
    """
    The root θ = a ι + p_1 + ... + p_h of the canonical bundle of a hyperelliptic curve, ι being
    the hyperelliptic pencil and p_i distinct Weierstrass points.
    """
    a: int
    h: int

    @property
    def h0(self) -> int:
        return self.a + 1


def theta_degree(g: int, k: int) -> int:
    """
    Returns (2g - 2) / k, the degree of a k-th root of the canonical bundle of a genus g curve.
    """
    if k < 1 or (2 * g - 2) % k != 0:
        raise ValueError(f"Root order {k} does not divide 2g - 2 = {2 * g - 2}.")
    return (2 * g - 2) // k


def expected_theta_codim(g1: int) -> int:
    """
    Returns C(g1 + 1, 2), the expected codimension of the locus of roots with g1 + 1 sections.
    """
    return binomial(g1 + 1, 2)


def same_parity(h0_a: int, h0_b: int) -> bool:
    """
    Tells whether two section counts have the same parity, the deformation invariant of a
    theta characteristic.
    """
    return (h0_a - h0_b) % 2 == 0


def hyperelliptic_theta_h0(g: int, r: int) -> int:
    """
    Returns h^0 of θ = ((g - 1) / r) ι on a hyperelliptic curve of genus g, which is (g - 1) / r + 1.
    """
    if r < 1 or (g - 1) % r != 0:
        raise ValueError(f"g - 1 = {g - 1} is not divisible by {r}.")
    return (g - 1) // r + 1


def hyperelliptic_theta_loci(g: int, k: int, min_a: int = 0) -> List[HyperellipticTheta]:
    """
    Lists the roots θ = a ι + p_1 + ... + p_h with k θ = K_C on a hyperelliptic curve of genus g,
    that is the pairs (a, h) with (k / 2)(2a + h) = g - 1 and h <= 2g + 2, keeping a >= min_a.
    Each of them sweeps a locus of dimension 2g - 1 in the moduli of roots.

    :param g: the genus, at least 2
    :param k: an even root order
    :param min_a: the smallest multiple of ι to keep
    :return: the roots ordered by decreasing a
    """
    if g < 2 or k < 2 or k % 2 != 0:
        raise ValueError(f"Expected g >= 2 and an even root order, got g = {g}, k = {k}.")
    b = k // 2
    if (g - 1) % b != 0:
        return []
    degree = (g - 1) // b
    return [HyperellipticTheta(a, degree - 2 * a)
            for a in range(degree // 2, max(min_a, 0) - 1, -1)
            if degree - 2 * a <= 2 * g + 2]
