from math import prod
from typing import Sequence

from k3invariants.series import binomial


def k3_curve_genus(g1: int, k: int) -> int:
    """
    Returns the genus g = 1 + (g1 - 1) k^2 of the hyperplane sections of a K3 surface
    polarized by k times a primitive class of genus g1.

    :param g1: the genus of the primitive class, at least 2
    :param k: the divisibility, at least 1
    :return: the genus g
    """
    if g1 < 2 or k < 1:
        raise ValueError(f"Expected g1 >= 2 and k >= 1, got g1 = {g1}, k = {k}.")
    return 1 + (g1 - 1) * k * k


def ci_curve_genus(n: int, degrees: Sequence[int]) -> int:
    """
    Returns the genus of a smooth complete intersection curve in P^n of the given degrees,
    from 2g - 2 = prod(d) (sum(d) - n - 1).

    :param n: the dimension of the projective space
    :param degrees: n - 1 positive degrees
    :return: the genus of the curve
    """
    if len(degrees) != n - 1 or any(d < 1 for d in degrees):
        raise ValueError(f"A complete intersection curve in P^{n} needs {n - 1} positive degrees, "
                         f"got {list(degrees)}.")
    twice_genus_minus_two = prod(degrees) * (sum(degrees) - n - 1)
    if twice_genus_minus_two % 2 != 0:
        raise ValueError(f"Malformed complete intersection data {list(degrees)} in P^{n}.")
    return 1 + twice_genus_minus_two // 2


def castelnuovo_genus(d: int, r: int) -> int:
    """
    Returns Castelnuovo's bound on the genus of a non-degenerate irreducible curve of degree d in P^r:
    with m = (d - 1) // (r - 1) and e = d - 1 - m (r - 1), the bound is C(m, 2) (r - 1) + m e.

    :param d: the degree
    :param r: the dimension of the projective space, at least 2
    :return: the maximal genus
    """
    if r < 2 or d < r:
        raise ValueError(f"No non-degenerate curve of degree {d} in P^{r}.")
    m, e = divmod(d - 1, r - 1)
    return binomial(m, 2) * (r - 1) + m * e
