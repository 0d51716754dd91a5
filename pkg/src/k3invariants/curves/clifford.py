from k3invariants.curves.genus import k3_curve_genus


def clifford_restriction(g1: int, k: int, l: int) -> int:
    """
    Returns (2 g1 - 2) l (k - l) - 2, the Clifford index of the restriction to C of the class
    l times the primitive polarization.
    """
    _check_pair(g1, k)
    if not 1 <= l <= k - 1:
        raise ValueError(f"Expected 1 <= l <= {k - 1}, got l = {l}.")
    return (2 * g1 - 2) * l * (k - l) - 2


def clifford_general(g1: int, k: int) -> int:
    """
    Returns the Clifford index of a general curve in |k L_1|, the minimum of
    :func:`clifford_restriction` over l, which equals (2 g1 - 2)(k - 1) - 2.
    """
    _check_pair(g1, k)
    return min(clifford_restriction(g1, k, l) for l in range(1, k))


def exceptional_low(g1: int, k: int) -> bool:
    """
    Tells whether the pair (g1, k) is one of the low cases where the Clifford index is at most 2
    or the genus is below 11.
    """
    _check_pair(g1, k)
    return clifford_general(g1, k) <= 2 or k3_curve_genus(g1, k) < 11


def max_k_for_genus(g1: int, bound: int) -> int:
    """
    Returns the largest k with k3_curve_genus(g1, k) <= bound, or 0 if there is none.
    """
    k = 0
    while k3_curve_genus(g1, k + 1) <= bound:
        k += 1
    return k


def clifford_h0_bound(deg: int) -> int:
    """
    Returns deg // 2 + 1, the largest h^0 a special line bundle of the given degree can have.
    """
    if deg < 0:
        raise ValueError(f"Degree must be non-negative, got {deg}.")
    return deg // 2 + 1


def _check_pair(g1: int, k: int):
    if g1 < 2 or k < 2:
        raise ValueError(f"Expected g1 >= 2 and k >= 2, got g1 = {g1}, k = {k}.")
