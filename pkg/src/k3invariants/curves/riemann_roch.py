def rr_h0(deg: int, g: int, h1: int) -> int:
    """
    Riemann-Roch for a line bundle on a genus g curve: h^0 = deg - g + 1 + h^1.

    :param deg: the degree of the line bundle
    :param g: the genus
    :param h1: h^1 of the line bundle
    :return: h^0 of the line bundle
    """
    _check(g, h1)
    return deg - g + 1 + h1


def serre_h1(deg: int, g: int, h0: int) -> int:
    """
    Returns h^1 = h^0 - deg + g - 1, i.e. Riemann-Roch solved for h^1.
    """
    _check(g, h0)
    h1 = h0 - deg + g - 1
    if h1 < 0:
        raise ValueError(f"h0 = {h0} is below the Riemann-Roch minimum for degree {deg} in genus {g}.")
    return h1


def h0_nonspecial(deg: int, g: int) -> int:
    """
    Returns deg - g + 1, the number of sections of a nonspecial line bundle.
    """
    if g < 0:
        raise ValueError(f"Genus must be non-negative, got {g}.")
    h0 = deg - g + 1
    if h0 < 0:
        raise ValueError("bundle cannot be nonspecial")
    return h0


def _check(g: int, h: int):
    if g < 0 or h < 0:
        raise ValueError(f"Expected non-negative genus and cohomology, got g = {g}, h = {h}.")
