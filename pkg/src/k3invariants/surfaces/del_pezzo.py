def delpezzo_h0(degree: int, m: int) -> int:
    """
    Returns h^0(-m K_S) = m (m + 1) degree / 2 + 1 on a del Pezzo surface S of the given degree.

    :param degree: the degree K_S^2, between 1 and 9
    :param m: the multiple of the anticanonical class, non-negative
    :return: the number of sections
    """
    _check(degree, m)
    return m * (m + 1) * degree // 2 + 1


def delpezzo_pa(degree: int, m: int) -> int:
    """
    Returns the arithmetic genus 1 + m (m - 1) degree / 2 of the curves in |-m K_S|.

    :param degree: the degree K_S^2, between 1 and 9
    :param m: the multiple of the anticanonical class, non-negative
    :return: the arithmetic genus
    """
    _check(degree, m)
    return 1 + m * (m - 1) * degree // 2


def _check(degree: int, m: int):
    if not 1 <= degree <= 9:
        raise ValueError(f"A del Pezzo surface has degree between 1 and 9, got {degree}.")
    if m < 0:
        raise ValueError(f"Anticanonical multiple must be non-negative, got {m}.")
