def aut_dim(kind: str, n: int = 0) -> int:
    """
    Returns the dimension of the automorphism group of a rational surface, or of a projective
    linear group.

    Supported kinds are ``'hirzebruch'`` (F_n: n + 5 for n >= 1, 6 for n = 0), ``'plane'`` (8),
    ``'quadric'`` (P^1 x P^1: 6) and ``'pgl'`` (PGL(n): n^2 - 1).

    :param kind: the kind of surface or group
    :param n: the index of F_n, or the size of the matrices for PGL(n)
    :return: the dimension of the group
    """
    if kind == 'hirzebruch':
        if n < 0:
            raise ValueError(f"Hirzebruch surfaces F_n need n >= 0, got {n}.")
        return 6 if n == 0 else n + 5
    if kind == 'plane':
        return 8
    if kind == 'quadric':
        return 6
    if kind == 'pgl':
        if n < 1:
            raise ValueError(f"PGL(n) needs n >= 1, got {n}.")
        return n * n - 1
    raise ValueError(f"Unknown surface or group kind {kind!r}; "
                     f"expected 'hirzebruch', 'plane', 'quadric' or 'pgl'.")
