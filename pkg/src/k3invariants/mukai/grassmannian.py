def grassmann_dim(k: int, n: int) -> int:
    """
    Returns (k + 1)(n - k), the dimension of the Grassmannian of k-planes in P^n.

    :param k: the dimension of the linear subspaces
    :param n: the dimension of the ambient projective space
    :return: the dimension of G(k, P^n)
    """
    if k < 0 or k > n:
        raise ValueError(f"Expected 0 <= k <= n, got k = {k}, n = {n}.")
    return (k + 1) * (n - k)
