from math import comb
from typing import Sequence

from k3invariants.series.truncated_series import TruncatedSeries


def binomial(n: int, k: int) -> int:
    """
    Returns the binomial coefficient C(n, k), which is 0 when k < 0 or k > n.

    :param n: a non-negative integer
    :param k: any integer
    :return: C(n, k)
    """
    if n < 0:
        raise ValueError(f"Binomial top argument must be non-negative, got {n}.")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def h_proj(n: int, k: int) -> int:
    """
    Returns h_n(k), the number of degree-k forms on the projective n-space,
    that is C(n + k, n) for k >= 0 and 0 for k < 0.

    :param n: the dimension of the projective space
    :param k: the degree
    :return: h^0(P^n, O(k))
    """
    if n < 0:
        raise ValueError(f"Projective dimension must be non-negative, got {n}.")
    if k < 0:
        return 0
    return comb(n + k, n)


def series_one_over_products(weights: Sequence[int], truncation: int) -> TruncatedSeries:
    """
    Expands the product of 1 / (1 - t^w) over the given weights, that is the Hilbert series of the
    weighted polynomial ring with variables of those weights. An empty weight list gives the series 1.

    :param weights: positive variable weights
    :param truncation: the truncation order of the result
    :return: the series whose coefficient at d counts weighted monomials of degree d
    """
    if truncation < 0:
        raise ValueError(f"Truncation must be non-negative, got {truncation}.")
    result = TruncatedSeries.one(truncation)
    for w in weights:
        if w < 1:
            raise ValueError(f"Weights must be positive, got {w}.")
        result = result.div_binomial(w)
    return result


def series_ratio(numerator_degrees: Sequence[int], weights: Sequence[int], truncation: int) -> TruncatedSeries:
    """
    Expands prod(1 - t^d) / prod(1 - t^w), the Hilbert series of a weighted complete intersection
    of the given degrees. The expansion is formal: the degrees are not checked to form a regular sequence.

    :param numerator_degrees: the hypersurface degrees
    :param weights: the ambient weights, non-empty
    :param truncation: the truncation order of the result
    :return: the expanded series
    """
    if not weights:
        raise ValueError("The weight list of a ratio series must be non-empty.")
    result = series_one_over_products(weights, truncation)
    for d in numerator_degrees:
        result = result.mul_binomial(d)
    return result
