from typing import Iterable, List, Optional, Tuple, Union


class TruncatedSeries:
    """
    A formal power series with arbitrary-precision integer coefficients, known exactly up to a
    truncation order.

    The coefficient at degree d is valid for 0 <= d <= truncation_order. Negative degrees are
    allowed as queries and return 0, so that inclusion-exclusion sums can be written without
    guarding the index. Queries beyond the truncation order raise a ``ValueError``.

    Instances are immutable: every arithmetic operation returns a new series whose truncation
    order is the minimum of the operands' orders.

    Attributes
    ----------
    truncation_order : int
        the largest degree at which the coefficients are exact

    Examples
    --------
    The Hilbert series of the projective line, truncated at degree 4::

        from k3invariants.series import TruncatedSeries
        one = TruncatedSeries.one(4)
        p1 = one.div_binomial(1).div_binomial(1)
        p1.coefficients()  # (1, 2, 3, 4, 5)

    """
    truncation_order: int
    _coefficients: Tuple[int, ...]

    def __init__(self, coefficients: Iterable[int], truncation_order: Optional[int] = None):
        """
        Initializes a series from its leading coefficients.
        If a truncation order is given, the coefficients are padded with zeros or cut to match it.

        :param coefficients: the coefficients, index d being the coefficient of t^d
        :param truncation_order: the truncation order, defaults to len(coefficients) - 1
        """
        coefficients = [int(c) for c in coefficients]
        if truncation_order is None:
            truncation_order = len(coefficients) - 1
        if truncation_order < 0:
            raise ValueError(f"Truncation order must be non-negative, got {truncation_order}.")
        coefficients = coefficients[:truncation_order + 1]
        coefficients.extend([0] * (truncation_order + 1 - len(coefficients)))
        self.truncation_order = truncation_order
        self._coefficients = tuple(coefficients)

    @staticmethod
    def one(truncation_order: int) -> 'TruncatedSeries':
        """
        Returns the constant series 1 truncated at the given order.

        :param truncation_order: the truncation order of the result
        :return: the series 1
        """
        return TruncatedSeries([1], truncation_order)

    def coefficients(self) -> Tuple[int, ...]:
        """
        Returns the coefficients from degree 0 up to the truncation order.

        :return: a tuple of length truncation_order + 1
        """
        return self._coefficients

    def truncate(self, truncation_order: int) -> 'TruncatedSeries':
        """
        Returns the same series truncated at a lower order.

        :param truncation_order: the new truncation order, at most the current one
        :return: the truncated series
        """
        if truncation_order > self.truncation_order:
            raise ValueError(f"Cannot extend a series truncated at {self.truncation_order} "
                             f"to order {truncation_order}.")
        return TruncatedSeries(self._coefficients, truncation_order)

    def mul_binomial(self, exponent: int) -> 'TruncatedSeries':
        """
        Multiplies the series by (1 - t^exponent).

        :param exponent: a positive integer
        :return: the product series
        """
        self._check_exponent(exponent)
        c = list(self._coefficients)
        for d in range(self.truncation_order, exponent - 1, -1):
            c[d] -= c[d - exponent]
        return TruncatedSeries(c, self.truncation_order)

    def div_binomial(self, exponent: int) -> 'TruncatedSeries':
        """
        Divides the series by (1 - t^exponent), i.e. multiplies by 1 + t^e + t^2e + ...

        :param exponent: a positive integer
        :return: the quotient series
        """
        self._check_exponent(exponent)
        c = list(self._coefficients)
        for d in range(exponent, self.truncation_order + 1):
            c[d] += c[d - exponent]
        return TruncatedSeries(c, self.truncation_order)

    def divide(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        """
        Exact division by a series whose constant term is 1 or -1.

        :param other: the divisor
        :return: the quotient q with q * other = self up to the common truncation order
        """
        if other[0] not in (1, -1):
            raise ValueError(f"Exact division requires a unit constant term, got {other[0]}.")
        order = min(self.truncation_order, other.truncation_order)
        q: List[int] = []
        for d in range(order + 1):
            rest = self[d] - sum(q[i] * other[d - i] for i in range(d))
            q.append(rest * other[0])
        return TruncatedSeries(q, order)

    def __getitem__(self, degree: int) -> int:
        if degree < 0:
            return 0
        if degree > self.truncation_order:
            raise ValueError(f"Degree {degree} exceeds the truncation order {self.truncation_order}.")
        return self._coefficients[degree]

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        order = min(self.truncation_order, other.truncation_order)
        return TruncatedSeries((self[d] + other[d] for d in range(order + 1)), order)

    def __neg__(self) -> 'TruncatedSeries':
        return TruncatedSeries((-c for c in self._coefficients), self.truncation_order)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return self + (-other)

    def __mul__(self, other: Union['TruncatedSeries', int]) -> 'TruncatedSeries':
        if isinstance(other, int):
            return TruncatedSeries((other * c for c in self._coefficients), self.truncation_order)
        order = min(self.truncation_order, other.truncation_order)
        return TruncatedSeries((sum(self[i] * other[d - i] for i in range(d + 1)) for d in range(order + 1)),
                               order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and \
            self.truncation_order == other.truncation_order and \
            self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self.truncation_order, self._coefficients))

    def __len__(self):
        return self.truncation_order + 1

    def __repr__(self):
        return f"TruncatedSeries({list(self._coefficients)}, truncation_order={self.truncation_order})"

    @staticmethod
    def _check_exponent(exponent: int):
        if exponent < 1:
            raise ValueError(f"Binomial exponent must be positive, got {exponent}.")
