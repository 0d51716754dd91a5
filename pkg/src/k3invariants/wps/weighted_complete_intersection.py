from typing import Tuple, Sequence

from k3invariants.series import TruncatedSeries, series_ratio


class WeightedCompleteIntersection:
    """
    A complete intersection of hypersurfaces of given degrees inside the weighted projective
    space P(w_0, ..., w_N).
    The ambient space itself is the complete intersection with no degrees.

    Only numerology is modelled: the hypersurfaces are assumed to cut a well-formed, projectively
    normal variety, and neither smoothness nor regularity of the sequence is verified.

    Attributes
    ----------
    weights : Tuple[int, ...]
        the weights of the ambient weighted projective space
    degrees : Tuple[int, ...]
        the degrees of the hypersurfaces cutting the variety

    Examples
    --------
    The quartic hypersurface in P(1^4, 3^4)::

        from k3invariants.wps import WeightedCompleteIntersection
        x = WeightedCompleteIntersection([1] * 4 + [3] * 4, [4])
        x.dimension()          # 6
        x.canonical_weight()   # -12
        x.section_count(3)     # 24
        x.fano_index(3)        # 4

    """
    weights: Tuple[int, ...]
    degrees: Tuple[int, ...]

    def __init__(self, weights: Sequence[int], degrees: Sequence[int] = ()):
        """
        Initializes the complete intersection of the given degrees in P(weights).

        :param weights: a non-empty sequence of positive weights
        :param degrees: a sequence of positive degrees, shorter than the weight sequence
        """
        if not weights:
            raise ValueError("A weighted projective space needs at least one weight.")
        if any(w < 1 for w in weights):
            raise ValueError(f"Weights must be positive, got {list(weights)}.")
        if any(d < 1 for d in degrees):
            raise ValueError(f"Degrees must be positive, got {list(degrees)}.")
        if len(degrees) >= len(weights):
            raise ValueError(f"{len(degrees)} hypersurfaces in a space with {len(weights)} weights "
                             f"do not cut a positive-dimensional variety.")
        self.weights = tuple(weights)
        self.degrees = tuple(degrees)

    def ambient(self) -> 'WeightedCompleteIntersection':
        """
        Returns the ambient weighted projective space, as a complete intersection with no degrees.

        :return: the ambient space
        """
        return WeightedCompleteIntersection(self.weights)

    def dimension(self) -> int:
        """
        Returns the dimension, that is (number of weights - 1) - number of degrees.

        :return: the dimension of the complete intersection
        """
        return len(self.weights) - 1 - len(self.degrees)

    def hilbert_series(self, upto: int) -> TruncatedSeries:
        """
        Returns the Hilbert series of the complete intersection truncated at the given degree.

        :param upto: the truncation order
        :return: the series prod(1 - t^d) / prod(1 - t^w)
        """
        return series_ratio(self.degrees, self.weights, upto)

    def section_count(self, m: int) -> int:
        """
        Returns h^0(O_X(m)), the coefficient at m of the Hilbert series.

        :param m: a non-negative degree
        :return: the number of sections of O_X(m)
        """
        if m < 0:
            raise ValueError(f"Section counts are defined for non-negative degrees, got {m}.")
        return self.hilbert_series(m)[m]

    def canonical_weight(self) -> int:
        """
        Returns the weight of the canonical sheaf given by adjunction, sum(degrees) - sum(weights).

        :return: the integer c with K_X = O_X(c)
        """
        return sum(self.degrees) - sum(self.weights)

    def fano_index(self, polarization_weight: int) -> int:
        """
        Returns the index q of the Fano variety with respect to O_X(polarization_weight),
        that is -canonical_weight / polarization_weight.

        :param polarization_weight: the weight m of the polarization O_X(m)
        :return: the Fano index
        """
        anticanonical = -self.canonical_weight()
        if anticanonical <= 0:
            raise ValueError(f"{self} is not Fano: its anticanonical weight is {anticanonical}.")
        if polarization_weight < 1 or anticanonical % polarization_weight != 0:
            raise ValueError("polarization does not divide anticanonical")
        return anticanonical // polarization_weight

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightedCompleteIntersection) and \
            self.weights == other.weights and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.weights, self.degrees))

    def __str__(self):
        return f"X_{{{','.join(map(str, self.degrees))}}} in P({','.join(map(str, self.weights))})"

    def __repr__(self):
        return f"WeightedCompleteIntersection({list(self.weights)}, {list(self.degrees)})"
