from dataclasses import dataclass
from typing import Dict, Tuple

from k3invariants.wps.weighted_complete_intersection import WeightedCompleteIntersection


@dataclass(frozen=True)
class ExtensionCase:
    """
    A universal extension of a K3 surface of genus g1 polarized by k times a primitive class,
    realized as a weighted complete intersection and embedded by O_X(polarization).

    Attributes
    ----------
    g1 : int
        the genus of the primitive polarization
    k : int
        the divisibility of the polarization
    variety : WeightedCompleteIntersection
        the weighted complete intersection carrying the extension
    polarization : int
        the weight m of the embedding line bundle O_X(m)
    expected_target : int
        the dimension of the projective space the extension is embedded in
    """
    g1: int
    k: int
    variety: WeightedCompleteIntersection
    polarization: int
    expected_target: int

    @property
    def label(self) -> str:
        return f"X_{{{','.join(map(str, self.variety.degrees))}}} for (g1, k) = ({self.g1}, {self.k})"


@dataclass(frozen=True)
class ExtensionRecord:
    """
    The numerology of an extension: its dimension, its Fano index and the dimension of the
    projective space its polarization embeds it in.
    """
    dimension: int
    index: int
    target: int


# Multiplicities of the weight-k variables of the sextic cases.
_SEXTIC_EXTRA_VARIABLES = {2: 15, 3: 10, 4: 6, 5: 3, 6: 1}


def _sextic_case(k: int) -> ExtensionCase:
    nu = _SEXTIC_EXTRA_VARIABLES[k]
    return ExtensionCase(2, k, WeightedCompleteIntersection([1, 1, 1, 3] + [k] * nu, [6]), k,
                         1 + k * k + nu)


_CATALOG: Dict[Tuple[int, int], ExtensionCase] = {
    (3, 4): ExtensionCase(3, 4, WeightedCompleteIntersection([1] * 4 + [4], [4]), 4, 34),
    (3, 3): ExtensionCase(3, 3, WeightedCompleteIntersection([1] * 4 + [3] * 4, [4]), 3, 23),
    (3, 2): ExtensionCase(3, 2, WeightedCompleteIntersection([1] * 4 + [2] * 10, [4]), 2, 19),
    (4, 2): ExtensionCase(4, 2, WeightedCompleteIntersection([1] * 5 + [2] * 6, [2, 3]), 2, 19),
    (4, 3): ExtensionCase(4, 3, WeightedCompleteIntersection([1] * 5 + [3], [2, 3]), 3, 29),
    (5, 2): ExtensionCase(5, 2, WeightedCompleteIntersection([1] * 6 + [2] * 3, [2, 2, 2]), 2, 20),
    **{(2, k): _sextic_case(k) for k in _SEXTIC_EXTRA_VARIABLES},
}


def extension_catalog() -> Dict[Tuple[int, int], ExtensionCase]:
    """
    Returns the built-in catalog of universal extensions keyed by (g1, k).

    :return: a copy of the catalog, in ascending key order
    """
    return dict(sorted(_CATALOG.items()))


def extension_case(g1: int, k: int) -> ExtensionCase:
    """
    Returns the catalog entry for the given pair.

    :param g1: the genus of the primitive polarization
    :param k: the divisibility of the polarization
    :return: the extension case
    """
    try:
        return _CATALOG[(g1, k)]
    except KeyError:
        raise ValueError(f"No universal extension is catalogued for (g1, k) = ({g1}, {k}); "
                         f"available pairs are {sorted(_CATALOG)}.") from None


def universal_extension_check(case: ExtensionCase) -> ExtensionRecord:
    """
    Computes the dimension, the Fano index and the embedding target dimension of an extension.
    The target is h^0(O_X(m)) - 1; comparing it with g + nu is left to the caller.

    :param case: the extension to check
    :return: the computed record
    """
    x = case.variety
    return ExtensionRecord(dimension=x.dimension(),
                           index=x.fano_index(case.polarization),
                           target=x.section_count(case.polarization) - 1)
