from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Union


class Singularity(Enum):
    """
    Planar curve singularities together with their delta invariant.
    """
    NODE = 'node'
    CUSP = 'cusp'
    TRIPLE_POINT = 'triple_point'

    @property
    def delta(self) -> int:
        return 3 if self is Singularity.TRIPLE_POINT else 1


@dataclass(frozen=True)
class SingularityBudget:
    """
    The singularities of a curve, as counts per singularity type.

    Examples
    --------
    ::

        from k3invariants.surfaces import SingularityBudget, geometric_genus
        budget = SingularityBudget.of(triple_point=1, node=2)
        budget.delta()               # 5
        geometric_genus(33, budget)  # 28

    """
    counts: Mapping['Singularity', int] = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in self.counts.values()):
            raise ValueError(f"Singularity counts must be non-negative, got {dict(self.counts)}.")

    @staticmethod
    def of(**counts: int) -> 'SingularityBudget':
        return SingularityBudget.from_mapping(counts)

    @staticmethod
    def from_mapping(counts: Mapping[Union[str, 'Singularity'], int]) -> 'SingularityBudget':
        parsed: Dict[Singularity, int] = {}
        for kind, count in counts.items():
            try:
                singularity = Singularity(kind) if not isinstance(kind, Singularity) else kind
            except ValueError:
                raise ValueError(f"Unknown singularity type {kind!r}; "
                                 f"expected one of {[s.value for s in Singularity]}.") from None
            parsed[singularity] = parsed.get(singularity, 0) + count
        return SingularityBudget(parsed)

    def delta(self) -> int:
        return sum(kind.delta * count for kind, count in self.counts.items())


def geometric_genus(pa: int, sing: SingularityBudget) -> int:
    """
    Returns the geometric genus pa - sum(count * delta) of a curve with the given singularities.

    :param pa: the arithmetic genus
    :param sing: the singularities of the curve
    :return: the genus of the normalization
    """
    genus = pa - sing.delta()
    if genus < 0:
        raise ValueError(f"Singularities with total delta {sing.delta()} exceed the arithmetic genus {pa}.")
    return genus
