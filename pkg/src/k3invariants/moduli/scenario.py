from dataclasses import dataclass
from typing import Iterable, Tuple, Union


@dataclass(frozen=True)
class Summand:
    """
    A labeled signed term of a dimension count.
    """
    label: str
    value: int

    def __str__(self):
        return f"{self.value:+d}  {self.label}"


def scenario_moduli(parts: Iterable[Union[Summand, Tuple[str, int]]]) -> int:
    """
    Evaluates a labeled dimension count such as "choice of conic 3 + linear system 28 - automorphisms 6".

    :param parts: summands, or (label, value) pairs
    :return: the sum of the values
    """
    return sum(p.value if isinstance(p, Summand) else p[1] for p in parts)
