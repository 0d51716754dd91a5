from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple, Union

Value = Union[int, Tuple[int, ...]]


class ClaimStatus(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    STORED = 'STORED'
    DISPUTED = 'DISPUTED'


# The only statuses a manifest entry may force.
OVERRIDES = (ClaimStatus.STORED, ClaimStatus.DISPUTED)


@dataclass(frozen=True)
class Claim:
    """
    A numbered integer assertion, with the recipe recomputing it.

    Attributes
    ----------
    id : str
        a stable identifier of the form "<location label>-<slug>"
    paper_ref : str
        the location of the assertion
    expected : Value
        the asserted integer, or tuple of integers
    recipe : Optional[Mapping[str, Any]]
        a JSON recipe {"op": name, "args": [...]}; arguments may be nested recipes or
        {"ref": id} references to dependencies. STORED claims may have none
    status_override : Optional[ClaimStatus]
        STORED for pure data echoed without recomputation, DISPUTED for assertions that are
        recomputed but never fail
    depends_on : Tuple[str, ...]
        the claims whose computed values the recipe refers to
    note : str
        a remark on the reading adopted, and for divisors on a Hirzebruch surface the
        translation of the source's classes into the basis C0, f
    quote : str
        the asserting text, verbatim; table claims quote the table rows joined by " / "
    """
    id: str
    paper_ref: str
    expected: Value
    recipe: Optional[Mapping[str, Any]] = None
    status_override: Optional[ClaimStatus] = None
    depends_on: Tuple[str, ...] = ()
    note: str = ''
    quote: str = ''

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> 'Claim':
        """
        Builds a claim from its manifest entry.

        :param data: the JSON object of the claim
        :return: the claim
        """
        status = data.get('status')
        if status is not None and ClaimStatus(status) not in OVERRIDES:
            raise ValueError(f"Claim {data['id']} has status {status}; a manifest may only set "
                             f"{', '.join(s.value for s in OVERRIDES)}.")
        return Claim(id=data['id'],
                     paper_ref=data['paper_ref'],
                     expected=normalize_value(data['expected']),
                     recipe=data.get('recipe'),
                     status_override=ClaimStatus(status) if status is not None else None,
                     depends_on=tuple(data.get('depends_on', ())),
                     note=data.get('note', ''),
                     quote=data.get('quote', ''))


@dataclass(frozen=True)
class ClaimResult:
    id: str
    paper_ref: str
    expected: Value
    computed: Optional[Value]
    status: ClaimStatus

    def to_dict(self) -> Dict[str, Any]:
        return {'id': self.id,
                'paper_ref': self.paper_ref,
                'expected': _to_json(self.expected),
                'computed': _to_json(self.computed),
                'status': self.status.value}


@dataclass(frozen=True)
class Report:
    """
    The outcome of a verification run: one result per selected claim, ordered by id.
    """
    results: Tuple[ClaimResult, ...] = field(default_factory=tuple)

    def summary(self) -> Dict[str, int]:
        counts = {status.value.lower(): 0 for status in ClaimStatus}
        for result in self.results:
            counts[result.status.value.lower()] += 1
        return counts

    def has_failures(self) -> bool:
        return any(r.status is ClaimStatus.FAIL for r in self.results)

    def __len__(self):
        return len(self.results)

    def __iter__(self):
        return iter(self.results)


def normalize_value(value: Any) -> Value:
    """
    Converts a computed or stored value to an int or a tuple of ints. Booleans become 1 or 0.

    :param value: an int, a bool, or a sequence of them
    :return: the normalized value
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return tuple(normalize_value(v) for v in value)
    raise TypeError(f"Claim values must be integers or tuples of integers, got {value!r}.")


def _to_json(value: Optional[Value]):
    return list(_to_json(v) for v in value) if isinstance(value, tuple) else value
