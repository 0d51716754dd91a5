from typing import Sequence

from k3invariants.series import binomial


def plane_model_genus(d: int, multiplicities: Sequence[int] = (), nodes: int = 0) -> int:
    """
    Returns the geometric genus of a plane curve of degree d with ordinary points of the given
    multiplicities and a further number of nodes: C(d - 1, 2) - sum C(m, 2) - nodes.
    """
    if d < 1:
        raise ValueError(f"Plane curve degree must be positive, got {d}.")
    genus = binomial(d - 1, 2) - sum(binomial(m, 2) for m in multiplicities) - nodes
    if genus < 0:
        raise ValueError(f"A degree {d} plane curve cannot carry multiplicities {list(multiplicities)} "
                         f"and {nodes} nodes.")
    return genus


def plane_model_degree(d: int, multiplicities: Sequence[int], system_degree: int) -> int:
    """
    Returns the degree of the image of a plane curve of degree d under the system of plane curves of
    degree system_degree passing simply through its singular base points, system_degree d - sum m.
    """
    if d < 1 or system_degree < 1:
        raise ValueError(f"Degrees must be positive, got d = {d}, system degree {system_degree}.")
    return system_degree * d - sum(multiplicities)
