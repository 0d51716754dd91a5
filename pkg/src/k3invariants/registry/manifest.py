import json
import logging
from importlib import resources
from pathlib import Path
from typing import Iterable, List, Optional, Union

import networkx as nx

from k3invariants.registry.claim import OVERRIDES, Claim, ClaimStatus
from k3invariants.registry.errors import ManifestError
from k3invariants.registry.operations import OPERATIONS, recipe_operations, recipe_references

logger = logging.getLogger(__name__)

DEFAULT_MANIFEST = 'claims.json'


def load_manifest(path: Optional[Union[str, Path]] = None) -> List[Claim]:
    """
    Loads and validates a claims manifest.
    Without a path, the manifest shipped with the package is loaded.

    :param path: the path of a JSON manifest
    :return: the claims, in manifest order
    """
    if path is None:
        text = (resources.files('k3invariants.registry') / 'data' / DEFAULT_MANIFEST).read_text(encoding='utf-8')
        source = f"<package>/{DEFAULT_MANIFEST}"
    else:
        text = Path(path).read_text(encoding='utf-8')
        source = str(path)
    try:
        data = json.loads(text)
        claims = [Claim.from_dict(entry) for entry in data['claims']]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ManifestError(f"Malformed manifest {source}: {e}") from e
    validate_manifest(claims)
    logger.info("Loaded %d claims from %s", len(claims), source)
    return claims


def build_claim_graph(claims: Iterable[Claim]) -> nx.DiGraph:
    """
    Returns the dependency graph of the claims, with an edge from each dependency to its dependent.
    Dependencies on unknown claims are kept as nodes without the ``claim`` attribute.

    :param claims: the claims
    :return: the dependency graph
    """
    graph = nx.DiGraph()
    for claim in claims:
        graph.add_node(claim.id, claim=claim)
    for claim in claims:
        graph.add_edges_from((dep, claim.id) for dep in claim.depends_on)
    return graph


def validate_manifest(claims: List[Claim]):
    """
    Checks that ids are unique, that recipes only name registered operations and refer to declared
    dependencies, that dependencies exist and form no cycle, that status overrides are STORED or
    DISPUTED, and that only STORED claims lack a recipe.

    :param claims: the claims to check
    """
    ids = [c.id for c in claims]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        raise ManifestError(f"Duplicate claim ids: {', '.join(duplicates)}.")

    for claim in claims:
        if claim.status_override is not None and claim.status_override not in OVERRIDES:
            raise ManifestError(f"Claim {claim.id} overrides its status with {claim.status_override.value}; "
                                f"only STORED and DISPUTED are allowed.")
        if claim.recipe is None:
            if claim.status_override is not ClaimStatus.STORED:
                raise ManifestError(f"Claim {claim.id} has no recipe and is not STORED.")
            continue
        unknown = sorted(set(recipe_operations(claim.recipe)) - OPERATIONS.keys())
        if unknown:
            raise ManifestError(f"Claim {claim.id} uses unknown operations: {', '.join(unknown)}.")
        undeclared = sorted(set(recipe_references(claim.recipe)) - set(claim.depends_on))
        if undeclared:
            raise ManifestError(f"Claim {claim.id} refers to undeclared dependencies: {', '.join(undeclared)}.")

    graph = build_claim_graph(claims)
    dangling = sorted(n for n, attr in graph.nodes(data=True) if 'claim' not in attr)
    if dangling:
        raise ManifestError(f"Dependencies on unknown claims: {', '.join(dangling)}.")
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise ManifestError(f"Claim dependencies form a cycle: {' -> '.join(u for u, _ in cycle)}.")
