import logging
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from k3invariants.registry.claim import Claim, ClaimResult, ClaimStatus, Report, Value, normalize_value
from k3invariants.registry.errors import UnknownClaimError
from k3invariants.registry.manifest import build_claim_graph, load_manifest
from k3invariants.registry.operations import evaluate
from k3invariants.utilities import ParUtils

logger = logging.getLogger(__name__)


def select_claims(claims: Sequence[Claim], prefixes: Optional[Iterable[str]]) -> List[Claim]:
    """
    Selects the claims whose id starts with one of the prefixes. None selects every claim,
    an empty list selects none.

    :param claims: the manifest
    :param prefixes: id prefixes
    :return: the selected claims, in manifest order
    """
    if prefixes is None:
        return list(claims)
    prefixes = list(prefixes)
    unmatched = [p for p in prefixes if not any(c.id.startswith(p) for c in claims)]
    if unmatched:
        valid = ', '.join(sorted(c.id for c in claims))
        raise UnknownClaimError(f"No claim matches {', '.join(repr(p) for p in unmatched)}; valid ids are: {valid}")
    return [c for c in claims if any(c.id.startswith(p) for p in prefixes)]


def run_claims(prefixes: Optional[Iterable[str]] = None, manifest: Optional[Sequence[Claim]] = None,
               parallel: bool = True) -> Report:
    """
    Recomputes the selected claims and compares each with its expected value.

    Claims are evaluated by generations of the dependency graph, restricted to the selection and its
    dependencies; the claims of a generation are evaluated in parallel. A recipe that raises yields a
    FAIL with no computed value. STORED claims echo their expected value; DISPUTED claims are
    recomputed but never fail.

    :param prefixes: id prefixes selecting the claims, None for all
    :param manifest: the claims, defaults to the packaged manifest
    :param parallel: whether to evaluate each generation with a thread pool
    :return: the report, ordered by claim id
    """
    claims = list(manifest) if manifest is not None else load_manifest()
    selected = select_claims(claims, prefixes)
    graph = build_claim_graph(claims)
    needed = set(c.id for c in selected)
    for claim in selected:
        needed |= nx.ancestors(graph, claim.id)
    generations = list(nx.topological_generations(graph.subgraph(needed)))
    logger.info("Evaluating %d claims (%d with dependencies) in %d generations",
                len(selected), len(needed), len(generations))

    computed: Dict[str, Optional[Value]] = {}
    results: Dict[str, ClaimResult] = {}
    for generation in generations:
        batch = [graph.nodes[i]['claim'] for i in sorted(generation)]
        evaluate_one = partial(_evaluate_claim, resolved=computed)
        batch_results = ParUtils.par_map(evaluate_one, batch) if parallel else list(map(evaluate_one, batch))
        for result in batch_results:
            computed[result.id] = result.computed
            results[result.id] = result

    report = Report(tuple(results[i] for i in sorted(c.id for c in selected)))
    logger.info("Summary: %s", report.summary())
    return report


def _evaluate_claim(claim: Claim, resolved: Dict[str, Optional[Value]]) -> ClaimResult:
    if claim.status_override is ClaimStatus.STORED:
        return _result(claim, claim.expected, ClaimStatus.STORED)
    try:
        value = normalize_value(evaluate(claim.recipe, resolved))
    except Exception as e:
        logger.warning("Claim %s: recipe raised %s: %s", claim.id, type(e).__name__, e)
        status = ClaimStatus.DISPUTED if claim.status_override is ClaimStatus.DISPUTED else ClaimStatus.FAIL
        return _result(claim, None, status)

    if claim.status_override is ClaimStatus.DISPUTED:
        status = ClaimStatus.DISPUTED
    elif value == claim.expected:
        status = ClaimStatus.PASS
    else:
        status = ClaimStatus.FAIL
        logger.warning("Claim %s: expected %s, computed %s", claim.id, claim.expected, value)
    return _result(claim, value, status)


def _result(claim: Claim, computed: Optional[Value], status: ClaimStatus) -> ClaimResult:
    logger.debug("Claim %s: %s", claim.id, status.value)
    return ClaimResult(claim.id, claim.paper_ref, claim.expected, computed, status)
