from .errors import ManifestError, UnknownOperationError, UnknownClaimError
from .claim import OVERRIDES, Claim, ClaimStatus, ClaimResult, Report, normalize_value
from .operations import OPERATIONS, operation, evaluate
from .manifest import load_manifest, validate_manifest, build_claim_graph
from .runner import select_claims, run_claims
