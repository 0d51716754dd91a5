class ManifestError(ValueError):
    """
    Raised when the claims manifest is malformed.
    """


class UnknownOperationError(ValueError):
    """
    Raised when a recipe names an operation that is not registered.
    """


class UnknownClaimError(ValueError):
    """
    Raised when a claim filter selects nothing.
    """
