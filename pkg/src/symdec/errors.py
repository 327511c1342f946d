"""Domain exceptions shared across modules."""


class HypothesisViolation(Exception):
    """Column synthesis refused: the weight condition w_{k-p} != w_k - 1 fails.

    Carries the witness weights so the caller can report them.
    """

    def __init__(self, gamma, k, p, w_k, w_k_minus_p):
        self.gamma = gamma
        self.k = k
        self.p = p
        self.w_k = w_k
        self.w_k_minus_p = w_k_minus_p
        super().__init__(
            f"weight condition fails for core={gamma}, k={k}, p={p}: "
            f"w_{k - p}={w_k_minus_p} equals w_{k}-1={w_k - 1}"
        )


class SearchCapExceeded(Exception):
    """Iterative deepening hit its configured cap (configuration error)."""


class MeataxeCapError(Exception):
    """The randomized splitting loop exhausted its attempt budget."""


class OracleMismatch(Exception):
    """A synthesized column disagrees with oracle decomposition numbers."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"oracle mismatch: {report.get('mismatches')}")
