"""Policy-induced Markov chains and their stationary distributions."""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy import sparse

from ..model import State, SystemParams, enumerate_states, kernel_matrices, state_index
from ..policies import Policy

logger = logging.getLogger(__name__)

STATIONARY_SOLVE = "stationary-solve"
PROPAGATION = "propagation"

PROPAGATION_TOLERANCE = 1e-12
PROPAGATION_MAX_STEPS = 10_000_000
INITIAL_STATE = State(0, 0, 0)


class StationaryDistributionError(RuntimeError):
    """Distribution propagation did not settle."""

    def __init__(self, steps: int, gap: float):
        super().__init__(
            f"distribution propagation did not converge in {steps} steps "
            f"(total variation gap {gap:.3e})"
        )
        self.steps = steps
        self.gap = gap


@dataclass
class InducedChain:
    """Transition matrix of the closed loop under a stationary policy."""

    params: SystemParams
    matrix: sparse.csr_matrix
    transmit_indicator: np.ndarray  # Pr[a=1 | s] * 1{e > 0}

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel()


@dataclass
class StationaryResult:
    """Stationary distribution plus the method that produced it."""

    distribution: np.ndarray
    method: str


def induced_chain(policy: Policy, params: SystemParams) -> InducedChain:
    """P(s, s') = sum_a Pr[a|s] Pr[s'|s, a]."""
    p0, p1 = kernel_matrices(params)
    transmit = policy.transmit_probabilities(params)
    empty = np.array([s.e == 0 for s in enumerate_states(params)])
    transmit[empty] = 0.0
    matrix = sparse.diags(1.0 - transmit) @ p0 + sparse.diags(transmit) @ p1
    return InducedChain(params=params, matrix=matrix.tocsr(), transmit_indicator=transmit)


def _linear_solve(matrix: sparse.csr_matrix):
    """Solve pi P = pi, sum(pi) = 1; None when the system is rank deficient."""
    n = matrix.shape[0]
    a = np.vstack([matrix.toarray().T - np.eye(n), np.ones((1, n))])
    b = np.zeros(n + 1)
    b[-1] = 1.0
    pi, _, rank, _ = scipy.linalg.lstsq(a, b, cond=1e-10)
    if rank < n:
        return None
    if np.abs(a @ pi - b).max() > 1e-10 or pi.min() < -1e-10:
        return None
    return pi


def _propagate(matrix: sparse.csr_matrix, params: SystemParams) -> np.ndarray:
    mu = np.zeros(matrix.shape[0])
    mu[state_index(INITIAL_STATE, params)] = 1.0
    transposed = matrix.T.tocsr()
    gap = float("inf")
    for step in range(1, PROPAGATION_MAX_STEPS + 1):
        nxt = transposed @ mu
        gap = 0.5 * float(np.abs(nxt - mu).sum())
        mu = nxt
        if gap < PROPAGATION_TOLERANCE:
            logger.debug("propagation settled after %d steps", step)
            return mu
    raise StationaryDistributionError(PROPAGATION_MAX_STEPS, gap)


def stationary_distribution(chain: InducedChain) -> StationaryResult:
    """Stationary law of the chain, by direct solve or, if singular, by propagation.

    Propagation starts from a point mass at (0, 0, 0); for chains with several
    recurrent classes the result depends on that start and is labeled as such.
    """
    pi = _linear_solve(chain.matrix)
    if pi is not None:
        pi = np.clip(pi, 0.0, None)
        return StationaryResult(distribution=pi / pi.sum(), method=STATIONARY_SOLVE)

    logger.warning(
        "stationary solve singular for %d-state chain; falling back to propagation",
        chain.matrix.shape[0],
    )
    return StationaryResult(distribution=_propagate(chain.matrix, chain.params), method=PROPAGATION)
