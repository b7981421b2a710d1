"""State enumeration and the one-step transition kernel of the MDP."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from scipy import sparse

from .dynamics import battery_step, source_transition_prob, via_step
from .params import IDLE, TRANSMIT, State, SystemParams, check_action

ROW_SUM_TOLERANCE = 1e-12
MAX_ROW_ENTRIES = 8


def enumerate_states(params: SystemParams) -> List[State]:
    """All states in canonical order: lexicographic by (e, x, delta).

    The position of a state in this list is its row/column index in every
    table and matrix of the package.
    """
    return [
        State(e, x, delta)
        for e in range(params.e_max + 1)
        for x in (0, 1)
        for delta in range(params.delta_max + 1)
    ]


def state_index(s: State, params: SystemParams) -> int:
    """Canonical index of s (inverse of enumerate_states)."""
    return (s.e * 2 + s.x) * (params.delta_max + 1) + s.delta


@dataclass(frozen=True)
class TransitionRow:
    """Distribution over successor states for one (state, action) pair."""

    entries: Tuple[Tuple[State, float], ...] = field(default_factory=tuple)

    def as_dict(self) -> Dict[State, float]:
        return dict(self.entries)

    def total(self) -> float:
        return sum(prob for _, prob in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def transition_kernel(s: State, a: int, params: SystemParams) -> TransitionRow:
    """Pr[S_{t+1} | S_t = s, a_t = a].

    With an empty battery the action is coerced to idle, so both actions
    share one row. Outcomes that clamp onto the same successor are merged and
    zero-probability outcomes are dropped.
    """
    if not s.in_bounds(params):
        raise ValueError(f"state {tuple(s)} out of bounds for {params}")
    a = check_action(a)
    if s.e == 0:
        a = IDLE

    if a == TRANSMIT:
        channel = ((True, params.p_s), (False, params.p_f))
    else:
        channel = ((False, 1.0),)

    merged: Dict[State, float] = {}
    for x_next in (s.x, 1 - s.x):
        p_source = source_transition_prob(s.x, x_next, params)
        changed = x_next != s.x
        for b, p_arrival in ((0, 1.0 - params.beta), (1, params.beta)):
            e_next = battery_step(s.e, b, a, params)
            for h, p_channel in channel:
                prob = p_source * p_arrival * p_channel
                if prob <= 0.0:
                    continue
                succ = State(e_next, x_next, via_step(s.delta, changed, a, h, params))
                merged[succ] = merged.get(succ, 0.0) + prob

    return TransitionRow(entries=tuple(merged.items()))


@lru_cache(maxsize=64)
def kernel_matrices(params: SystemParams) -> Tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """Sparse action kernels (P0, P1) over the canonical ordering.

    Cached per parameter set; callers must treat the matrices as read-only.
    """
    n = params.num_states
    matrices = []
    for a in (IDLE, TRANSMIT):
        rows, cols, vals = [], [], []
        for i, s in enumerate(enumerate_states(params)):
            for succ, prob in transition_kernel(s, a, params).entries:
                rows.append(i)
                cols.append(state_index(succ, params))
                vals.append(prob)
        matrices.append(
            sparse.csr_matrix(
                (np.asarray(vals), (np.asarray(rows), np.asarray(cols))),
                shape=(n, n),
            )
        )
    return matrices[0], matrices[1]


@dataclass
class KernelReport:
    """Findings of validate_kernel; empty violations means the kernel is valid."""

    rows_checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_kernel(params: SystemParams) -> KernelReport:
    """Check stochasticity, bounds and empty-battery action equivalence of every row."""
    report = KernelReport()
    for s in enumerate_states(params):
        rows = {}
        for a in (IDLE, TRANSMIT):
            row = transition_kernel(s, a, params)
            rows[a] = row
            report.rows_checked += 1
            where = f"state={tuple(s)} a={a}"

            if len(row) > MAX_ROW_ENTRIES:
                report.violations.append(f"{where}: {len(row)} entries exceeds {MAX_ROW_ENTRIES}")
            successors = [succ for succ, _ in row.entries]
            if len(set(successors)) != len(successors):
                report.violations.append(f"{where}: duplicate successor states")
            for succ, prob in row.entries:
                if prob < 0.0:
                    report.violations.append(f"{where}: negative probability {prob!r} to {tuple(succ)}")
                if not State(*succ).in_bounds(params):
                    report.violations.append(f"{where}: successor {tuple(succ)} out of bounds")
            total = row.total()
            if abs(total - 1.0) > ROW_SUM_TOLERANCE:
                report.violations.append(f"{where}: probabilities sum to {total!r}")

        if s.e == 0 and rows[IDLE].entries != rows[TRANSMIT].entries:
            report.violations.append(f"state={tuple(s)}: empty-battery rows differ between actions")

    return report
