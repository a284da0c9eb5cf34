"""The two-case step map on partition triples and the iterated Lebesgue bijection.

The map acts on triples (alpha, beta, gamma) where

  * alpha and beta both have distinct parts,
  * the largest part of beta is at most ell(alpha)   (the "P condition"),
  * gamma has only even parts, with ell(gamma) >= ell(beta) or gamma empty.

One forward step produces (mu, lambda, nu), keyed on the smallest part of beta:

  Case 1 (smallest part of beta is 1):
      mu     = alpha with every part decreased by 1
      lambda = beta with its 1-part swapped for an (ell(alpha)+1)-part,
               then every part decreased by 2
      nu     = gamma with 2 added to each of its first ell(beta) parts
               (an empty gamma counts as ell(beta) zero parts)

  Case 2 (smallest part of beta is at least 2):
      mu     = alpha
      lambda = beta with every part decreased by 2
      nu     = same rule as Case 1

Both cases move exactly 2*ell(beta) units of weight from (alpha, beta) onto
gamma, so iterating from (alpha, beta, empty) must empty beta; the surviving
pair (mu, nu) has mu with distinct parts and nu with distinct even parts.
The step conserves the statistic n_o(alpha') - n_o(beta), which for
distinct-part alpha equals alt_sum(alpha) - n_o(beta); that is the
alternating-sum refinement the test suite checks.

The inverse step recovers the unique preimage: r is the multiplicity of the
largest part of nu (equivalently the common value of the two smallest parts
of nu'); peel 2 off the first r parts of nu and put it back on lambda padded
to r parts; if the resulting largest part exceeds ell(mu) the peeled partition
must shed its largest part back into alpha and a 1-part (undoing Case 1).
Each rejection point signals the input is not in the image of the step map;
as a final guard the reconstruction is pushed forward again and must
reproduce the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    EMPTY,
    Partition,
    all_parts_even,
    conjugate,
    has_distinct_parts,
    make_partition,
    num_odd_parts,
)


class ConsistencyError(RuntimeError):
    """An invariant that must hold on valid input was violated (fatal)."""


@dataclass(frozen=True)
class PairP:
    """Pair (alpha, beta), both distinct parts, largest part of beta <= ell(alpha)."""

    alpha: Partition
    beta: Partition


@dataclass(frozen=True)
class PairQ:
    """Pair (mu, nu), both distinct parts, nu with only even parts."""

    mu: Partition
    nu: Partition


@dataclass(frozen=True)
class BijectionTriple:
    """Working state of the iterated map; see the module docstring."""

    alpha: Partition
    beta: Partition
    gamma: Partition


def pair_p_violation(alpha: Partition, beta: Partition) -> str | None:
    """Reason (alpha, beta) fails the P conditions, or None if it is valid."""
    if not has_distinct_parts(alpha):
        return "alpha has repeated parts"
    if not has_distinct_parts(beta):
        return "beta has repeated parts"
    if beta and beta[0] > alpha.length:
        return "largest part of beta exceeds length of alpha"
    return None


def pair_q_violation(mu: Partition, nu: Partition) -> str | None:
    """Reason (mu, nu) fails the Q conditions, or None if it is valid."""
    if not has_distinct_parts(mu):
        return "mu has repeated parts"
    if not has_distinct_parts(nu):
        return "nu has repeated parts"
    if not all_parts_even(nu):
        return "nu has an odd part"
    return None


def triple_violation(t: BijectionTriple) -> str | None:
    """Reason t fails the triple invariants, or None if it is valid."""
    reason = pair_p_violation(t.alpha, t.beta)
    if reason:
        return reason
    if not all_parts_even(t.gamma):
        return "gamma has an odd part"
    if t.gamma and t.gamma.length < t.beta.length:
        return "gamma is non-empty but shorter than beta"
    return None


def triple_weight(t: BijectionTriple) -> int:
    return t.alpha.weight + t.beta.weight + t.gamma.weight


def triple_stat(t: BijectionTriple) -> int:
    """The conserved statistic n_o(alpha') - n_o(beta) of a triple."""
    return num_odd_parts(conjugate(t.alpha)) - num_odd_parts(t.beta)


@dataclass(frozen=True)
class StepTrace:
    """Audit record of one step.

    ``before`` is always the P-side triple (the step map's input) and
    ``after`` the image triple, regardless of the direction in which the
    step was computed.
    """

    case: int
    before: BijectionTriple
    after: BijectionTriple
    conserved_weight: int
    conserved_stat: int

    @classmethod
    def capture(cls, case: int, before: BijectionTriple, after: BijectionTriple) -> "StepTrace":
        w0, w1 = triple_weight(before), triple_weight(after)
        if w0 != w1:
            raise ConsistencyError(f"step does not conserve weight: {w0} -> {w1}")
        s0, s1 = triple_stat(before), triple_stat(after)
        if s0 != s1:
            raise ConsistencyError(
                f"step does not conserve n_o(alpha')-n_o(beta): {s0} -> {s1}"
            )
        return cls(case, before, after, w0, s0)


def step_trace_dict(trace: StepTrace) -> dict:
    """JSON-ready form of a trace; schema shared with the command-line tools."""
    return {
        "case": trace.case,
        "alpha": list(trace.before.alpha),
        "beta": list(trace.before.beta),
        "gamma": list(trace.before.gamma),
        "mu": list(trace.after.alpha),
        "lambda": list(trace.after.beta),
        "nu": list(trace.after.gamma),
        "weight": trace.conserved_weight,
        "stat": trace.conserved_stat,
    }


def _bump_gamma(gamma: Partition, m: int) -> Partition:
    """Add 2 to each of the first m parts of gamma, padding with zeros to m parts."""
    base = list(gamma.parts)
    if len(base) < m:
        base.extend([0] * (m - len(base)))
    for i in range(m):
        base[i] += 2
    return make_partition(base)


def phi_step(t: BijectionTriple) -> tuple[BijectionTriple, StepTrace]:
    """Apply one forward step; beta must be non-empty.

    Returns the image triple and its trace.  Raises ValueError on invalid
    input and ConsistencyError if the output breaks an invariant that valid
    input cannot break.
    """
    reason = triple_violation(t)
    if reason:
        raise ValueError(f"phi_step: {reason}")
    if not t.beta:
        raise ValueError("phi_step: beta is empty (iteration has terminated)")

    m = t.beta.length
    if t.beta.parts[-1] == 1:
        case = 1
        mu = make_partition(x - 1 for x in t.alpha)
        swapped = [x for x in t.beta if x != 1] + [t.alpha.length + 1]
        lam = make_partition(x - 2 for x in swapped)
    else:
        case = 2
        mu = t.alpha
        lam = make_partition(x - 2 for x in t.beta)
    nu = _bump_gamma(t.gamma, m)

    after = BijectionTriple(mu, lam, nu)
    reason = triple_violation(after)
    if reason:
        raise ConsistencyError(f"phi_step produced an invalid triple: {reason}")
    return after, StepTrace.capture(case, t, after)


def phi_inverse_step(t: BijectionTriple) -> tuple[BijectionTriple, StepTrace]:
    """Recover the unique preimage of t under the forward step.

    The gamma component of t (the nu of the forward step) must be non-empty.
    Raises ValueError whenever t is not in the image of the step map and
    names the first failed reconstruction condition.
    """
    reason = triple_violation(t)
    if reason:
        raise ValueError(f"phi_inverse_step: {reason}")
    mu, lam, nu = t.alpha, t.beta, t.gamma
    if not nu:
        raise ValueError("phi_inverse_step: nu is empty (nothing to undo)")

    r = sum(1 for x in nu if x == nu[0])
    if __debug__:
        # r is also the common value of the two smallest parts of nu'.
        cols = conjugate(nu).parts
        assert cols[-1] == r and cols[-2] == r
    if r < lam.length:
        raise ValueError(
            "phi_inverse_step: multiplicity of nu's largest part is smaller "
            "than the length of lambda (not in the image)"
        )

    gamma_bar = make_partition([x - 2 for x in nu.parts[:r]] + list(nu.parts[r:]))
    beta_bar = make_partition(
        (lam.parts[i] if i < lam.length else 0) + 2 for i in range(r)
    )
    if not has_distinct_parts(beta_bar):
        raise ValueError(
            "phi_inverse_step: reconstructed beta has repeated parts (not in the image)"
        )

    if beta_bar[0] <= mu.length:
        case = 2
        before = BijectionTriple(mu, beta_bar, gamma_bar)
    else:
        if beta_bar[0] > mu.length + 2:
            raise ValueError(
                "phi_inverse_step: reconstructed part exceeds length of mu "
                "by more than 2 (not in the image)"
            )
        case = 1
        alpha_parts = [x + 1 for x in mu]
        if beta_bar[0] == mu.length + 2:
            alpha_parts.append(1)
        alpha = make_partition(alpha_parts)
        beta = make_partition(list(beta_bar.parts[1:]) + [1])
        before = BijectionTriple(alpha, beta, gamma_bar)

    reason = triple_violation(before)
    if reason:
        raise ValueError(
            f"phi_inverse_step: reconstruction violates triple invariants "
            f"({reason}); not in the image"
        )
    redone, _ = phi_step(before)
    if redone != t:
        raise ValueError(
            "phi_inverse_step: forward step does not reproduce the input "
            "(not in the image)"
        )
    return before, StepTrace.capture(case, before, t)


def lebesgue_forward(pair: PairP) -> tuple[PairQ, list[StepTrace]]:
    """Iterate the forward step from (alpha, beta, empty) until beta empties.

    Returns the resulting Q-pair and the full step trace.  Total weight,
    ell(beta) (as ell(nu)), and alt_sum(alpha) - n_o(beta) (as alt_sum(mu))
    are conserved; the per-step traces assert the first and last.
    """
    reason = pair_p_violation(pair.alpha, pair.beta)
    if reason:
        raise ValueError(f"lebesgue_forward: {reason}")

    t = BijectionTriple(pair.alpha, pair.beta, EMPTY)
    budget = pair.alpha.weight + pair.beta.weight + 1
    traces: list[StepTrace] = []
    while t.beta:
        if len(traces) >= budget:
            raise ConsistencyError("lebesgue_forward: step budget exceeded")
        active = t.alpha.weight + t.beta.weight
        t, trace = phi_step(t)
        if t.alpha.weight + t.beta.weight >= active:
            raise ConsistencyError("lebesgue_forward: active weight failed to decrease")
        traces.append(trace)

    out = PairQ(t.alpha, t.gamma)
    reason = pair_q_violation(out.mu, out.nu)
    if reason:
        raise ConsistencyError(f"lebesgue_forward: output not in Q: {reason}")
    return out, traces


def lebesgue_inverse(pair: PairQ) -> tuple[PairP, list[StepTrace]]:
    """Iterate the inverse step from (mu, empty, nu) until nu empties.

    Each inverse step lowers the largest part of the gamma component by
    exactly 2, so the iteration takes nu[0]/2 steps.  An inverse-step failure
    on a valid Q-pair cannot happen; it is reported as a ConsistencyError.
    """
    reason = pair_q_violation(pair.mu, pair.nu)
    if reason:
        raise ValueError(f"lebesgue_inverse: {reason}")

    t = BijectionTriple(pair.mu, EMPTY, pair.nu)
    expected_steps = pair.nu[0] // 2 if pair.nu else 0
    traces: list[StepTrace] = []
    while t.gamma:
        if len(traces) >= expected_steps:
            raise ConsistencyError(
                "lebesgue_inverse: gamma's largest part failed to drop by 2 per step"
            )
        try:
            t, trace = phi_inverse_step(t)
        except ValueError as exc:
            raise ConsistencyError(f"lebesgue_inverse: inverse step failed: {exc}") from exc
        traces.append(trace)

    if len(traces) != expected_steps:
        raise ConsistencyError(
            f"lebesgue_inverse: took {len(traces)} steps, expected {expected_steps}"
        )
    out = PairP(t.alpha, t.beta)
    reason = pair_p_violation(out.alpha, out.beta)
    if reason:
        raise ConsistencyError(f"lebesgue_inverse: output not in P: {reason}")
    return out, traces
