"""Brute-force oracle: exhaustive generation of the pair sets and their statistics.

This module must stay independent of the series engine: it counts by listing,
never by generating functions, so that the two can check each other.

P_n: pairs (alpha, beta), both with distinct parts, |alpha|+|beta| = n and
     the largest part of beta at most ell(alpha).
Q_n: pairs (mu, nu), both with distinct parts, nu all even, |mu|+|nu| = n.

The refinement histogram keys each pair by (k, j):

    P side: k = alt_sum(alpha) - n_o(beta),  j = ell(beta)
    Q side: k = alt_sum(mu),                 j = ell(nu)

Equality of the k-marginals is the alternating-sum refinement; equality of
the joint histograms is the stronger, bijection-derived statement.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from .bijection import (
    PairP,
    PairQ,
    lebesgue_forward,
    lebesgue_inverse,
    pair_q_violation,
    step_trace_dict,
)
from .partitions import Partition, alt_sum, num_odd_parts

DEFAULT_PARTITION_CAP = 60
DEFAULT_PAIR_CAP = 25
MAX_N_ENV_VAR = "LEBESGUE_MAX_N"

_CONSTRAINTS = {
    "all": (False, False),
    "distinct": (True, False),
    "even": (False, True),
    "distinct-even": (True, True),
}


def pair_cap() -> int:
    """Enumeration cap for pair sets; LEBESGUE_MAX_N overrides the default."""
    raw = os.environ.get(MAX_N_ENV_VAR)
    if raw is None:
        return DEFAULT_PAIR_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"invalid {MAX_N_ENV_VAR}={raw!r}: not an integer") from exc


def gen_partitions(
    n: int,
    constraint: str = "all",
    *,
    max_part: int | None = None,
    cap: int = DEFAULT_PARTITION_CAP,
) -> Iterator[Partition]:
    """All partitions of n under the constraint, in lexicographic-descending order.

    constraint is one of "all", "distinct", "even", "distinct-even".
    max_part additionally bounds the largest part (used for the P condition).
    """
    if constraint not in _CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the partition generation cap ({cap})")
    distinct, even = _CONSTRAINTS[constraint]
    bound = n if max_part is None else min(max_part, n)

    def emit(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for x in range(min(remaining, largest), 0, -1):
            if even and x % 2:
                continue
            for rest in emit(remaining - x, x - 1 if distinct else x):
                yield (x,) + rest

    for parts in emit(n, bound):
        yield Partition(parts)


def _resolve_pair_cap(cap: int | None) -> int:
    return pair_cap() if cap is None else cap


def enumerate_P(n: int, cap: int | None = None) -> list[PairP]:
    """All pairs of P with total weight n, each exactly once, deterministic order."""
    cap = _resolve_pair_cap(cap)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the pair enumeration cap ({cap})")
    pairs = []
    for wa in range(n, -1, -1):
        for alpha in gen_partitions(wa, "distinct", cap=max(cap, DEFAULT_PARTITION_CAP)):
            for beta in gen_partitions(
                n - wa, "distinct", max_part=alpha.length, cap=max(cap, DEFAULT_PARTITION_CAP)
            ):
                pairs.append(PairP(alpha, beta))
    return pairs


def enumerate_Q(n: int, cap: int | None = None) -> list[PairQ]:
    """All pairs of Q with total weight n, each exactly once, deterministic order."""
    cap = _resolve_pair_cap(cap)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the pair enumeration cap ({cap})")
    pairs = []
    for wm in range(n, -1, -1):
        for mu in gen_partitions(wm, "distinct", cap=max(cap, DEFAULT_PARTITION_CAP)):
            for nu in gen_partitions(n - wm, "distinct-even", cap=max(cap, DEFAULT_PARTITION_CAP)):
                pairs.append(PairQ(mu, nu))
    return pairs


@dataclass
class Histogram:
    """Counts keyed jointly by (k, j); marginal views derive from the entries."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def add(self, k: int, j: int) -> None:
        self.entries[(k, j)] = self.entries.get((k, j), 0) + 1

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def k_marginal(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (k, _), c in self.entries.items():
            out[k] = out.get(k, 0) + c
        return out

    def j_marginal(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, j), c in self.entries.items():
            out[j] = out.get(j, 0) + c
        return out

    def csv_rows(self, n: int) -> list[str]:
        """Rows "n,k,j,count" sorted by (k, j); header not included."""
        return [
            f"{n},{k},{j},{c}"
            for (k, j), c in sorted(self.entries.items())
        ]


def refinement_histogram(side: str, n: int, cap: int | None = None) -> Histogram:
    """The (k, j) histogram of P_n or Q_n; see the module docstring for the keys."""
    hist = Histogram()
    if side == "P":
        for pair in enumerate_P(n, cap):
            hist.add(alt_sum(pair.alpha) - num_odd_parts(pair.beta), pair.beta.length)
    elif side == "Q":
        for pair in enumerate_Q(n, cap):
            hist.add(alt_sum(pair.mu), pair.nu.length)
    else:
        raise ValueError(f"side must be 'P' or 'Q', got {side!r}")
    return hist


def _check_pair(pair: PairP) -> tuple[PairQ | None, str | None, list]:
    """Forward-map one pair and run every per-pair check; returns (image, reason, trace)."""
    try:
        out, traces = lebesgue_forward(pair)
    except Exception as exc:  # report, never raise: violations are report content
        return None, f"forward map failed: {exc}", []
    trace_dicts = [step_trace_dict(t) for t in traces]

    reason = pair_q_violation(out.mu, out.nu)
    if reason:
        return out, f"image not in Q: {reason}", trace_dicts
    if out.mu.weight + out.nu.weight != pair.alpha.weight + pair.beta.weight:
        return out, "total weight not conserved", trace_dicts
    if out.nu.length != pair.beta.length:
        return out, "ell(nu) != ell(beta)", trace_dicts
    if alt_sum(out.mu) != alt_sum(pair.alpha) - num_odd_parts(pair.beta):
        return out, "alt_sum(mu) != alt_sum(alpha) - n_o(beta)", trace_dicts
    try:
        back, _ = lebesgue_inverse(out)
    except Exception as exc:
        return out, f"inverse map failed: {exc}", trace_dicts
    if back != pair:
        return out, "round trip does not return the input pair", trace_dicts
    return out, None, trace_dicts


def verify_bijection_up_to(N: int, cap: int | None = None) -> list[dict]:
    """Exhaustively certify the bijection for every total weight n <= N.

    For each n: every P-pair is mapped forward, checked for membership in Q,
    weight / a-degree / alternating-sum conservation, and round-tripped; the
    image is checked injective and equal to Q_n as a set.  Violations become
    report entries, never exceptions.
    """
    cap = _resolve_pair_cap(cap)
    if N > cap:
        raise ValueError(f"N={N} exceeds the pair enumeration cap ({cap})")
    reports = []
    for n in range(N + 1):
        pairs = enumerate_P(n, cap)
        qs = enumerate_Q(n, cap)
        failures = []
        images = []
        for pair in pairs:
            out, reason, trace_dicts = _check_pair(pair)
            if reason:
                failures.append(
                    {
                        "pair": {"alpha": list(pair.alpha), "beta": list(pair.beta)},
                        "reason": reason,
                        "trace": trace_dicts,
                    }
                )
            if out is not None:
                images.append(out)

        if len(set(images)) != len(images):
            failures.append(
                {"pair": None, "reason": "forward map is not injective", "trace": []}
            )
        if len(pairs) != len(qs):
            failures.append(
                {"pair": None, "reason": f"|P_{n}|={len(pairs)} != |Q_{n}|={len(qs)}", "trace": []}
            )
        if set(images) != set(qs):
            failures.append(
                {"pair": None, "reason": "image of P differs from Q", "trace": []}
            )
        reports.append(
            {"n": n, "checked": len(pairs), "passed": not failures, "failures": failures}
        )
    return reports
