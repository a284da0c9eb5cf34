"""Command-line surface: trace the bijection, invert it, enumerate, verify.

Exit codes: 0 success / verified, 1 verification failure or internal
consistency violation, 2 invalid input.  User-supplied partitions are parsed
strictly: parts must already be positive and non-increasing (no silent
re-sorting); the empty string is the empty partition.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bijection import (
    BijectionTriple,
    ConsistencyError,
    PairP,
    PairQ,
    StepTrace,
    lebesgue_forward,
    lebesgue_inverse,
    pair_p_violation,
    pair_q_violation,
    step_trace_dict,
)
from .enumeration import (
    enumerate_P,
    enumerate_Q,
    pair_cap,
    refinement_histogram,
    verify_bijection_up_to,
)
from .partitions import Partition, conjugate
from .qseries import DEFAULT_ORDER_CAP, IDENTITY_NAMES, verify_identity


class InputError(ValueError):
    """Bad user input; reported on stderr with exit code 2."""


def parse_partition(text: str, name: str) -> Partition:
    """Strict parse of "6,5,3,1"; "" is empty; rejects non-canonical input."""
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            x = int(tok)
        except ValueError:
            raise InputError(f"{name}: {tok!r} is not an integer") from None
        if x < 1:
            raise InputError(f"{name}: parts must be positive, got {x}")
        parts.append(x)
    for prev, cur in zip(parts, parts[1:]):
        if cur > prev:
            raise InputError(
                f"{name}: parts must be non-increasing, got {text!r}"
            )
    return Partition(tuple(parts))


P_LABELS = ("alpha", "beta", "gamma")
Q_LABELS = ("mu", "lambda", "nu")


def render_triple(t: BijectionTriple, labels: tuple[str, str, str] = P_LABELS) -> list[str]:
    """ASCII Young diagrams: top component above, left beside the middle's conjugate."""
    left_name, mid_name, top_name = labels
    lines = []
    lines.append(f"{top_name}: {t.gamma or '(empty)'}")
    for part in t.gamma:
        lines.append("  " + "#" * part)
    bc = conjugate(t.beta)
    lines.append(f"{left_name}: {t.alpha or '(empty)'} | {mid_name}': {bc or '(empty)'}")
    width = t.alpha[0] if t.alpha else 0
    for i in range(max(t.alpha.length, bc.length)):
        left = "#" * t.alpha[i] if i < t.alpha.length else ""
        right = "#" * bc[i] if i < bc.length else ""
        lines.append("  " + left.ljust(width) + " | " + right)
    return lines


def _trace_line(i: int, tr: StepTrace) -> str:
    b, a = tr.before, tr.after
    return (
        f"step {i} [case {tr.case}] alpha={b.alpha} beta={b.beta} gamma={b.gamma}"
        f" -> mu={a.alpha} lambda={a.beta} nu={a.gamma}"
        f" (weight={tr.conserved_weight}, stat={tr.conserved_stat})"
    )


def _print_json(obj: dict) -> None:
    print(json.dumps(obj))


def cmd_trace(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha, "alpha")
    beta = parse_partition(args.beta, "beta")
    reason = pair_p_violation(alpha, beta)
    if reason:
        raise InputError(reason)
    out, traces = lebesgue_forward(PairP(alpha, beta))

    if args.format == "json":
        _print_json(
            {
                "input": {"alpha": list(alpha), "beta": list(beta)},
                "steps": [step_trace_dict(tr) for tr in traces],
                "output": {"mu": list(out.mu), "nu": list(out.nu)},
            }
        )
        return 0
    for i, tr in enumerate(traces, 1):
        if args.format == "ascii":
            print(f"step {i} [case {tr.case}]  weight={tr.conserved_weight}  stat={tr.conserved_stat}")
            for line in render_triple(tr.before):
                print(line)
        else:
            print(_trace_line(i, tr))
    if args.format == "ascii" and traces:
        print("final")
        for line in render_triple(traces[-1].after, Q_LABELS):
            print(line)
    print(f"result: mu={out.mu} nu={out.nu} ({len(traces)} steps)")
    return 0


def cmd_invert(args: argparse.Namespace) -> int:
    mu = parse_partition(args.mu, "mu")
    nu = parse_partition(args.nu, "nu")
    reason = pair_q_violation(mu, nu)
    if reason:
        raise InputError(reason)
    out, traces = lebesgue_inverse(PairQ(mu, nu))

    if args.format == "json":
        _print_json(
            {
                "input": {"mu": list(mu), "nu": list(nu)},
                "steps": [step_trace_dict(tr) for tr in traces],
                "output": {"alpha": list(out.alpha), "beta": list(out.beta)},
            }
        )
        return 0
    for i, tr in enumerate(traces, 1):
        if args.format == "ascii":
            print(f"step {i} [case {tr.case}]  weight={tr.conserved_weight}  stat={tr.conserved_stat}")
            for line in render_triple(tr.after, Q_LABELS):  # the state being undone
                print(line)
        else:
            b, a = tr.after, tr.before  # inverse runs image -> preimage
            print(
                f"step {i} [case {tr.case}] mu={b.alpha} lambda={b.beta} nu={b.gamma}"
                f" -> alpha={a.alpha} beta={a.beta} gamma={a.gamma}"
                f" (weight={tr.conserved_weight}, stat={tr.conserved_stat})"
            )
    if args.format == "ascii" and traces:
        print("final")
        for line in render_triple(traces[-1].before):
            print(line)
    print(f"result: alpha={out.alpha} beta={out.beta} ({len(traces)} steps)")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if n < 0:
        raise InputError("--n must be non-negative")
    cap = pair_cap()
    if n > cap:
        raise InputError(
            f"n={n} exceeds the enumeration cap ({cap}); set LEBESGUE_MAX_N to override"
        )

    if args.histogram:
        hist = refinement_histogram(args.side, n)
        if args.format == "json":
            _print_json(
                {
                    "n": n,
                    "side": args.side,
                    "entries": [
                        {"k": k, "j": j, "count": c}
                        for (k, j), c in sorted(hist.entries.items())
                    ],
                    "total": hist.total,
                }
            )
        else:
            print("n,k,j,count")
            for row in hist.csv_rows(n):
                print(row)
        return 0

    if args.side == "P":
        pairs = enumerate_P(n)
        rows = [(p.alpha, p.beta) for p in pairs]
        names = ("alpha", "beta")
    else:
        pairs_q = enumerate_Q(n)
        rows = [(p.mu, p.nu) for p in pairs_q]
        names = ("mu", "nu")
    if args.format == "json":
        _print_json(
            {
                "n": n,
                "side": args.side,
                "pairs": [{names[0]: list(x), names[1]: list(y)} for x, y in rows],
            }
        )
    else:
        for x, y in rows:
            print(f"{names[0]}={x} {names[1]}={y}")
        print(f"{len(rows)} pairs")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = verify_identity(args.identity, args.order, args.L)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if report.equal:
        suffix = f" (L={report.L})" if report.L is not None else ""
        print(f"identity {report.name} verified to order {report.order}{suffix}")
        return 0
    print(f"identity {report.name} FAILED at {report.difference_text()}")
    return 1


def _random_distinct(rng: random.Random, max_part: int) -> Partition:
    parts = tuple(x for x in range(max_part, 0, -1) if rng.random() < 0.5)
    return Partition(parts)


def _spot_checks(samples: int, seed: int | None) -> int:
    """Randomized round trips on pairs beyond the exhaustive range."""
    rng = random.Random(seed)
    for _ in range(samples):
        alpha = _random_distinct(rng, rng.randint(1, 40))
        if not alpha:
            alpha = Partition((1,))
        beta_pool = list(range(1, alpha.length + 1))
        beta = Partition(tuple(x for x in reversed(beta_pool) if rng.random() < 0.5))
        pair = PairP(alpha, beta)
        out, _ = lebesgue_forward(pair)
        back, _ = lebesgue_inverse(out)
        if back != pair:
            print(f"spot check FAILED: alpha={alpha} beta={beta}")
            return 1
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise InputError("--max-n must be non-negative")
    cap = pair_cap()
    if args.max_n > cap:
        raise InputError(
            f"--max-n {args.max_n} exceeds the enumeration cap ({cap}); "
            "set LEBESGUE_MAX_N to override"
        )
    reports = verify_bijection_up_to(args.max_n)
    if args.format == "json":
        _print_json({"max_n": args.max_n, "reports": reports})
        return 0 if all(r["passed"] for r in reports) else 1

    failed = False
    total = 0
    for r in reports:
        total += r["checked"]
        status = "ok" if r["passed"] else "FAILED"
        print(f"n={r['n']:3d}  pairs={r['checked']:6d}  {status}")
        for f in r["failures"]:
            failed = True
            print(f"  failure: {f['reason']}  pair={f['pair']}")
    if failed:
        return 1
    if args.samples:
        if _spot_checks(args.samples, args.seed):
            return 1
        print(f"{args.samples} randomized spot checks passed (seed={args.seed})")
    print(f"checked {total} pairs across n<={args.max_n}: all passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lebesgue",
        description="Iterated bijection and exact q-series checks for the Lebesgue identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="run the forward bijection step by step")
    p.add_argument("--alpha", required=True, help='comma-separated parts, "" for empty')
    p.add_argument("--beta", required=True, help='comma-separated parts, "" for empty')
    p.add_argument("--format", choices=("text", "json", "ascii"), default="text")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("invert", help="recover the P-pair from a Q-pair")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--format", choices=("text", "json", "ascii"), default="text")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("enumerate", help="list P_n or Q_n, or emit its histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--side", choices=("P", "Q"), required=True)
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare both sides of an identity coefficientwise")
    p.add_argument("--identity", choices=IDENTITY_NAMES, required=True)
    p.add_argument("--order", type=int, required=True,
                   help=f"truncation order (cap {DEFAULT_ORDER_CAP})")
    p.add_argument("--L", type=int, default=None, help="finite-form parameter (rowell)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="exhaustively certify the bijection up to a weight")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--samples", type=int, default=0,
                   help="extra randomized round-trip spot checks")
    p.add_argument("--seed", type=int, default=None, help="seed for --samples")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
