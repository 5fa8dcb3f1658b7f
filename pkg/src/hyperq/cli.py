"""Command-line front end for batch use of the toolkit.

Subcommands
-----------
classify   regime/phase verdict for one probability triple (JSON).
interfere  parameter sweep of an interference law (CSV).
transform  basis change plus Born-rule decomposition of a state file (JSON).
verify     unitarity / positive-cone / stochasticity report for a matrix
           file (JSON).
witness    seeded search for a non-transitivity witness (JSON).

Numbers cross the boundary in fixed machine formats: split-complex scalars
as ``[x, y]``, vectors as ``[[x1,y1],[x2,y2]]``, matrices as row-major
nested arrays of the same pairs.  Data goes to standard output, diagnostics
to standard error.

Exit codes: 0 success, 1 usage or parse failure, 2 precondition violation,
3 negative semantic verdict (not decomposable, verification failed),
4 search exhausted.  JSON is still emitted on exit 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NamedTuple, Sequence

from .algebra import EPS_ALG, EPS_MEM
from .born import pipeline_probabilities
from .errors import PreconditionError
from .interference import classify, hyp_law, trig_law
from .space import (
    Mat2,
    Vec2,
    doubly_stochastic_residual,
    orthonormality_residual,
    prob_matrix,
)
from .witness import search_non_transitivity

__all__ = ["SweepRow", "sweep_rows", "build_parser", "main"]


class SweepRow(NamedTuple):
    """One grid point of an interference sweep."""

    theta: float
    p_prime: float
    regime: str


def sweep_rows(
    law: str,
    p1: float,
    p2: float,
    theta_min: float,
    theta_max: float,
    steps: int,
    sign: int = 1,
) -> list[SweepRow]:
    """Evaluate one law on a uniform ``steps``-point grid over the phase."""
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps!r}")
    if not theta_min < theta_max:
        raise ValueError("theta-min must be strictly below theta-max")
    span = theta_max - theta_min
    rows = []
    for i in range(steps):
        theta = theta_min + span * i / (steps - 1)
        if law == "trig":
            value = trig_law(p1, p2, theta)
        else:
            value = hyp_law(p1, p2, theta, sign)
        rows.append(SweepRow(theta, value, law))
    return rows


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(obj: object) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load_json(path: str) -> object:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _run_classify(args: argparse.Namespace) -> int:
    verdict = classify(args.pprime, args.p1, args.p2)
    _emit(verdict.to_json_dict())
    return 0


def _run_interfere(args: argparse.Namespace) -> int:
    sign = 1 if args.sign == "+" else -1
    rows = sweep_rows(
        args.law, args.p1, args.p2, args.theta_min, args.theta_max, args.steps, sign
    )
    print("theta,p_prime")
    for row in rows:
        print(f"{row.theta!r},{row.p_prime!r}")
    return 0


def _run_transform(args: argparse.Namespace) -> int:
    beta = Vec2.from_list(_load_json(args.state))
    basis = Mat2.from_list(_load_json(args.matrix))
    decomposition = pipeline_probabilities(beta, basis)
    _emit(decomposition.to_json_dict())
    return 0 if decomposition.decomposable else 3


def _run_verify(args: argparse.Namespace) -> int:
    basis = Mat2.from_list(_load_json(args.matrix))
    residual = orthonormality_residual(basis)
    stochastic_residual = doubly_stochastic_residual(prob_matrix(basis))
    unitary = residual <= EPS_ALG
    in_cone = all(entry.in_positive_cone(EPS_MEM) for entry in basis.entries())
    stochastic = stochastic_residual <= EPS_ALG
    _emit(
        {
            "unitary": unitary,
            "entries_in_g_plus": in_cone,
            "doubly_stochastic": stochastic,
            "orthonormality_residual": residual,
            "stochasticity_residual": stochastic_residual,
        }
    )
    return 0 if unitary and in_cone and stochastic else 3


def _run_witness(args: argparse.Namespace) -> int:
    witness = search_non_transitivity(args.seed, args.max_iter)
    if witness is None:
        _emit({"found": False})
        return 4
    _emit(witness.to_json_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperq", description="split-complex quantum numerics")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="classify one probability triple")
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--pprime", type=float, required=True)
    p.set_defaults(run=_run_classify)

    p = sub.add_parser("interfere", help="sweep an interference law over theta")
    p.add_argument("--law", choices=("trig", "hyp"), required=True)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--theta-min", type=float, required=True)
    p.add_argument("--theta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.set_defaults(run=_run_interfere)

    p = sub.add_parser("transform", help="change basis and decompose a state")
    p.add_argument("--state", required=True, help="JSON file with [[x1,y1],[x2,y2]]")
    p.add_argument("--matrix", required=True, help="JSON file with a 2x2 matrix")
    p.set_defaults(run=_run_transform)

    p = sub.add_parser("verify", help="check a matrix file")
    p.add_argument("--matrix", required=True, help="JSON file with a 2x2 matrix")
    p.set_defaults(run=_run_verify)

    p = sub.add_parser("witness", help="search for a non-transitivity witness")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-iter", type=int, default=10000)
    p.set_defaults(run=_run_witness)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
