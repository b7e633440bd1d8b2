"""Command-line front end.

Subcommands:

  validate   check the filtration laws on an instance file
  classify   classify the sequence in an instance file against its filtration
  demo       build a named example, classify it and its absolute sequence
  verify     run the theorem-evidence checks
  gen        write an instance file for any builder

Exit codes: 0 success (or confirmed), 1 a verify check reported VIOLATED,
2 input error.  All randomness flows from --seed.  The environment
variable LATTICE_LAB_TOL overrides the default exact-law tolerance.
Reports are valid JSON with --json, human-readable otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import harness
from .filtration import (
    build_dyadic,
    build_random_nested,
    build_truncation,
    validate,
)
from .jsonio import Instance, InstanceFormatError, dump_instance, load_instance
from .martingales import (
    NonContractiveError,
    abs_seq,
    check_lattice_closure,
    classify,
    haar_example,
    harmonic_tail_example,
    null_sequence,
    one_step_defects,
    pairing_example,
    scale_head,
)
from .spaces import DEFAULT_TOL, basis

DEMO_NAMES = ("haar", "pairing", "harmonic", "null", "scale-head")
GEN_BUILDERS = (
    "truncation",
    "pairing",
    "dyadic",
    "random-nested",
    "haar",
    "harmonic",
    "null",
    "scale-head",
)


def _default_tol() -> float:
    raw = os.environ.get("LATTICE_LAB_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        print(f"error: LATTICE_LAB_TOL={raw!r} is not a number", file=sys.stderr)
        raise SystemExit(2)


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_validate(args: argparse.Namespace) -> int:
    instance = load_instance(args.path)
    if instance.filtration is None:
        raise InstanceFormatError("instance file has no filtration to validate")
    report = validate(instance.filtration, args.contractive, args.tol)
    lines = []
    for check in report.checks:
        state = "pass" if check.passed else "FAIL"
        where = "" if check.witness is None else f" at {check.witness}"
        lines.append(f"[validate] {check.law}: {state} (worst {check.worst:.3e}{where})")
    lines.append(f"[validate] overall: {'pass' if report.passed else 'FAIL'}")
    _emit(report.to_dict(), args.json, lines)
    return 0 if report.passed else 1


def cmd_classify(args: argparse.Namespace) -> int:
    instance = load_instance(args.path)
    if instance.filtration is None or instance.sequence is None:
        raise InstanceFormatError(
            "classification needs both a filtration and a sequence in the file"
        )
    try:
        report = classify(
            instance.sequence,
            instance.filtration,
            tol=args.tol,
            eps=args.eps_x,
            window_fraction=args.window,
        )
    except (NonContractiveError, ValueError) as exc:
        raise InstanceFormatError(str(exc)) from exc
    d = report.to_dict()
    lines = [
        f"[classify] martingale: {report.is_martingale}",
        f"[classify] eventual witness: {report.e_witness}",
        f"[classify] tail verdict: {report.x_verdict.value}",
        f"[classify] sequence norm: {report.seq_norm:.6g}",
        f"[classify] defects: head {report.x_defects[0]:.3e}, "
        f"tail {report.x_defects[-1]:.3e}",
    ]
    _emit(d, args.json, lines)
    return 0


def _demo_payload(name: str, size: int | None, tol: float) -> tuple[dict, list[str]]:
    if name == "haar":
        levels = size or 3
        filt, seq = haar_example(levels)
        expected = (
            "the scaled-indicator sequence is a martingale, but its absolute "
            "sequence loses the one-step law at every index"
        )
    elif name == "pairing":
        pairs = size or 3
        filt, seq = pairing_example(pairs)
        expected = (
            "the alternating-pair sequence is a martingale, but its absolute "
            "sequence has no eventual witness (first one-step defect 1)"
        )
    elif name == "harmonic":
        n = size or 64
        filt, seq, _family = harmonic_tail_example(n)
        expected = (
            "the harmonic-tail sequence has no eventual witness yet its defect "
            "profile 1/n certifies it asymptotic"
        )
    elif name == "null":
        n = size or 64
        filt = build_truncation(n)
        seq = null_sequence(basis(filt.space, 1), n)
        expected = (
            "a sequence shrinking to zero is asymptotic for any contractive "
            "filtration without ever satisfying the one-step law exactly"
        )
    else:  # scale-head
        levels = size or 3
        filt, base = haar_example(levels)
        seq = scale_head(base, 2.0)
        expected = (
            "doubling only the first term breaks the martingale law but leaves "
            "an eventual witness at index 2"
        )

    closure = check_lattice_closure(seq, filt, tol)
    steps_abs = one_step_defects(abs_seq(seq), filt)
    payload = {
        "demo": name,
        "size": size,
        "expected": expected,
        "report": closure.to_dict(),
        "abs_one_step_defects": [float(v) for v in steps_abs],
    }
    base_rep, abs_rep = closure.base, closure.abs
    lines = [
        f"[demo:{name}] {expected}",
        f"[demo:{name}] A: martingale={base_rep.is_martingale} "
        f"witness={base_rep.e_witness} verdict={base_rep.x_verdict.value} "
        f"norm={base_rep.seq_norm:.6g}",
        f"[demo:{name}] |A|: martingale={abs_rep.is_martingale} "
        f"witness={abs_rep.e_witness} verdict={abs_rep.x_verdict.value} "
        f"first one-step defect={steps_abs[0]:.6g}",
    ]
    if name == "pairing":
        lines.append(
            f"[demo:{name}] index note: stage n keeps the first 2n coordinates; "
            "the all-averaging stage and the zero initial term of the raw "
            "construction are both omitted, so indices here start at 1"
        )
    return payload, lines


def cmd_demo(args: argparse.Namespace) -> int:
    payload, lines = _demo_payload(args.name, args.size, args.tol)
    _emit(payload, args.json, lines)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ids = harness.CHECK_IDS if args.id == "all" else (args.id,)
    results = []
    for check_id in ids:
        results.extend(harness.run_check(check_id, args.seed, args.trials))
    lines = []
    for r in results:
        lines.append(
            f"[verify:{r.check_id}] {r.status.value} "
            f"({json.dumps(r.descriptor, sort_keys=True)})"
        )
    violated = sum(r.status is harness.CheckStatus.VIOLATED for r in results)
    lines.append(
        f"[verify] {len(results)} results, {violated} violated "
        f"(seed={args.seed}, trials={args.trials})"
    )
    _emit({"results": [r.to_dict() for r in results]}, args.json, lines)
    return 1 if violated else 0


def _gen_instance(args: argparse.Namespace) -> Instance:
    builder = args.builder
    size = args.size
    if builder == "truncation":
        filt = build_truncation(size or 16)
        return Instance(filt.space, filt)
    if builder == "pairing":
        filt, seq = pairing_example(size or 3)
        return Instance(filt.space, filt, seq)
    if builder == "dyadic":
        filt = build_dyadic(size or 3)
        return Instance(filt.space, filt)
    if builder == "random-nested":
        dim = size or 16
        depth = args.depth or dim
        filt = build_random_nested(dim, depth, args.seed)
        return Instance(filt.space, filt)
    if builder == "haar":
        filt, seq = haar_example(size or 3)
        return Instance(filt.space, filt, seq)
    if builder == "harmonic":
        filt, seq, _ = harmonic_tail_example(size or 64)
        return Instance(filt.space, filt, seq)
    if builder == "null":
        filt = build_truncation(size or 64)
        return Instance(
            filt.space, filt, null_sequence(basis(filt.space, 1), filt.horizon)
        )
    # scale-head
    filt, base = haar_example(size or 3)
    return Instance(filt.space, filt, scale_head(base, args.factor))


def cmd_gen(args: argparse.Namespace) -> int:
    instance = _gen_instance(args)
    if args.out is None:
        print(json.dumps(instance.to_dict(), indent=2))
    else:
        dump_instance(instance, args.out)
        print(f"[gen] wrote {args.builder} instance to {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-lab",
        description=(
            "Classify martingale-like sequences on finite-dimensional "
            "normed lattices and check the structural claims about them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    tol_default = _default_tol()

    p = sub.add_parser("validate", help="check filtration laws on an instance file")
    p.add_argument("path")
    p.add_argument("--contractive", action="store_true", help="also require norm <= 1")
    p.add_argument("--tol", type=float, default=tol_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="classify the sequence in an instance file")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=tol_default)
    p.add_argument("--eps-x", type=float, default=None, dest="eps_x")
    p.add_argument("--window", type=float, default=0.25)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("demo", help="reproduce a named example construction")
    p.add_argument("name", choices=DEMO_NAMES)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--tol", type=float, default=tol_default)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("verify", help="run theorem-evidence checks")
    p.add_argument("id", choices=harness.CHECK_IDS + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write an instance file for a builder")
    p.add_argument("builder", choices=GEN_BUILDERS)
    p.add_argument("--size", type=int, default=None, help="primary size parameter")
    p.add_argument("--depth", type=int, default=None, help="random-nested depth")
    p.add_argument("--factor", type=float, default=2.0, help="scale-head factor")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
