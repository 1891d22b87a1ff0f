"""Command-line front end.

Exit codes: 0 ok, 2 bad input, 3 precondition not met, 1 internal property violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import abacus, extremal, hooks, involution, oracle, partition, runner
from .errors import PreconditionError, PropertyViolation, ValidationError


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValidationError(f"--{name.replace('_', '-')} is required for {args.command}")
    if args.d is not None:
        runner.validate_de(args.d, args.e)
    elif args.e is not None and args.e < 2:
        raise ValidationError(f"e must be at least 2, got {args.e}")


def _trace_json(trace) -> dict:
    return {
        "states": [{"S": str(S), "T": list(T)} for S, T in trace.states],
        "emitted": list(trace.emitted),
        "final_T": str(trace.final_T),
        "result": str(trace.result),
    }


def _render_trace(trace, e: int) -> str:
    blocks = []
    for S, T in trace.states:
        blocks.append(abacus.render_abacus(S.with_moves(add=T), e, marks=T))
    blocks.append(abacus.render_abacus(trace.final_T, e))
    return "\n\n".join(blocks)


def cmd_mullineux(args, lam):
    _need(args, "e")
    if args.trace or args.render:
        trace = involution.ama_trace(lam, args.e, args.d)
        prime = trace.result
    else:
        trace, prime = None, involution.ama(lam, args.e)
    out = prime if args.prime else partition.conjugate(prime)
    if args.trace:
        return _dumps(_trace_json(trace))
    text = _dumps({"input": str(lam), "e": args.e, "prime": args.prime, "output": str(out)}) if args.json else str(out)
    if args.render:
        text = _render_trace(trace, args.e) + "\n\n" + text
    return text


def cmd_core(args, lam):
    _need(args, "e")
    core, weight = abacus.e_core_weight(abacus.beta_set(lam), args.e)
    return _dumps({"core": str(core), "weight": weight})


def cmd_classify(args, lam):
    _need(args, "e", "d")
    return _dumps(hooks.classify_partition(lam, args.d, args.e).to_dict())


def cmd_runner_matrix(args, lam):
    _need(args, "e", "d")
    R = runner.runner_matrix_of_partition(lam, args.d, args.e)
    return R.to_json() if args.json else str(R)


def cmd_j(args, lam):
    _need(args, "e")
    out = partition.j_map(lam, args.e)
    return _dumps({"input": str(lam), "e": args.e, "output": str(out)}) if args.json else str(out)


def _extremal(fn):
    def run(args, lam):
        _need(args, "e", "d")
        out = fn(lam, args.d, args.e)
        text = _dumps({"input": str(lam), "output": str(out)}) if args.json else str(out)
        if args.render:
            text = abacus.render_abacus(abacus.beta_set(out), args.e) + "\n\n" + text
        return text
    return run


def cmd_render(args, lam):
    _need(args, "e")
    return abacus.render_abacus(abacus.beta_set(lam), args.e)


def cmd_family(args):
    _need(args, "e", "d", "core", "matrix")
    gamma = partition.parse_partition(args.core)
    R = runner.RunnerMatrix.from_json(args.matrix, args.d, args.e)
    return _dumps(extremal.min_weight_and_family(gamma, R).to_dict())


def _parse_pairs(text: str):
    pairs = []
    for item in text.split(","):
        d, sep, e = item.partition(":")
        try:
            pairs.append((int(d), int(e)))
        except ValueError:
            raise ValidationError(f"bad pair {item!r}, expected d:e") from None
        if not sep:
            raise ValidationError(f"bad pair {item!r}, expected d:e")
    return tuple(pairs)


def cmd_verify(args):
    kwargs = {"parallel": True}
    if args.max_n is not None:
        if args.max_n < 0:
            raise ValidationError("--max-n must be non-negative")
        kwargs["max_n"] = args.max_n
    if args.pairs:
        pairs = _parse_pairs(args.pairs)
        kwargs["d_pairs"] = pairs
        kwargs["e_values"] = tuple(sorted({e for _, e in pairs}))
    report = oracle.run_sweep(oracle.SweepConfig(**kwargs))
    return report.to_jsonl().rstrip("\n")


PER_PARTITION = {
    "mullineux": cmd_mullineux,
    "core": cmd_core,
    "classify": cmd_classify,
    "runner-matrix": cmd_runner_matrix,
    "j": cmd_j,
    "maximize": _extremal(extremal.maximize),
    "minimize": _extremal(extremal.minimize),
    "render": cmd_render,
}
STANDALONE = {"family": cmd_family, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--render", action="store_true", help="add ASCII abaci")
    common.add_argument("--trace", action="store_true", help="dump the algorithm trace as JSON")
    common.add_argument("--prime", action="store_true", help="print the conjugate m_e(lambda)'")

    parser = argparse.ArgumentParser(prog="abacus-lab", description="James abacus toolkit for partitions.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in PER_PARTITION:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("partitions", nargs="*", help="e.g. 6,4,2 or 1^3; read stdin lines when omitted")
    p = sub.add_parser("family", parents=[common])
    p.add_argument("--core", required=False)
    p.add_argument("--matrix", required=False)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--pairs")
    return parser


def dispatch(argv=None, stdin=None) -> tuple[int, str, str]:
    """Run one command; return (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if args.command in STANDALONE:
            out = STANDALONE[args.command](args)
        else:
            texts = args.partitions
            if not texts:
                texts = [line for line in (stdin or sys.stdin).read().splitlines() if line.strip()]
            fn = PER_PARTITION[args.command]
            out = "\n".join(fn(args, partition.parse_partition(t)) for t in texts)
    except ValidationError as exc:
        return 2, "", f"error: {exc}"
    except PreconditionError as exc:
        return 3, "", f"precondition failed: {exc}"
    except PropertyViolation as exc:
        return 1, "", f"property violation: {exc.prop} {_dumps(exc.witness)}"
    return 0, out, ""


def main(argv=None) -> int:
    code, out, err = dispatch(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
