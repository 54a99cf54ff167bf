"""Command-line entry point; every subcommand writes one JSON document.

Exit codes: 0 success, 1 a result violates the property being checked,
2 bad arguments or preconditions.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import election, majorana, slocc, statekit

COMMANDS = ("state", "lemma1", "degeneracy", "slocc-verdict", "ilo-verify", "ilo-search", "elect")
STATE_KINDS = ("ghz", "w", "wtilde")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wtilde", description=__doc__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--alpha2", type=float, default=0.5, help="|alpha|^2 of the resource alpha W + beta Wbar")
    parser.add_argument("--trials", type=int, default=10000)
    parser.add_argument("--restarts", type=int, default=200)
    parser.add_argument("--iters", type=int, default=4000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol", type=float, default=majorana.DEFAULT_TOL)
    parser.add_argument("--out", default=None, help="write JSON here instead of stdout")
    parser.add_argument("--source", choices=STATE_KINDS, default=None)
    parser.add_argument("--target", choices=STATE_KINDS, default=None)
    parser.add_argument("--in", dest="in_path", default=None, help="state JSON file (state/degeneracy)")
    return parser


def _named_state(kind: str, n: int, alpha2: float) -> statekit.PureState:
    if kind == "ghz":
        return statekit.ghz_state(n)
    if kind == "w":
        return statekit.w_state(n)
    return statekit.wtilde_state(n, math.sqrt(alpha2), math.sqrt(1.0 - alpha2))


def _check_args(args) -> None:
    if not 0.0 <= args.alpha2 <= 1.0:
        raise UsageError(f"--alpha2 must lie in [0, 1], got {args.alpha2}")
    if args.trials < 1 or args.restarts < 1 or args.iters < 1:
        raise UsageError("--trials, --restarts and --iters must be positive")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")


def _params(args, *names) -> dict:
    return {name: getattr(args, name) for name in names}


def _cmd_state(args):
    if args.in_path:
        state = statekit.load_state(args.in_path)
        doc = {"source": "file", **state.to_json()}
    else:
        kind = args.source or "wtilde"
        state = _named_state(kind, args.n, args.alpha2)
        doc = {"source": kind, "alpha2": args.alpha2, **state.to_json()}
    doc["symmetric"] = statekit.is_symmetric(state)
    return doc, True


def _cmd_lemma1(args):
    report = majorana.verify_lemma1(args.n)
    ok = report.passed()
    print(
        f"lemma1 n={args.n}: max |direct - closed form| = {report.max_abs_err:.3e}, "
        f"fidelity = {report.fidelity_to_wtilde!r}",
        file=sys.stderr,
    )
    return report.to_json(), ok


def _points_json(points):
    return [[[p.a0.real, p.a0.imag], [p.a1.real, p.a1.imag]] for p in points]


def _cmd_degeneracy(args):
    if args.in_path:
        state, kind = statekit.load_state(args.in_path), "file"
    else:
        kind = args.source or "wtilde"
        state = _named_state(kind, args.n, args.alpha2)
    points = majorana.majorana_extract(state, args.tol)
    config = majorana.degeneracy_config(points, args.tol)
    doc = {"n": state.n_qubits, "source": kind, "alpha2": args.alpha2, "tol": args.tol,
           "points": _points_json(points), "degeneracy_config": list(config)}
    print(f"degeneracy {kind} n={state.n_qubits}: {config}", file=sys.stderr)
    return doc, True


def _cmd_slocc_verdict(args):
    a_kind, b_kind = args.source or "w", args.target or "wtilde"
    a = _named_state(a_kind, args.n, args.alpha2)
    b = _named_state(b_kind, args.n, args.alpha2)
    verdict = slocc.degeneracy_verdict(a, b, args.tol)
    doc = {"n": args.n, "source": a_kind, "target": b_kind, "alpha2": args.alpha2, "tol": args.tol,
           **verdict.to_json()}
    print(
        f"slocc-verdict n={args.n}: {verdict.config_a} vs {verdict.config_b}, "
        f"inequivalent_proven={verdict.inequivalent_proven}",
        file=sys.stderr,
    )
    return doc, True


def _cmd_ilo_verify(args):
    builtins = {3: slocc.builtin_m3, 4: slocc.builtin_m4}
    if args.n not in builtins:
        raise UsageError("ilo-verify has built-in operators for n = 3 and n = 4 only")
    m = builtins[args.n]()
    image = slocc.apply_symmetric_ilo(m, statekit.ghz_state(args.n))
    fid = statekit.fidelity(image, statekit.wtilde_state(args.n))
    u = m.entries @ m.entries.conj().T
    unitarity_err = float(abs(u - [[1, 0], [0, 1]]).max())
    doc = {"n": args.n, "operator": m.to_json(), "det": [m.det.real, m.det.imag],
           "fidelity": fid, "unitarity_err": unitarity_err}
    print(f"ilo-verify n={args.n}: fidelity = {fid!r}", file=sys.stderr)
    return doc, fid >= 1 - 1e-9


def _cmd_ilo_search(args):
    src_kind, tgt_kind = args.source or "ghz", args.target or "wtilde"
    source = _named_state(src_kind, args.n, 0.5)
    target = _named_state(tgt_kind, args.n, 0.5)
    result = slocc.search_symmetric_ilo(args.n, source, target, args.restarts, args.iters, args.seed)
    doc = {**result.to_json(), "source": src_kind, "target": tgt_kind, "restarts": args.restarts,
           "iters": args.iters}
    verdict = "found" if result.found else "no ILO found within budget"
    print(f"ilo-search n={args.n}: {verdict} (best infidelity {result.best_infidelity:.3e})", file=sys.stderr)
    return doc, True


def _cmd_elect(args):
    stats = election.run_trials_alpha2(args.n, args.alpha2, args.trials, args.seed)
    print(f"elect n={args.n}: {stats.trials} trials, {stats.failures} failures", file=sys.stderr)
    return stats.to_json(), stats.failures == 0


_HANDLERS = {
    "state": _cmd_state,
    "lemma1": _cmd_lemma1,
    "degeneracy": _cmd_degeneracy,
    "slocc-verdict": _cmd_slocc_verdict,
    "ilo-verify": _cmd_ilo_verify,
    "ilo-search": _cmd_ilo_search,
    "elect": _cmd_elect,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_args(args)
        doc, ok = _HANDLERS[args.command](args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"wtilde {args.command}: {exc}", file=sys.stderr)
        return 2
    except majorana.ExtractionError as exc:
        print(f"wtilde {args.command}: {exc}", file=sys.stderr)
        return 1

    text = json.dumps(doc, sort_keys=False)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
