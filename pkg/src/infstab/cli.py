"""Command-line frontend: ``infstab {check,witness,conjugate,stress,r2gap}``.

Exit codes: ``check`` returns 0 for stable, 1 for unstable; ``stress``
returns 1 when a trial breaks its declared rate; every error returns 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, TextIO, Union

from . import convexfn as cf
from . import fenchel, harness, r2gap, stability, witness
from .specio import ParseError, dump_spec, load_spec

EXIT_OK, EXIT_UNSTABLE, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class Check:
    path: str


@dataclass(frozen=True)
class Witness:
    path: str
    n_max: int
    orientation: Optional[int] = None


@dataclass(frozen=True)
class Conjugate:
    path: str
    out: Optional[str]
    extend: bool = False


@dataclass(frozen=True)
class Stress:
    path: str
    seed: int
    n_max: int
    families: Sequence[str]


@dataclass(frozen=True)
class R2Gap:
    n_max: int


Command = Union[Check, Witness, Conjugate, Stress, R2Gap]


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _families(text: str) -> List[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    known = {k.value for k in harness.PerturbKind}
    for s in names:
        if s not in known:
            raise argparse.ArgumentTypeError(f"unknown family {s!r}; choose from {sorted(known)}")
    return names


def _add_format_flags(parser: argparse.ArgumentParser, default) -> None:
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default=default,
                     help="emit JSON (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", default=default,
                     help="emit aligned text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infstab", description="Infimum-stability checks for convex functions on the line."
    )
    _add_format_flags(parser, "json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        # SUPPRESS keeps a subcommand from resetting a flag given before it
        _add_format_flags(p, argparse.SUPPRESS)
        return p

    p = add("check", help="stability verdict for a spec")
    p.add_argument("path")

    p = add("witness", help="destabilizing family for an unstable spec")
    p.add_argument("path")
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--orientation", type=int, choices=(1, -1), default=None)

    p = add("conjugate", help="write the conjugate spec")
    p.add_argument("path")
    p.add_argument("--out", default=None, help="output file (stdout if omitted)")
    p.add_argument("--extend", action="store_true", help="extend to the whole line by +inf first")

    p = add("stress", help="perturbation trials on a stable spec")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=_positive, default=2**20)
    p.add_argument(
        "--families",
        type=_families,
        default=[k.value for k in harness.PerturbKind],
        help="comma-separated subset of AdditiveShrink,BreakpointJitter,TailSteepen",
    )

    p = add("r2gap", help="min over K of the planar sequence")
    p.add_argument("--n-max", type=_positive, default=10)
    return parser


def to_command(ns: argparse.Namespace) -> Command:
    if ns.command == "check":
        return Check(ns.path)
    if ns.command == "witness":
        return Witness(ns.path, ns.n_max, ns.orientation)
    if ns.command == "conjugate":
        return Conjugate(ns.path, ns.out, ns.extend)
    if ns.command == "stress":
        return Stress(ns.path, ns.seed, ns.n_max, tuple(ns.families))
    return R2Gap(ns.n_max)


# -- rendering --------------------------------------------------------------


def _table(rows: List[dict], columns: Sequence[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _emit(report, fmt: str, out: TextIO, text_fn) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=False) + "\n")
    else:
        out.write(text_fn(report) + "\n")


def _check_text(r: dict) -> str:
    word = "stable" if r["stable"] else "unstable"
    return f"{word}  reason={r['reason']}  case={r['specialization']}"


def _witness_text(r: dict) -> str:
    head = (
        f"family={r['kind']} sign={r['orientation']:+d} base_inf={r['base_inf']} "
        f"declared_inf={r['declared_inf']} gap={r['declared_gap']} n_min={r['n_min']}\n"
        f"pointwise: {r['converged_points']}/{r['grid_size']} grid points certified"
    )
    return head + "\n" + _table(r["rows"], ("n", "inf", "settled"))


def _stress_text(r: dict) -> str:
    parts = []
    for t in r["trials"]:
        status = "ok" if t["ok"] else f"VIOLATED: {t['failure']}"
        parts.append(
            f"{t['kind']} seed={t['seed']} K={t['K']} settle={t['settle_index']} base_inf={t['base_inf']} {status}"
        )
        parts.append(_table(t["rows"], ("n", "inf", "gap", "settled")))
    return "\n".join(parts)


def _r2_text(r: dict) -> str:
    return _table(r["rows"], ("n", "min_K", "argmin_x", "f_n(0,0)", "f_n(1/2,0)"))


# -- commands ---------------------------------------------------------------


def _run_check(cmd: Check, fmt: str, out: TextIO) -> int:
    verdict = stability.check(load_spec(cmd.path))
    _emit(verdict.to_json(), fmt, out, _check_text)
    return EXIT_OK if verdict.stable else EXIT_UNSTABLE


def _run_witness(cmd: Witness, fmt: str, out: TextIO) -> int:
    spec = load_spec(cmd.path)
    fam = witness.generate(spec, orientation=cmd.orientation)
    sched = list(range(1, cmd.n_max + 1))
    gap = witness.inf_gap(fam, sched)
    grid = witness.default_grid(spec)
    pw = witness.verify_pointwise(fam, grid, witness.doubling_schedule(cmd.n_max))
    report = gap.to_json()
    report["orientation"] = fam.tilt_sign
    report["converged_points"] = sum(r["ok"] for r in pw.rows)
    report["grid_size"] = len(grid)
    report["ok"] = gap.ok and pw.ok
    _emit(report, fmt, out, _witness_text)
    return EXIT_OK if report["ok"] else EXIT_UNSTABLE


def _run_conjugate(cmd: Conjugate, fmt: str, out: TextIO) -> int:
    spec = load_spec(cmd.path)
    if cmd.extend:
        spec = cf.extend_to_line(spec)
    conj = fenchel.conjugate(spec)
    text = dump_spec(conj.spec, {"variable": conj.variable})
    if cmd.out is None:
        out.write(text)
    else:
        with open(cmd.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _run_stress(cmd: Stress, fmt: str, out: TextIO) -> int:
    spec = load_spec(cmd.path)
    sched = witness.doubling_schedule(cmd.n_max)
    trials = []
    for name in cmd.families:
        fam = harness.PerturbationFamily(harness.PerturbKind(name), cmd.seed, spec)
        trials.append(harness.run_convergence_trial(fam, sched, raise_on_failure=False).to_json())
    report = {"ok": all(t["ok"] for t in trials), "trials": trials}
    _emit(report, fmt, out, _stress_text)
    return EXIT_OK if report["ok"] else EXIT_UNSTABLE


def _run_r2gap(cmd: R2Gap, fmt: str, out: TextIO) -> int:
    _emit({"rows": r2gap.r2_table(cmd.n_max)}, fmt, out, _r2_text)
    return EXIT_OK


_RUNNERS = {
    Check: _run_check,
    Witness: _run_witness,
    Conjugate: _run_conjugate,
    Stress: _run_stress,
    R2Gap: _run_r2gap,
}

_EXPECTED_ERRORS = (
    OSError,
    ParseError,
    cf.ValidationError,
    cf.DomainNotR,
    cf.OutsideAmbientSet,
    stability.PreconditionViolated,
    witness.NotUnstable,
    witness.UnsupportedOrientation,
    witness.GridOutsideC,
)


def run(cmd: Command, fmt: str = "json", out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _RUNNERS[type(cmd)](cmd, fmt, out)
    except _EXPECTED_ERRORS as exc:
        err.write(f"infstab: error: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(to_command(ns), ns.fmt)


if __name__ == "__main__":
    sys.exit(main())
