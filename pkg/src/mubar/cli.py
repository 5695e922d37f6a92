"""``mubar`` command line: compute, op, verify.

Exit codes:
    0  success
    1  verify found a failing check
    3  input could not be parsed (link file, index, flag values)
    4  a search budget or size cap was exceeded
    5  an internal invariant check failed
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .diagrams import DiagramError, PDCode, closure, linking_number, reverse_component
from .invariants import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    InvariantViolation,
    check_budget,
    format_index,
    mu_table,
    mubar,
    parse_index,
)
from .linkfile import LinkFileError, component_count, print_link, read_link
from .longitudes import peripheral_data, stabilization_check
from .obstructions import ObstructionReport
from .operators import (
    DoublingSpec,
    SizeBudgetExceeded,
    bing_double,
    braid_commutator_link,
    iterated_bing_double,
    stack,
    stack_power,
    twisted_whitehead,
)
from .words import BraidWord, braid_commutator

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 3, 4, 5


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    inputs: list[str] = field(default_factory=list)
    max_len: int = 4
    budget: int = DEFAULT_BUDGET
    indices: list[tuple[int, ...]] = field(default_factory=list)
    pipeline: str | None = None
    times: int = 1
    twists: int = 0
    target: int | None = None
    clasp: int = 1
    output: str | None = None
    orientation: str | None = None

    def __post_init__(self):
        if self.max_len < 2:
            raise UsageError("--max-len must be >= 2")
        if self.budget <= 0:
            raise UsageError("--budget must be positive")


def apply_orientation(link, spec: str | None):
    """``spec`` is one character per component: ``+`` keep, ``-`` reverse."""
    if not spec:
        return link
    m = component_count(link)
    if len(spec) != m or set(spec) - {"+", "-"}:
        raise UsageError(f"--orientation needs {m} characters from '+-', got {spec!r}")
    if "-" not in spec:
        return link
    pd = closure(link) if isinstance(link, BraidWord) else link
    for i, ch in enumerate(spec, 1):
        if ch == "-":
            pd = reverse_component(pd, i)
    return pd


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(cfg: RunConfig) -> int:
    if len(cfg.inputs) != 1:
        raise UsageError("compute takes exactly one link file")
    link = apply_orientation(read_link(cfg.inputs[0]), cfg.orientation)
    m = component_count(link)
    report: dict = {"input": cfg.inputs[0], "type": "braid" if isinstance(link, BraidWord) else "pd", "m": m}
    lines = []
    if cfg.indices:
        for I in cfg.indices:
            if max(I) > m:
                raise UsageError(f"index {format_index(I)} refers to a component > {m}")
        q = max(len(I) for I in cfg.indices)
        P = peripheral_data(link, q)
        cache: dict = {}
        records = []
        for I in cfg.indices:
            e = mubar(P, I, cache)
            records.append({"I": format_index(I), "mu": e.mu, "delta": e.delta, "mubar": e.mubar})
            lines.append(f"mu({format_index(I)}) = {e.mu}   delta = {e.delta}   mu-bar = {e.mubar}")
        report["queries"] = records
    else:
        check_budget(m, range(2, cfg.max_len + 1), cfg.budget)
        P = peripheral_data(link, cfg.max_len)
        if isinstance(link, PDCode) and not stabilization_check(link, cfg.max_len):
            raise InvariantViolation("Wirtinger iteration did not stabilise")
        table = mu_table(P, cfg.max_len, cfg.budget)
        obs = ObstructionReport.from_first(table.first)
        report["linking_numbers"] = {
            f"{i}{j}" if m < 10 else f"{i},{j}": linking_number(link, i, j)
            for i in range(1, m + 1) for j in range(i + 1, m + 1)
        }
        report["table"] = table.to_json()
        report["obstructions"] = obs.to_json()
        lines.append(f"{m} components, mu up to length {cfg.max_len}")
        for k in range(2, cfg.max_len + 1):
            nz = {I: e for I, e in table.of_length(k).items() if e.mu}
            shown = ", ".join(f"{format_index(I)}:{e.mu}" + (f" (mod {e.delta})" if e.delta else "")
                              for I, e in list(nz.items())[:8])
            more = f" ... ({len(nz)} nonzero)" if len(nz) > 8 else ""
            lines.append(f"  length {k}: " + (shown + more if nz else "all zero"))
        lines.append(f"first nonvanishing: {table.first}")
        lines.extend(f"  {n}" for n in obs.notes)
    report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    print("\n".join(lines))
    if cfg.output:
        Path(cfg.output).write_text(json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _braids(paths: list[str]) -> list[BraidWord]:
    links = [read_link(p) for p in paths]
    if not all(isinstance(b, BraidWord) for b in links):
        raise UsageError("this operator needs braid inputs")
    return links


def cmd_operator(cfg: RunConfig) -> int:
    verb = cfg.pipeline
    if verb == "bing":
        if len(cfg.inputs) != 1:
            raise UsageError("bing takes one link file")
        link = apply_orientation(read_link(cfg.inputs[0]), cfg.orientation)
        if cfg.times > 1:
            if cfg.target is not None:
                raise UsageError("--times > 1 doubles every component; drop --target")
            out = iterated_bing_double(link, cfg.times)
        else:
            out = bing_double(link, DoublingSpec(cfg.target, cfg.clasp, cfg.twists))
    elif verb == "whitehead":
        out = twisted_whitehead(cfg.twists, cfg.clasp)
    elif verb == "stack":
        bs = _braids(cfg.inputs)
        if not bs:
            raise UsageError("stack needs at least one braid file")
        out = bs[0]
        for b in bs[1:]:
            out = stack(out, b)
        if cfg.times != 1:
            out = stack_power(out, cfg.times)
    elif verb == "commutator":
        if not cfg.inputs:
            out = braid_commutator_link()
        else:
            bs = _braids(cfg.inputs)
            if len(bs) != 2:
                raise UsageError("commutator takes zero or two braid files")
            out = braid_commutator(*bs)
    else:
        raise UsageError(f"unknown operator {verb!r}")
    _emit(print_link(out), cfg.output)
    return EXIT_OK


def cmd_verify(only: list[str] | None) -> int:
    from .checks import run_checks

    outcomes = run_checks(only)
    width = max(len(o.name) for o in outcomes)
    for o in outcomes:
        print(f"{o.status:5}  {o.name:<{width}}  {o.seconds:7.2f}s  {o.detail}")
        if o.xfail:
            print(f"{'':5}  {'':<{width}}  known: {o.xfail}")
    bad = [o for o in outcomes if not o.ok and not o.xfail]
    print(f"{len(outcomes) - len(bad)}/{len(outcomes)} ok" + (f"; failed: {', '.join(o.name for o in bad)}" if bad else ""))
    return EXIT_VERIFY if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mubar", description="Milnor mu-bar invariants of links.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="mu, Delta and mu-bar of a link file")
    c.add_argument("input")
    c.add_argument("--max-len", type=int, default=4, help="exhaustive table up to this length (default 4)")
    c.add_argument("--index", action="append", default=[], help="only these index sequences, e.g. 313323 or 3,1,3")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on coefficient extractions")
    c.add_argument("--orientation", help="one of + or - per component; - reverses it")
    c.add_argument("--output", help="write the JSON report here")

    o = sub.add_parser("op", help="apply an operator and write a link file")
    o.add_argument("operands", nargs="+", metavar="VERB [FILE ...]",
                   help="bing FILE | whitehead | stack FILE... | commutator [FILE FILE]")
    o.add_argument("--times", type=int, default=1, help="bing: iterate; stack: power")
    o.add_argument("--twists", "-t", type=int, default=0, help="full twists (whitehead, bing)")
    o.add_argument("--target", type=int, help="bing: double only this component")
    o.add_argument("--clasp", type=int, choices=[1, -1], default=1)
    o.add_argument("--orientation")
    o.add_argument("--output")

    v = sub.add_parser("verify", help="run the golden regression checks")
    v.add_argument("--only", action="append", help="run checks whose name contains this")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # "op bing --times 2 FILE": operands after options arrive as leftovers
    if args.command == "op" and extra and not any(x.startswith("-") for x in extra):
        args.operands += extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        if args.command == "verify":
            return cmd_verify(args.only)
        if args.command == "compute":
            cfg = RunConfig([args.input], args.max_len, args.budget,
                            [parse_index(s) for s in args.index], output=args.output,
                            orientation=args.orientation)
            return cmd_compute(cfg)
        verb, *inputs = args.operands
        cfg = RunConfig(inputs, pipeline=verb, times=args.times, twists=args.twists,
                        target=args.target, clasp=args.clasp, output=args.output,
                        orientation=args.orientation)
        return cmd_operator(cfg)
    except (LinkFileError, UsageError, DiagramError, ValueError) as e:
        print(f"mubar: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, SizeBudgetExceeded) as e:
        print(f"mubar: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as e:
        print(f"mubar: invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
