"""Command-line frontend: construct | measure | shift | lex | shadow | verify | search.

Every emitted report embeds its full run configuration; re-running that
configuration reproduces the result section byte-for-byte (timestamps live
in a separate field).  Exit codes: 0 = no FAIL, 1 = FAIL found, 2 = invalid
invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from .constructions import CONSTRUCTION_IDS, build
from .core import SetFamily, dumps_family, mask_of, read_family, write_family
from .measures import measure_profile
from .order import lex_segment, shadow
from .shifting import (
    And,
    CrossTIntersecting,
    MatchingAtMost,
    NonTrivial,
    RhoAtMost,
    TIntersecting,
    shift_ad_extremis,
)
from .verify import (
    BudgetError,
    default_budget,
    exhaustive_sweep,
    rerun_report,
    run_suite,
    sample_sweep,
    search_max,
)
from .verify.recipes import recipe_for


@dataclass
class RunConfig:
    """Fully serialized invocation, embedded in every report."""

    command: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    budget: int | None = None
    out: str | None = None
    format: str = "text"

    def to_dict(self) -> dict:
        return asdict(self)


def parse_property_spec(text: str, slots: int = 1):
    """Mini-grammar: atoms joined by '&'.

    Atoms: intersecting | t-intersecting(T) | cross(A,B[,T]) | rho<=P/Q |
    nu<=S | nontrivial.  Slotless atoms apply to every slot.
    """
    text = (text or "").strip()
    if not text or text == "none":
        return And(())
    atoms = []
    for tok in text.split("&"):
        tok = tok.strip()
        if tok == "intersecting":
            atoms.extend(TIntersecting(s, 1) for s in range(slots))
        elif tok.startswith("t-intersecting(") and tok.endswith(")"):
            t = int(tok[len("t-intersecting(") : -1])
            atoms.extend(TIntersecting(s, t) for s in range(slots))
        elif tok.startswith("cross(") and tok.endswith(")"):
            parts = [p.strip() for p in tok[len("cross(") : -1].split(",")]
            a, b = int(parts[0]), int(parts[1])
            t = 1
            if len(parts) == 3:
                t = int(parts[2].split("=")[-1])
            atoms.append(CrossTIntersecting(a, b, t))
        elif tok.startswith("rho<="):
            frac = tok[len("rho<=") :]
            if "/" in frac:
                num, den = frac.split("/")
                c = Fraction(int(num), int(den))
            else:
                c = Fraction(int(frac))
            atoms.extend(RhoAtMost(s, c) for s in range(slots))
        elif tok.startswith("nu<="):
            s_cap = int(tok[len("nu<=") :])
            atoms.extend(MatchingAtMost(s, s_cap) for s in range(slots))
        elif tok == "nontrivial":
            atoms.extend(NonTrivial(s) for s in range(slots))
        else:
            raise ValueError(f"cannot parse property atom {tok!r}")
    return And(tuple(atoms))


def _parse_kv(text: str) -> dict:
    out = {}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "=" not in tok:
            raise ValueError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        try:
            out[key.strip()] = int(val)
        except ValueError:
            out[key.strip()] = val.strip()
    return out


def _emit(report: dict, out: str | None, fmt: str) -> None:
    payload = json.dumps(report, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(payload + "\n", encoding="utf-8")
    if fmt == "json":
        print(payload)


def _summarize(report: dict) -> str:
    if "reports" in report:
        return f"suite: {len(report['reports'])} sweeps"
    res = report.get("result", {})
    totals = res.get("totals", {})
    return (
        f"id={res.get('id')} pass={totals.get('pass')} vacuous={totals.get('vacuous')} "
        f"fail={totals.get('fail')} budget_used={res.get('budget_used')}"
    )


def _profile_lines(fam: SetFamily, fmt: str) -> str:
    prof = measure_profile(fam).to_json_dict()
    if fmt == "json":
        return json.dumps(prof, indent=2, sort_keys=True)
    if fmt == "csv":
        keys = ["size", "rho", "nu", "initial"]
        taus = ",".join(f"tau{t}={v}" for t, v in sorted(prof["tau"].items()))
        return ",".join(f"{k}={prof[k]}" for k in keys) + ("," + taus if taus else "")
    lines = [f"size     {prof['size']}", f"rho      {prof['rho']}"]
    for t, v in sorted(prof["tau"].items()):
        lines.append(f"tau_{t}    {v}")
    lines.append(f"nu       {prof['nu']}")
    for j, v in sorted(prof["t_levels"].items()):
        lines.append(f"t_{j}      {v}")
    lines.append(f"initial  {prof['initial']}")
    return "\n".join(lines)


def cmd_construct(args) -> int:
    params = tuple(int(p) for p in args.params.split(",") if p.strip()) if args.params else ()
    nf = build(args.id, params)
    outputs = []
    if args.out:
        base = Path(args.out)
        if len(nf.families) == 1:
            targets = [(base, nf.families[0][1])]
        else:
            targets = [
                (base.with_name(f"{base.stem}.{label}{base.suffix}"), fam)
                for label, fam in nf.families
            ]
        for path, fam in targets:
            write_family(fam, path)
            outputs.append(str(path))
    for label, fam in nf.families:
        print(f"[{nf.id}:{label}] size={len(fam)}"
              + (f" predicted_total={nf.predicted_size}" if nf.predicted_size is not None else ""))
        print(_profile_lines(fam, args.format))
    if outputs:
        print("wrote: " + ", ".join(outputs))
    return 0


def cmd_measure(args) -> int:
    fam = read_family(args.infile)
    if len(fam) == 0:
        print("warning: empty family; rho reported as 0/1 by convention", file=sys.stderr)
    print(_profile_lines(fam, args.format))
    return 0


def cmd_shift(args) -> int:
    fams = tuple(read_family(p) for p in args.infiles)
    prop = parse_property_spec(args.prop, slots=len(fams))
    try:
        shifted, trace = shift_ad_extremis(fams, prop)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    prefix = args.out_prefix or "shifted"
    paths = []
    for idx, fam in enumerate(shifted):
        path = f"{prefix}.{idx}.txt"
        write_family(fam, path)
        paths.append(path)
    trace_path = f"{prefix}.trace.json"
    Path(trace_path).write_text(trace.to_json() + "\n", encoding="utf-8")
    print(f"wrote {', '.join(paths)} and {trace_path}")
    print(f"steps={len(trace.steps)} resistant={trace.resistant_pairs}")
    return 0


def cmd_lex(args) -> int:
    ground = (
        mask_of(int(e) for e in args.ground.split(","))
        if args.ground
        else mask_of(range(1, args.n + 1))
    )
    seg = lex_segment(ground, args.k, args.m, n=args.n)
    text = dumps_family(seg.family)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_shadow(args) -> int:
    fam = read_family(args.infile)
    sh = shadow(fam, args.l)
    text = dumps_family(sh)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} (size {len(sh)})")
    else:
        print(text, end="")
    return 0


def cmd_verify(args) -> int:
    threads = args.threads or 1
    budget = args.budget
    reports = []
    try:
        if args.rerun:
            original = json.loads(Path(args.rerun).read_text(encoding="utf-8"))
            reports = [rerun_report(original, threads=threads)]
        elif args.suite:
            config = json.loads(Path(args.suite).read_text(encoding="utf-8"))
            only = set(args.id.split(",")) if args.id else None
            reports = run_suite(config, threads=threads, only=only)
        elif args.exhaustive is not None:
            from .verify import REGISTRY

            grid = _parse_kv(args.exhaustive)
            # "l" is the partner uniformity for pair statements, a parameter otherwise
            dim_keys = ("n", "k", "l", "space") if (
                args.id in REGISTRY and REGISTRY[args.id].kind == "pair"
            ) else ("n", "k", "space")
            dims = {k: grid.pop(k) for k in dim_keys if k in grid}
            dims["params"] = grid
            reports = [exhaustive_sweep(args.id, dims, threads=threads, budget=budget)]
        elif args.sample is not None:
            opts = _parse_kv(args.sample)
            count = opts.pop("count", 200)
            seed = opts.pop("seed", args.seed)
            recipe = recipe_for(args.id, overrides=opts)
            reports = [
                sample_sweep(args.id, recipe["instance"], count, seed, threads=threads, budget=budget)
            ]
        else:
            print("error: one of --exhaustive/--sample/--suite/--rerun required", file=sys.stderr)
            return 2
    except (BudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    run_config = RunConfig(
        command="verify",
        params={"id": args.id, "exhaustive": args.exhaustive, "sample": args.sample,
                "suite": args.suite, "rerun": args.rerun, "threads": threads},
        seed=args.seed,
        budget=budget,
        out=args.out,
        format=args.format,
    ).to_dict()
    bundle = {"run_config": run_config, "reports": reports,
              "timestamp": {"unix": time.time()}} if len(reports) > 1 else {
        "run_config": run_config, **reports[0], "timestamp": {"unix": time.time()}}
    _emit(bundle, args.out, args.format)
    for rep in reports:
        print(_summarize(rep))
    any_fail = any(rep["result"]["totals"]["fail"] > 0 for rep in reports)
    return 1 if any_fail else 0


def cmd_search(args) -> int:
    kv = {}
    for tok in args.kv or ():
        kv.update(_parse_kv(tok))
    n = args.n if args.n is not None else kv.get("n")
    k = args.k if args.k is not None else kv.get("k")
    if n is None or k is None:
        print("error: search needs n and k", file=sys.stderr)
        return 2
    try:
        prop = parse_property_spec(args.prop, slots=1)
        result = search_max(int(n), int(k), prop, budget=args.budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    run_config = RunConfig(
        command="search",
        params={"n": n, "k": k, "prop": args.prop},
        budget=args.budget,
        out=args.out,
        format=args.format,
    ).to_dict()
    report = {"run_config": run_config, "result": result.to_json_dict(),
              "timestamp": {"unix": time.time()}}
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n",
                                  encoding="utf-8")
    print(json.dumps(report["result"], sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal",
        description="Exact set-family combinatorics: constructions, measures, "
        "shifting fixpoints, shadows, statement sweeps, and extremal search.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--budget", type=int, default=None,
                        help="evaluation budget (default from EXTREMAL_BUDGET)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="materialize a named family")
    p.add_argument("--id", required=True, choices=CONSTRUCTION_IDS)
    p.add_argument("--params", default="")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("measure", help="measure a family file")
    p.add_argument("infile")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("shift", help="shift families ad extremis under a property")
    p.add_argument("infiles", nargs="+")
    p.add_argument("--prop", default="")
    p.add_argument("--out-prefix")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("lex", help="write a lexicographic segment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ground", help="comma-separated ground elements (default [n])")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_lex)

    p = sub.add_parser("shadow", help="compute the l-th shadow of a family file")
    p.add_argument("infile")
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_shadow)

    p = sub.add_parser("verify", help="run statement sweeps")
    p.add_argument("--id", help="statement id (or comma list with --suite)")
    p.add_argument("--exhaustive", help="grid, e.g. n=5,k=2,t=1[,space=initial]")
    p.add_argument("--sample", help="options, e.g. n=24,k=3,d=2,count=200,seed=7")
    p.add_argument("--suite", help="path to a suite config JSON")
    p.add_argument("--rerun", help="path to an emitted report to reproduce")
    p.add_argument("--out", help="write the report JSON here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="exact max family size under a property")
    p.add_argument("kv", nargs="*", help="n=5 k=2 style positional options")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--prop", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
