"""Command-line interface: ``instcomp measure | verify | report-gap | witness | adversary``.

Exit codes: 0 success, 1 verification failure, 2 cap violation, 3 parse or
usage error. Errors are reported as a JSON object on stdout.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import families as fam
from . import verify as V
from .algorithms import gt_adversary, gt_tree, refutes, run_adversary
from .boolfn import TruthTable, format_table, read_table
from .errors import CapExceededError, InstCompError
from .families import FamilySpec, make_family
from .instc import instc_exact, instc_wrt
from .report import ALL_MEASURES, build_report, dumps, gap_csv, gap_row, rational_json, reports_csv
from .trees import parse_tree, serialize

EXIT_OK, EXIT_FAIL, EXIT_CAP, EXIT_PARSE = 0, 1, 2, 3
WORKERS_ENV = "INSTCOMP_WORKERS"

THEOREMS = ("symmetric", "graph-conn", "graph-clique", "gt", "omb", "gkn", "deg-lb", "oracle")


class UsageError(InstCompError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_sizes(text: str | None) -> list[int] | None:
    """'6', '2-8' or '1,3,5' -> list of ints."""
    if text is None:
        return None
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad size list {text!r}") from None
    return out


def workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=fam.FAMILIES)
    p.add_argument("--n", type=int, help="variable count (or bit-length for gt)")
    p.add_argument("--m", type=int, help="address bits for ind")
    p.add_argument("--vertices", type=int, help="vertex count for conn/clique")
    p.add_argument("--k", type=int, help="clique size")
    p.add_argument("--predicate", help="weight predicate D(0)..D(n) as a 0/1 string, for symmetric")


def _spec_from_args(args) -> FamilySpec:
    pred = None
    if args.predicate is not None:
        if set(args.predicate) - {"0", "1"}:
            raise UsageError("--predicate must be a 0/1 string")
        pred = tuple(int(c) for c in args.predicate)
    return FamilySpec(args.family, n=args.n, m=args.m, predicate=pred, vertices=args.vertices, k=args.k)


def _load_function(args) -> tuple[TruthTable, dict, FamilySpec | None]:
    if args.file and args.family:
        raise UsageError("give either --file or --family, not both")
    if args.file:
        f = read_table(args.file)
        digest = hashlib.sha256(format_table(f).encode()).hexdigest()[:16]
        return f, {"file": os.path.basename(args.file), "sha256": digest, "label": f"file:{os.path.basename(args.file)}"}, None
    if not args.family:
        raise UsageError("one of --file or --family is required")
    spec = _spec_from_args(args)
    f = make_family(spec)
    desc = spec.describe()
    desc["label"] = spec.label()
    return f, desc, spec


# -- commands ---------------------------------------------------------------

def cmd_measure(args) -> tuple[int, str]:
    f, desc, spec = _load_function(args)
    requested = [m.strip() for m in args.measures.split(",") if m.strip()]
    unknown = set(requested) - set(ALL_MEASURES)
    if unknown:
        raise UsageError(f"unknown measures: {', '.join(sorted(unknown))}")
    rep = build_report(f, desc, requested, spec=spec, slow=args.slow)
    if args.format == "csv":
        return EXIT_OK, reports_csv([rep])
    return EXIT_OK, dumps(rep.to_dict(timings=not args.no_timing))


def _verify_checks(args) -> list[V.Check]:
    sizes = parse_sizes(args.n)
    tid = args.theorem
    checks: list[V.Check] = []
    if tid == "symmetric":
        for n in sizes or range(2, 9):
            checks += V.check_symmetric(n)
    elif tid == "graph-conn":
        for v in sizes or (4, 5):
            checks += V.check_conn(v)
    elif tid == "graph-clique":
        ks = parse_sizes(args.k)
        if sizes:
            cases = [(v, k) for v in sizes for k in (ks or range(2, v + 1)) if 2 <= k <= v]
        else:
            cases = [(4, 2), (4, 3), (5, 2)] + ([(6, 3)] if args.slow else [])
        for v, k in cases:
            checks += V.check_clique(v, k, slow=args.slow)
            checks.append(V.check_clique_formula_small(v, k))
    elif tid == "gt":
        for n in sizes or range(1, 6):
            checks += V.check_gt(n)
    elif tid == "omb":
        for n in sizes or range(1, 12, 2):
            checks += V.check_omb(n)
    elif tid == "gkn":
        checks += V.check_gkn(sizes or range(2, 11), parse_sizes(args.k) or (1, 2))
    elif tid == "deg-lb":
        top = max(sizes) if sizes else 4
        checks += V.check_deg_lb(exhaustive_max=min(top, 4), random_ns=range(5, max(top, 10) + 1),
                                 per_n=args.count if args.count is not None else 1700, seed=args.seed)
    elif tid == "oracle":
        for n in sizes or (3,):
            count = args.count if args.count is not None else (0 if n <= 3 else 200)
            checks += V.check_oracle(n, random_count=count, seed=args.seed)
    return checks


def cmd_verify(args) -> tuple[int, str]:
    checks = _verify_checks(args)
    lines = [c.line() for c in checks]
    lines.append(V.summary(checks))
    ok = all(c.passed for c in checks)
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines) + "\n"


def _gap_job(job):
    label, n, bits, slow = job
    return gap_row(label, TruthTable(n, np.frombuffer(bits, dtype=np.uint8)), slow)


def cmd_report_gap(args) -> tuple[int, str]:
    gen = args.generator
    jobs = []
    if gen in ("random", "random-symmetric"):
        if args.n is None:
            raise UsageError(f"--n is required for generator {gen!r}")
        rng = np.random.default_rng(args.seed)
        for i in range(args.count):
            if gen == "random":
                f = TruthTable(args.n, rng.integers(0, 2, 1 << args.n, dtype=np.uint8))
            else:
                f = fam.symmetric(rng.integers(0, 2, args.n + 1, dtype=np.uint8))
            jobs.append((f"{gen}#{i}:{f.to_string() if args.n <= 6 else f'n={args.n}'}", f))
    elif gen in fam.FAMILIES:
        args.family = gen
        spec = _spec_from_args(args)
        jobs.append((spec.label(), make_family(spec)))
    else:
        raise UsageError(f"unknown generator {gen!r}")
    cap = 15 if args.slow else 13
    for _, f in jobs:
        if f.n > cap:
            raise CapExceededError("report-gap", f.n, cap)
    payload = [(label, f.n, f.bits.tobytes(), args.slow) for label, f in jobs]
    w = min(workers(), len(payload))
    if w > 1:
        with ProcessPoolExecutor(max_workers=w) as pool:
            rows = list(pool.map(_gap_job, payload))
    else:
        rows = [_gap_job(job) for job in payload]
    return EXIT_OK, gap_csv(rows)


def cmd_witness(args) -> tuple[int, str]:
    f, desc, _ = _load_function(args)
    if args.tree:
        with open(args.tree) as fh:
            tree = parse_tree(fh.read(), f.n, name=os.path.basename(args.tree))
        value = instc_wrt(f, tree, slow=args.slow)
        out = {"function": desc, "tree": serialize(tree), "instc_wrt": rational_json(value)}
    else:
        result = instc_exact(f, slow=args.slow)
        out = {"function": desc, "tree": serialize(result.tree), "instc": rational_json(result.value)}
    return EXIT_OK, dumps(out)


def cmd_adversary(args) -> tuple[int, str]:
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    if args.tree:
        with open(args.tree) as fh:
            tree = parse_tree(fh.read(), 2 * n, name=os.path.basename(args.tree))
    else:
        tree = gt_tree(n)
    run = run_adversary(tree, gt_adversary(n))
    out = {
        "n": n,
        "tree": tree.name,
        "depth": run.depth,
        "output": run.output,
        "transcript": run.transcript_json(),
        "completions": None if run.completions is None else ["".join(map(str, c)) for c in run.completions],
        "refuted": refutes(run, fam.gt(n)),
    }
    return EXIT_OK, dumps(out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="instcomp", description="Exact query-complexity measures of Boolean functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("measure", help="compute measures of one function")
    _add_family_args(m)
    m.add_argument("--file", help="truth-table file ('n=<k>' then 2^k bits)")
    m.add_argument("--measures", default=",".join(ALL_MEASURES),
                   help=f"comma list from {','.join(ALL_MEASURES)}")
    m.add_argument("--format", choices=("json", "csv"), default="json")
    m.add_argument("--slow", action="store_true", help="raise the solver cap from 13 to 15 variables")
    m.add_argument("--no-timing", action="store_true", help="omit timing_ms from JSON")
    m.set_defaults(func=cmd_measure)

    v = sub.add_parser("verify", help="check a closed-form result exhaustively")
    v.add_argument("theorem", choices=THEOREMS)
    v.add_argument("--n", help="sizes: '6', '2-8' or '1,3,5' (vertices for graph checks)")
    v.add_argument("--k", help="clique sizes (graph-clique) or address bits (gkn)")
    v.add_argument("--count", type=int, help="random functions per size (oracle, deg-lb)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--slow", action="store_true", help="allow 15-variable solves")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("report-gap", help="tabulate dt, cmin, C and InstC for sampled functions")
    g.add_argument("--generator", required=True, help="random, random-symmetric, or a family name")
    _add_family_args(g)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--slow", action="store_true")
    g.set_defaults(func=cmd_report_gap)

    w = sub.add_parser("witness", help="print an optimal tree, or measure a given tree")
    _add_family_args(w)
    w.add_argument("--file", help="truth-table file")
    w.add_argument("--tree", help="tree file in the (q var t0 t1)/(leaf b) format")
    w.add_argument("--slow", action="store_true")
    w.set_defaults(func=cmd_witness)

    a = sub.add_parser("adversary", help="play the GT adversary against a tree")
    a.add_argument("--n", type=int, help="GT_n, 2n variables")
    a.add_argument("--tree", help="tree file; defaults to the comparison tree")
    a.set_defaults(func=cmd_adversary)
    return p


def _error(kind: str, exc: Exception, **extra) -> str:
    return dumps({"error": {"type": kind, "message": str(exc), **extra}})


def run(argv=None) -> tuple[int, str]:
    try:
        args = build_parser().parse_args(argv)
        seed = getattr(args, "seed", None)
        if seed is not None and not 0 <= seed < 2**64:
            raise UsageError("--seed must fit in 64 bits")
        return args.func(args)
    except CapExceededError as exc:
        return EXIT_CAP, _error("cap_exceeded", exc, what=exc.what, n=exc.n, cap=exc.cap)
    except (InstCompError, OSError) as exc:
        return EXIT_PARSE, _error("parse_error", exc)


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
