"""Command-line front end.

Exit codes: 0 when every checked statement holds, 1 when a mathematical
counterexample is found (and printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .color import chromatic_number
from .critical import CensusSummary, census, is_vertex_critical, verdict
from .enumeration import ENUMERATION_LIMIT, all_graphs, search_double_critical
from .graph import MAX_VERTICES, Graph, Graph6Error, build, parse_spec, read_graph6_lines, write_graph6
from .minor import SearchBudgetExceeded, find_clique_minor, verify_certificate
from .structure import verify_dc_properties

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

COMMANDS = ("chi", "check", "census", "search", "minor", "construct", "props")

# fixed CSV column order per command
CSV_COLUMNS = {
    "chi": ["graph_id", "graph6", "n", "m", "chi"],
    "check": [
        "graph_id", "graph6", "n", "m", "chi", "complete", "vertex_critical",
        "dc_edge_count", "double_critical", "double_edge_critical", "mixed_double_critical",
    ],
    "census": [
        "graph_id", "graph6", "n", "m", "chi", "dc_edge_count", "ratio", "bound_c",
        "is_decomposable", "factors",
    ],
    "search": ["graph6", "n", "m", "chi", "complete"],
    "minor": ["graph_id", "graph6", "t", "branch_sets", "verified"],
    "construct": ["spec", "graph6", "n", "m"],
    "props": ["graph_id", "graph6", "n", "m", "k", "vertex_critical", "double_critical", "complete", "failures"],
}


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    specs: list[str] = field(default_factory=list)
    k: int | None = None
    t: int | None = None
    max_n: int | None = None
    jobs: int = 1
    fmt: str = "text"
    budget: int | None = None
    checks: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.max_n is not None and not 1 <= self.max_n <= MAX_VERTICES:
            raise ValueError(f"--max-n must lie in 1..{MAX_VERTICES}")
        if self.max_n is not None and not self.inputs and self.max_n > ENUMERATION_LIMIT:
            raise ValueError(f"built-in enumeration needs --max-n <= {ENUMERATION_LIMIT}")
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError("format must be json, csv or text")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")


class InputError(Exception):
    pass


@dataclass
class Run:
    cfg: RunConfig
    out: object = sys.stdout
    err: object = sys.stderr
    parse_errors: list[tuple[str, str]] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    # -- input -------------------------------------------------------------

    def graphs(self) -> Iterator[tuple[str, Graph]]:
        cfg = self.cfg
        for spec in cfg.specs:
            yield spec, build(parse_spec(spec))
        for path in cfg.inputs:
            try:
                fh = sys.stdin if path == "-" else open(path, encoding="ascii", errors="replace")
            except OSError as exc:
                raise InputError(f"cannot read {path}: {exc}") from exc
            with fh if path != "-" else _nullctx(fh):
                for lineno, g in read_graph6_lines(fh):
                    gid = f"{path}:{lineno}"
                    if isinstance(g, Graph6Error):
                        self.parse_errors.append((gid, str(g)))
                        print(f"{gid}: malformed graph6 line: {g}", file=self.err)
                        continue
                    yield gid, g
        if not cfg.specs and not cfg.inputs and cfg.max_n is not None:
            for i, g in enumerate(all_graphs(cfg.max_n)):
                yield f"enum:{i}", g

    def parallel_map(self, fn: Callable, items: Iterable) -> Iterator:
        if self.cfg.jobs > 1:
            items = list(items)
            with ProcessPoolExecutor(self.cfg.jobs) as pool:
                yield from pool.map(fn, items, chunksize=4)
        else:
            yield from map(fn, items)

    # -- output --------------------------------------------------------------

    def emit_all(self, records: Iterable[dict]) -> None:
        fmt = self.cfg.fmt
        cols = CSV_COLUMNS[self.cfg.command]
        if fmt == "csv":
            print(",".join(cols), file=self.out)
        first = True
        for rec in records:
            if fmt == "json":
                print(json.dumps(rec), file=self.out)
            elif fmt == "csv":
                if rec.get("summary"):
                    continue
                print(",".join(_csv_cell(rec.get(c)) for c in cols), file=self.out)
            else:
                if not first:
                    print(file=self.out)
                first = False
                for key, value in rec.items():
                    print(f"{key.replace('_', '-')}: {_text_cell(value)}", file=self.out)

    def exit_code(self) -> int:
        for c in self.counterexamples:
            print("COUNTEREXAMPLE: " + json.dumps(c), file=self.err)
        if self.counterexamples:
            return EXIT_COUNTEREXAMPLE
        return EXIT_USAGE if self.parse_errors else EXIT_OK


class _nullctx:
    def __init__(self, obj):
        self.obj = obj

    def __enter__(self):
        return self.obj

    def __exit__(self, *exc):
        return False


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) if not isinstance(x, (list, tuple)) else "-".join(map(str, x)) for x in v)
    return str(v).replace(",", ";")


def _text_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v)
    return str(v)


# -- per-graph workers (module level so they pickle) -----------------------------


def _chi_one(item: tuple[str, Graph]) -> dict:
    gid, g = item
    return {"graph_id": gid, "graph6": write_graph6(g), "n": g.n, "m": g.m, "chi": chromatic_number(g)}


def _check_one(item: tuple[str, Graph, int | None]) -> dict | None:
    gid, g, k = item
    chi = chromatic_number(g)
    if k is not None and chi != k:
        return None
    v = verdict(g)
    return {
        "graph_id": gid,
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "chi": v.chi,
        "complete": g.is_complete(),
        "vertex_critical": v.is_vertex_critical,
        "dc_edge_count": len(v.dc_edges),
        "double_critical": v.is_double_critical,
        "double_edge_critical": v.is_double_edge_critical,
        "mixed_double_critical": v.is_mixed_double_critical,
    }


def _props_one(item: tuple[str, Graph]) -> dict:
    gid, g = item
    rep = verify_dc_properties(g)
    d = {"graph_id": gid, "graph6": write_graph6(g)}
    d.update(rep.to_dict())
    d["failures"] = sorted(rep.failures)
    d["contradicts_known_results"] = rep.contradicts_known_results
    return d


def _minor_one(item: tuple[str, Graph, int, int | None]) -> dict:
    gid, g, t, budget = item
    rec = {"graph_id": gid, "graph6": write_graph6(g), "t": t}
    try:
        cert = find_clique_minor(g, t, budget=budget)
    except SearchBudgetExceeded:
        rec.update(branch_sets=None, verified=False, error="budget exceeded")
        return rec
    except ValueError as exc:
        rec.update(branch_sets=None, verified=False, error=str(exc))
        return rec
    if cert is None:
        rec.update(branch_sets=None, verified=False)
    else:
        rec.update(branch_sets=[list(b) for b in cert.branch_sets], verified=verify_certificate(g, cert))
    return rec


# -- commands -------------------------------------------------------------------


def _cmd_chi(run: Run) -> None:
    run.emit_all(run.parallel_map(_chi_one, run.graphs()))


def _cmd_check(run: Run) -> None:
    cfg = run.cfg
    checks = set(cfg.checks)

    def records():
        items = ((gid, g, cfg.k) for gid, g in run.graphs())
        for rec in run.parallel_map(_check_one, items):
            if rec is None:
                continue
            if not rec["complete"]:
                for name in ("double_critical", "double_edge_critical", "mixed_double_critical"):
                    if rec[name] and (not checks or name in checks):
                        run.counterexamples.append({"graph6": rec["graph6"], "statement": f"non-complete {name}"})
            if checks:
                keep = {"graph_id", "graph6", "n", "m", "chi", "complete"} | checks
                rec = {key: v for key, v in rec.items() if key in keep}
            yield rec

    run.emit_all(records())


def _cmd_census(run: Run) -> None:
    cfg = run.cfg
    if cfg.k is None:
        raise InputError("census needs --critical K (or --k K)")
    summary = CensusSummary(cfg.k)

    def records():
        for rec in census(run.graphs(), cfg.k, summary=summary, jobs=cfg.jobs):
            yield rec.to_dict()
        summary.parse_errors.extend(run.parse_errors)
        for v in summary.violations:
            run.counterexamples.append(v)
        yield summary.to_dict()

    run.emit_all(records())
    if run.cfg.fmt != "json":
        print(
            f"census: processed={summary.processed} emitted={summary.emitted} "
            f"skipped_chi={summary.skipped_chi} skipped_noncritical={summary.skipped_noncritical} "
            f"violations={len(summary.violations)}",
            file=run.err,
        )


def _cmd_search(run: Run) -> None:
    cfg = run.cfg
    if not cfg.inputs and not cfg.specs and cfg.max_n is None:
        raise InputError("search needs --max-n N or --input FILE")
    graphs = (g for _, g in run.graphs())
    if cfg.max_n is not None and (cfg.inputs or cfg.specs):
        graphs = (g for g in graphs if g.n <= cfg.max_n)
    findings = search_double_critical(graphs)
    for f in findings:
        if not f.complete:
            run.counterexamples.append({"graph6": f.graph6, "statement": "non-complete double-critical graph"})
    run.emit_all(f.__dict__ for f in findings)


def _cmd_minor(run: Run) -> None:
    cfg = run.cfg
    if cfg.t is None:
        raise InputError("minor needs --t T")
    items = ((gid, g, cfg.t, cfg.budget) for gid, g in run.graphs())
    run.emit_all(run.parallel_map(_minor_one, items))


def _cmd_construct(run: Run) -> None:
    if not run.cfg.specs:
        raise InputError("construct needs at least one graph spec")

    def records():
        for spec in run.cfg.specs:
            g = build(parse_spec(spec))
            yield {"spec": spec, "graph6": write_graph6(g), "n": g.n, "m": g.m}

    if run.cfg.fmt == "text":
        for rec in records():
            print(rec["graph6"], file=run.out)
    else:
        run.emit_all(records())


def _cmd_props(run: Run) -> None:
    def records():
        for rec in run.parallel_map(_props_one, run.graphs()):
            yield rec
            if rec["contradicts_known_results"]:
                # a failure here refutes a proven statement: stop the batch
                run.counterexamples.append({"graph6": rec["graph6"], "failures": rec["failures"]})
                return

    run.emit_all(records())


HANDLERS = {
    "chi": _cmd_chi,
    "check": _cmd_check,
    "census": _cmd_census,
    "search": _cmd_search,
    "minor": _cmd_minor,
    "construct": _cmd_construct,
    "props": _cmd_props,
}


def run_suite(cfg: RunConfig, out=None, err=None) -> int:
    run = Run(cfg, out or sys.stdout, err or sys.stderr)
    try:
        HANDLERS[cfg.command](run)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=run.err)
        return EXIT_USAGE
    return run.exit_code()


def build_parser() -> argparse.ArgumentParser:
    csv_help = "; ".join(f"{c}: {','.join(cols)}" for c, cols in CSV_COLUMNS.items())
    p = argparse.ArgumentParser(
        prog="dclab",
        description="Exact computations on double-critical graphs.",
        epilog=f"CSV columns (fixed order, unquoted) -- {csv_help}",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("specs", nargs="*", help="graph specs such as K6, C5, W5, H(6,5), join(C5,K2), co(C7), petersen")
    p.add_argument("--input", action="append", default=[], metavar="FILE", help="graph6 file, one graph per line; '-' for stdin")
    p.add_argument("--k", type=int, help="chromatic number filter (check) or target (census)")
    p.add_argument("--critical", type=int, dest="critical", help="census target chromatic number")
    p.add_argument("--t", type=int, help="clique minor size")
    p.add_argument("--max-n", type=int, help=f"enumerate all graphs up to this order (<= {ENUMERATION_LIMIT})")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, help="step budget for minor searches")
    for flag, name in (("--vc", "vertex_critical"), ("--dc", "double_critical"),
                       ("--dec", "double_edge_critical"), ("--mixed", "mixed_double_critical")):
        p.add_argument(flag, dest="checks", action="append_const", const=name, help=f"report {name.replace('_', '-')}")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    k = args.critical if args.critical is not None else args.k
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=args.input,
            specs=args.specs,
            k=k,
            t=args.t,
            max_n=args.max_n,
            jobs=args.jobs,
            fmt=args.format,
            budget=args.budget,
            checks=tuple(args.checks or ()),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run_suite(cfg)


if __name__ == "__main__":
    sys.exit(main())
