"""Command-line interface: ``orbitlab {enumerate,table,poset,verify,lexiprod}``.

Exit codes: 0 success (including conjecture reports), 1 usage error, 2 a
theorem or lemma failed inside its stated hypotheses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import export
from .analysis import THEOREMS, ProductTieError, lexiprod_permutation, run_check
from .lemmas import lemma_grid
from .majorization import build_poset

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

FORMATS = {
    "enumerate": ("json", "csv"),
    "table": ("csv", "json"),
    "poset": ("dot", "json", "csv"),
    "verify": ("json", "csv"),
    "lexiprod": ("csv", "json"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int | None
    q: int | None
    p_max: int | None
    q_max: int | None
    format: str
    out: str | None
    workers: int
    verbose: int


def _default_workers() -> int:
    raw = os.environ.get("ORBITLAB_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbitlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(cmd, help_, pq_required=True):
        sp = sub.add_parser(cmd, help=help_)
        sp.add_argument("--p", type=int, required=pq_required)
        sp.add_argument("--q", type=int, required=pq_required)
        sp.add_argument("--format", choices=FORMATS[cmd], default=FORMATS[cmd][0])
        sp.add_argument("--out", help="write to this file instead of stdout")
        return sp

    common("enumerate", "orbit representatives with their base-2 orbits")
    sp = common("table", "base-2 orbits with partial sums or products")
    sp.add_argument("--kind", choices=("sums", "products"), default="sums")
    sp.add_argument("--rounded", action="store_true", help="add the mantissa x 10^x presentation")
    sp = common("poset", "Hasse diagram of a majorization order")
    sp.add_argument("--kind", choices=("sum", "product"), default="sum")
    sp = common("lexiprod", "lexicographic vs product rank permutation")
    sp.add_argument("--plot", action="store_true", help="emit the two-column plot CSV")

    sp = common("verify", "brute-force theorem or lemma sweep", pq_required=False)
    sp.add_argument("theorem", choices=(*THEOREMS, "lemmas"))
    sp.add_argument("--p-max", type=int)
    sp.add_argument("--q-max", type=int)
    sp.add_argument("--grid", type=int, default=6, help="lemma parameter bound")
    sp.add_argument("--workers", type=int, default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pairs(args) -> list[tuple[int, int]]:
    if args.q is not None:
        if args.q_max is not None:
            raise UsageError("--q and --q-max are mutually exclusive")
        qs = [args.q]
    else:
        q_max = args.q_max if args.q_max is not None else 12
        if q_max < 2:
            raise UsageError("--q-max must be at least 2")
        qs = list(range(2, q_max + 1))
    pairs = []
    for q in qs:
        for p in range(1, q):
            if args.p is not None and p != args.p:
                continue
            if args.p_max is not None and p > args.p_max:
                continue
            pairs.append((p, q))
    if not pairs:
        raise UsageError("parameter range is empty")
    return pairs


def _timed_check(task: tuple[str, int, int]):
    theorem, p, q = task
    start = time.perf_counter()
    report = run_check(theorem, p, q)
    return report, time.perf_counter() - start


def _verify_theorem(args, workers: int) -> int:
    tasks = [(args.theorem, p, q) for p, q in _pairs(args)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_timed_check, tasks))
    else:
        results = [_timed_check(t) for t in tasks]

    if args.format == "json":
        lines = []
        for report, _ in results:
            record = report.to_json()
            if report.conjecture:
                record["conjecture_counterexample"] = bool(report.counterexamples)
            lines.append(json.dumps(record))
        text = "\n".join(lines) + "\n"
    else:
        text = export.to_csv(
            ["p", "q", "theorem", "holds", "orbits", "seconds"],
            [
                [r.p, r.q, r.theorem, str(r.holds).lower(), r.orbits_checked, f"{s:.4f}"]
                for r, s in results
            ],
        )
    _emit(text, args.out)
    return EXIT_VIOLATION if any(r.violation for r, _ in results) else EXIT_OK


def _verify_lemmas(args) -> int:
    if args.grid < 0:
        raise UsageError("--grid must be nonnegative")
    q_max = args.q_max if args.q_max is not None else 14
    reports = lemma_grid(grid=args.grid, q_max=q_max)
    if args.format == "json":
        text = "\n".join(json.dumps(r.to_json()) for r in reports) + "\n"
    else:
        text = export.to_csv(
            ["lemma", "item", "params", "lhs", "rhs", "holds", "status"],
            [
                [
                    r.lemma, r.item, json.dumps(r.params, separators=(",", ":")),
                    d["lhs"] or "", d["rhs"] or "", "" if r.holds is None else str(r.holds).lower(),
                    r.status,
                ]
                for r, d in ((r, r.to_json()) for r in reports)
            ],
        )
    _emit(text, args.out)
    return EXIT_VIOLATION if any(r.status == "fails" for r in reports) else EXIT_OK


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        args.command, args.p, args.q, getattr(args, "p_max", None), getattr(args, "q_max", None),
        args.format, args.out, getattr(args, "workers", None) or _default_workers(), args.verbose,
    )
    try:
        if cfg.command == "enumerate":
            text = export.orbits_json(cfg.p, cfg.q) if cfg.format == "json" else export.orbits_csv(cfg.p, cfg.q)
        elif cfg.command == "table":
            table = export.orbit_table(cfg.p, cfg.q, args.kind)
            text = (export.table_csv if cfg.format == "csv" else export.table_json)(table, args.rounded)
        elif cfg.command == "poset":
            poset = build_poset(cfg.p, cfg.q, args.kind)
            text = {"dot": export.poset_dot, "json": export.poset_json, "csv": export.poset_csv}[cfg.format](poset)
            if poset.collisions and cfg.verbose:
                print(f"warning: {len(poset.collisions)} profile collisions", file=sys.stderr)
        elif cfg.command == "lexiprod":
            perm = lexiprod_permutation(cfg.p, cfg.q)
            if args.plot:
                text = export.permutation_plot_csv(perm)
            else:
                text = export.lexiprod_csv(perm) if cfg.format == "csv" else export.lexiprod_json(perm)
        elif args.theorem == "lemmas":
            return _verify_lemmas(args)
        else:
            return _verify_theorem(args, cfg.workers)
    except ProductTieError as exc:
        print(f"orbitlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"orbitlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg.out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
