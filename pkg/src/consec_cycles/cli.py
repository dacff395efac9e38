"""Batch command-line front end.

Subcommands: ``spectrum``, ``verify``, ``extract``, ``scan-conjecture``,
``generate``, ``blocks``.  Input is graph6, one record per line, from a
file or stdin ("-"); blank lines and ">>" header lines are skipped,
anything else malformed becomes a per-entry error without aborting the
run.  Exit code 0 means no violations and no errors, 2 means a
guaranteed-statement violation (or a failed construction) was found,
1 means I/O, configuration, or per-graph errors.

Reports are written atomically and are byte-identical for identical
inputs and configuration, regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Optional

from . import connectivity as conn
from .cycles import DEFAULT_MAX_N, cycle_spectrum, default_budget, run_stats
from .errors import GraphLibError, HypothesisFailed
from .graph import FAMILIES, decode_graph6, encode_graph6, generate
from .report import report_to_csv, report_to_json, report_to_text, write_atomic
from .theorems import (
    ScanEntry,
    ScanReport,
    TheoremId,
    extract_three_connected,
    extract_two_cut,
    scan_catalog,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on usage errors; our 2 means violation."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _parse_k_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        ks = list(range(int(lo), int(hi) + 1))
    else:
        ks = [int(text)]
    if not ks or ks[0] < 1 or ks[-1] > 64:
        raise ValueError(f"k range {text!r} must be non-empty and within 1..64")
    return ks


def _read_lines(source: str) -> Iterator[str]:
    stream = sys.stdin if source == "-" else open(source, "r")
    try:
        for line in stream:
            line = line.strip()
            if not line or line.startswith(">"):
                continue
            yield line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(args, text: str) -> None:
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)


def _add_io_args(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("input_pos", nargs="?", default=None, metavar="INPUT",
                       help="input path or - for stdin (same as --input)")
        p.add_argument("--input", "-i", default=None, help="input path or - for stdin")
    p.add_argument("--output", "-o", default=None,
                   help="output path (atomic write); default stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="node budget per enumeration call "
                        f"(default {default_budget()}, env CONSEC_CYCLES_BUDGET)")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help="size bound for exact spectra")
    p.add_argument("--force-large", action="store_true",
                   help="override the size bounds")


def _input_source(args) -> str:
    src = args.input_pos or args.input or "-"
    if args.input_pos and args.input and args.input_pos != args.input:
        raise ValueError("give the input either positionally or via --input, not both")
    return src


def _render_report(args, report: ScanReport) -> str:
    if args.format == "json":
        return report_to_json(report)
    if args.format == "csv":
        return report_to_csv(report)
    return report_to_text(report)


def _report_exit_code(report: ScanReport) -> int:
    if report.summary["violations"]:
        return EXIT_VIOLATION
    if report.summary["errors"]:
        return EXIT_ERROR
    return EXIT_OK


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _cmd_spectrum(args) -> int:
    entries = []
    errors = 0
    for index, line in enumerate(_read_lines(_input_source(args))):
        entry = {"index": index, "graph6": line}
        try:
            g = decode_graph6(line)
            spec = cycle_spectrum(g, budget=args.budget, max_n=args.max_n,
                                  force=args.force_large)
            stats = run_stats(spec)
            entry.update(lengths=list(spec.lengths), max_run=stats.max_run,
                         max_odd_run=stats.max_odd_run)
            if args.witnesses:
                entry["witnesses"] = {str(l): list(w) for l, w in
                                      sorted(spec.witnesses.items())}
        except GraphLibError as exc:
            entry["error"] = f"{type(exc).__name__}: {exc}"
            errors += 1
        entries.append(entry)
    obj = {"summary": {"total": len(entries), "errors": errors}, "entries": entries}
    if args.format == "json":
        _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        lines = ["index,graph6,lengths,max_run,max_odd_run,error"]
        for e in entries:
            lens = ";".join(map(str, e.get("lengths", [])))
            lines.append(f"{e['index']},{e['graph6']},{lens},"
                         f"{e.get('max_run', '')},{e.get('max_odd_run', '')},"
                         f"{e.get('error', '')}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = []
        for e in entries:
            if "error" in e:
                lines.append(f"[{e['index']}] {e['graph6']}  {e['error']}")
            else:
                lines.append(f"[{e['index']}] {e['graph6']}  lengths={e['lengths']} "
                             f"max_run={e['max_run']} max_odd_run={e['max_odd_run']}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_ERROR if errors else EXIT_OK


def _theorem_from_name(name: str) -> TheoremId:
    try:
        return TheoremId(name)
    except ValueError:
        known = ", ".join(t.value for t in TheoremId)
        raise ValueError(f"unknown theorem {name!r}; known: {known}") from None


def _cmd_verify(args, theorem: Optional[TheoremId] = None,
                default_k: str = "1", text_note: str = "") -> int:
    tid = theorem or _theorem_from_name(args.theorem)
    ks = _parse_k_range(args.k or default_k)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        raise ValueError("worker count must be >= 1")
    if args.max_n < 3:
        raise ValueError("size cap must be >= 3")
    report = scan_catalog(
        _read_lines(_input_source(args)), tid, ks,
        jobs=jobs, budget=args.budget, max_n=args.max_n, force=args.force_large,
        entries_mode=args.entries)
    text = _render_report(args, report)
    if text_note and args.format == "text":
        text = text_note + text
    _emit(args, text)
    return _report_exit_code(report)


CONJECTURE_NOTE = (
    "note: open-conjecture scan; zero violations is property-based evidence "
    "for the scanned catalog only, a violation would be a discovery\n")


def _cmd_scan_conjecture(args) -> int:
    return _cmd_verify(args, theorem=TheoremId.CONJECTURE_K4, default_k="4..5",
                       text_note=CONJECTURE_NOTE)


def _cmd_extract(args) -> int:
    ks = _parse_k_range(args.k)
    entries = []
    for index, line in enumerate(_read_lines(_input_source(args))):
        try:
            g = decode_graph6(line)
        except GraphLibError as exc:
            for k in ks:
                entries.append(ScanEntry(index, line, "extract", k, "error",
                                         error=f"{type(exc).__name__}: {exc}"))
            continue
        three = conn.is_3_connected(g)
        for k in ks:
            name = "three-connected-run" if three else "two-cut-odd-run"
            try:
                if three:
                    cycles, trace = extract_three_connected(
                        g, k, budget=args.budget, max_n=args.max_n,
                        force=args.force_large)
                else:
                    cycles, trace = extract_two_cut(g, k, budget=args.budget)
                entries.append(ScanEntry(
                    index, line, name, k, "holds",
                    witness_lengths=sorted(len(c) for c in cycles),
                    trace=list(trace.proof_path)))
            except HypothesisFailed as exc:
                entries.append(ScanEntry(index, line, name, k, "hypotheses_not_met",
                                         error=str(exc)))
            except GraphLibError as exc:
                entries.append(ScanEntry(index, line, name, k, "violation",
                                         error=f"{type(exc).__name__}: {exc}"))
    summary = {"total": len(entries), "hypotheses_met": 0, "holds": 0,
               "excepted": 0, "violations": 0, "errors": 0}
    for e in entries:
        if e.verdict == "holds":
            summary["holds"] += 1
            summary["hypotheses_met"] += 1
        elif e.verdict == "violation":
            summary["violations"] += 1
            summary["hypotheses_met"] += 1
        elif e.verdict == "error":
            summary["errors"] += 1
    report = ScanReport(summary, entries)
    _emit(args, _render_report(args, report))
    return _report_exit_code(report)


def _cmd_generate(args) -> int:
    params = {p: getattr(args, p) for p in ("n", "m", "a", "b")}
    result = generate(args.family, **params)
    graphs = result if not hasattr(result, "adj") else [result]
    lines = [encode_graph6(g) for g in graphs]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_blocks(args) -> int:
    entries = []
    errors = 0
    for index, line in enumerate(_read_lines(_input_source(args))):
        entry = {"index": index, "graph6": line}
        try:
            g = decode_graph6(line)
            tree = conn.block_cut_tree(g)
            entry.update(
                blocks=[sorted(b) for b in tree.blocks],
                cut_vertices=sorted(tree.cut_vertices),
                end_blocks=[{"block": sorted(tree.blocks[i]),
                             "cut_vertex": tree.end_block_cut_vertex.get(i)}
                            for i in tree.end_blocks])
        except GraphLibError as exc:
            entry["error"] = f"{type(exc).__name__}: {exc}"
            errors += 1
        entries.append(entry)
    obj = {"summary": {"total": len(entries), "errors": errors}, "entries": entries}
    if args.format == "json":
        _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        lines = []
        for e in entries:
            if "error" in e:
                lines.append(f"[{e['index']}] {e['graph6']}  {e['error']}")
            else:
                lines.append(f"[{e['index']}] {e['graph6']}  blocks={e['blocks']} "
                             f"cut_vertices={e['cut_vertices']}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_ERROR if errors else EXIT_OK


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="consec-cycles",
                     description="cycle-length spectra and consecutive-cycle "
                                 "verification on graph6 catalogs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="exact cycle-length spectrum per graph")
    _add_io_args(p)
    _add_budget_args(p)
    p.add_argument("--witnesses", action="store_true",
                   help="include one witness cycle per length")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("verify", help="check one statement over a catalog")
    _add_io_args(p)
    _add_budget_args(p)
    p.add_argument("--theorem", required=True,
                   help="one of: " + ", ".join(t.value for t in TheoremId))
    p.add_argument("--k", default=None, help="parameter value or range, e.g. 2..6")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: available parallelism)")
    p.add_argument("--entries", choices=("all", "violations"), default="all",
                   help="keep all entries or only violations/errors")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan-conjecture",
                       help="scan the open k-consecutive conjecture (default k=4..5)")
    _add_io_args(p)
    _add_budget_args(p)
    p.add_argument("--k", default=None, help="parameter range (default 4..5)")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--entries", choices=("all", "violations"), default="all")
    p.set_defaults(fn=_cmd_scan_conjecture)

    p = sub.add_parser("extract", help="constructively extract guaranteed cycles")
    _add_io_args(p)
    _add_budget_args(p)
    p.add_argument("--k", required=True, help="parameter value or range")
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("generate", help="emit a named family as graph6")
    _add_io_args(p, with_input=False)
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("blocks", help="block and cut-vertex decomposition per graph")
    _add_io_args(p)
    p.set_defaults(fn=_cmd_blocks)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (GraphLibError, ValueError, OSError) as exc:
        print(f"consec-cycles: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
