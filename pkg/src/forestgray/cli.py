"""Command-line front end: ``forestgray {gen,count,analyze,trace,verify,family,mapping}``.

Exit codes: 0 success, 1 bad input or flags, 2 the digraph is not totally
acyclic, 3 an enumeration cap was exceeded, 4 ``verify`` found defects.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, TextIO

from .active_list import ActiveList
from .analysis import analyze, init_table
from .coroutine_engine import CoroutineEngine
from .digraph_io import format_digraph, mapping_report, parse_digraph, validate_and_normalize
from .errors import CapExceeded, NotTotallyAcyclic, ParseError
from .families import KINDS, FamilySpec, family_digraph
from .oracle import DEFAULT_CAP, enumerate_valid, verify_gray_path
from .steps import HALF_PERIOD_END, GrayPath

SEPARATOR = "-----"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    raw = parse_digraph(_read(path))
    return raw, validate_and_normalize(raw)


def _columns(forest, order: str) -> List[int]:
    if order == "preorder":
        return list(range(1, forest.n + 1))
    return list(forest.original_order)


def _render(bits, cols) -> str:
    return "".join("1" if bits[c] else "0" for c in cols)


def _make_engine(forest, engine: str, tco: bool):
    a = analyze(forest)
    t = init_table(forest, a)
    if engine == "coroutine":
        return CoroutineEngine(forest, a, t, tco=tco)
    return ActiveList(forest, a, t)


def cmd_gen(args, out: TextIO) -> int:
    _, forest = _load(args.input)
    machine = _make_engine(forest, args.engine, not args.no_tco)
    cols = _columns(forest, args.order)
    labels = forest.label_of
    show_pattern = args.emit in ("patterns", "both")
    for _ in range(args.cycles):
        if show_pattern:
            out.write(_render(machine.bits, cols) + "\n")
        while True:
            r = machine.step()
            if r is HALF_PERIOD_END:
                break
            delta = f"{labels[r.vertex]} -> {r.bit}"
            if args.emit == "patterns":
                out.write(_render(machine.bits, cols) + "\n")
            elif args.emit == "deltas":
                out.write(delta + "\n")
            else:
                out.write(_render(machine.bits, cols) + "\t" + delta + "\n")
        if args.cycles > 1:
            out.write(SEPARATOR + "\n")
    return 0


def cmd_count(args, out: TextIO) -> int:
    _, forest = _load(args.input)
    out.write(f"{analyze(forest).total}\n")
    return 0


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def _fmt_bits(xs) -> str:
    return "".join("*" if x is None else str(x) for x in xs)


def cmd_analyze(args, out: TextIO) -> int:
    _, f = _load(args.input)
    a = analyze(f)
    t = init_table(f, a)
    out.write("k\tlabel\tscope\tU\tV\tprev\tppro\tnpro\n")
    for k in range(1, f.n + 1):
        out.write(
            f"{k}\t{f.label_of[k]}\t{f.scope[k]}\t{_fmt_set(a.usets[k])}\t{_fmt_set(a.vsets[k])}"
            f"\t{a.prev[k]}\t{a.ppro[k]}\t{a.npro[k]}\n"
        )
    out.write("\nk\tcount\talpha\ttau\tomega\n")
    for k in range(1, f.n + 1):
        out.write(
            f"{k}\t{a.counts[k]}\t{_fmt_bits(t.alpha[k])}\t{_fmt_bits(t.tau[k])}\t{_fmt_bits(t.omega[k])}\n"
        )
    out.write(f"\nU0\t{_fmt_set(a.usets[0])}\ntotal\t{a.total}\nstart\t{t.start_string()}\n")
    return 0


def cmd_trace(args, out: TextIO) -> int:
    _, forest = _load(args.input)
    a = analyze(forest)
    machine = ActiveList(forest, a, init_table(forest, a))
    cols = _columns(forest, args.order)
    rows = 0
    for _ in range(args.cycles):
        out.write(f"{_render(machine.bits, cols)}\t{machine.render()}\n")
        rows += 1
        while args.steps is None or rows < args.steps:
            if machine.step() is HALF_PERIOD_END:
                break
            out.write(f"{_render(machine.bits, cols)}\t{machine.render()}\n")
            rows += 1
        else:
            return 0
        if args.cycles > 1:
            out.write(SEPARATOR + "\n")
    return 0


def _read_patterns(text: str) -> List[str]:
    pats = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line == SEPARATOR:
            break
        pats.append(line.split()[0])
    return pats


def cmd_verify(args, out: TextIO) -> int:
    if args.cap > DEFAULT_CAP:
        sys.stderr.write(f"warning: enumeration cap raised to {args.cap} bits; this may take very long\n")
    raw = parse_digraph(_read(args.input))
    if args.list:
        for p in enumerate_valid(raw, args.cap):
            out.write(p + "\n")
        return 0
    if args.patterns is None:
        raise ParseError("verify needs a pattern file (or --list)")
    if args.order == "preorder":
        labels = validate_and_normalize(raw).labels("preorder")
    else:
        labels = raw.vertex_labels
    path = GrayPath(tuple(labels), _read_patterns(_read(args.patterns)))
    report = verify_gray_path(path, raw, args.cap)
    out.write(report.render())
    return 0 if report.ok else 4


def cmd_family(args, out: TextIO) -> int:
    ends = None
    if args.ends:
        try:
            ends = tuple(int(x) for x in args.ends.split(","))
        except ValueError:
            raise ParseError(f"bad --ends {args.ends!r}")
    spec = FamilySpec(args.kind.replace("-", "_"), args.n, m=args.m, ends=ends)
    out.write(format_digraph(family_digraph(spec)))
    return 0


def cmd_mapping(args, out: TextIO) -> int:
    _, forest = _load(args.input)
    out.write(mapping_report(forest))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="forestgray", description="Gray listings of bit patterns obeying a totally acyclic digraph.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="constraint file (default: stdin)")
        return sp

    def with_order(sp):
        sp.add_argument("--order", choices=("original", "preorder"), default="original",
                        help="bit column order (default: input label order)")
        return sp

    g = with_order(with_input(sub.add_parser("gen", help="list every valid pattern")))
    g.add_argument("--engine", choices=("active-list", "coroutine"), default="active-list")
    g.add_argument("--emit", choices=("patterns", "deltas", "both"), default="patterns")
    g.add_argument("--cycles", type=_positive_int, default=1, help="listings to emit (default 1)")
    g.add_argument("--no-tco", action="store_true", help="coroutine engine: disable tail-call jumps")
    g.set_defaults(func=cmd_gen)

    with_input(sub.add_parser("count", help="number of valid patterns")).set_defaults(func=cmd_count)
    with_input(sub.add_parser("analyze", help="near sets, prev links and start tables")).set_defaults(func=cmd_analyze)
    with_input(sub.add_parser("mapping", help="preorder index for every label")).set_defaults(func=cmd_mapping)

    t = with_order(with_input(sub.add_parser("trace", help="patterns with the active list; sleepers get '*'")))
    t.add_argument("--cycles", type=_positive_int, default=1)
    t.add_argument("--steps", type=_positive_int, default=None, help="stop after this many rows")
    t.set_defaults(func=cmd_trace)

    v = with_order(sub.add_parser("verify", help="check a pattern listing against brute force"))
    v.add_argument("input", help="constraint file")
    v.add_argument("patterns", nargs="?", help="pattern file, one per line; stops at the first '-----'")
    v.add_argument("--list", action="store_true", help="print every valid pattern instead")
    v.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP, help="max bits to enumerate")
    v.set_defaults(func=cmd_verify)

    fam = sub.add_parser("family", help="write a named family as a constraint file")
    fam.add_argument("--kind", required=True, choices=KINDS + tuple(k.replace("_", "-") for k in KINDS if "_" in k))
    fam.add_argument("--n", type=int, required=True)
    fam.add_argument("--m", type=int, help="mixed_chain split point")
    fam.add_argument("--ends", help="multi_chain endpoints, e.g. 1,3,4")
    fam.set_defaults(func=cmd_family)
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except NotTotallyAcyclic as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except BrokenPipeError:
        return 0
    except (ParseError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
