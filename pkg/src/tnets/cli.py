"""Command-line entry point: ``tnets <verb> ...``."""

from __future__ import annotations

import argparse
import contextlib
import random
import sys

from . import debruijn as db
from .euler import count_cycles_best, enumerate_cycles, write_cycles
from .graph_core import debruijn_graph, double, is_connected, read_tnet, write_tnet
from .harness import debruijn_formula, new_report, verify_all
from .splitting import build_levels

EXIT_INPUT = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str):
    with open(path) as fh:
        return read_tnet(fh.read())


def cmd_gen(args, out, err):
    length = (1 << (args.n - 1)) - args.n if args.n >= 2 else 0
    if args.random:
        rng = random.Random(args.seed)
        bits = "".join(rng.choice("01") for _ in range(length))
    elif args.s is not None:
        bits = args.s
    else:
        raise ValueError("gen needs -s <bits> or --random")
    out.write(f"{db.rho(args.n, bits)}\n")


def cmd_rank(args, out, err):
    r, b0 = db.b_split(db.parse(args.sequence, args.n))
    if r:
        err.write(f"rotation {r}\n")
    out.write(db.rho_inverse(b0) + "\n")


def cmd_count(args, out, err):
    net = _load(args.tnet)
    if args.method == "enum":
        out.write(f"{len(enumerate_cycles(net))}\n")
    else:
        out.write(f"{count_cycles_best(net)}\n")


def cmd_double(args, out, err):
    out.write(write_tnet(double(_load(args.tnet))))


def cmd_enumerate(args, out, err):
    out.write(write_cycles(enumerate_cycles(_load(args.tnet))))


def cmd_levels(args, out, err):
    levels = build_levels(_load(args.tnet))
    out.write(f"{'level':>5}  {'graphs':>7}  {'connected':>9}  {'cycles':>8}\n")
    for i, level in enumerate(levels):
        connected = sum(1 for w in level if is_connected(w.graph))
        cycles = sum(len(enumerate_cycles(w.graph)) for w in level)
        out.write(f"{i:>5}  {len(level):>7}  {connected:>9}  {cycles:>8}\n")


def cmd_verify(args, out, err):
    if args.debruijn is not None:
        net = debruijn_graph(args.debruijn)
        rep = new_report(net)
        rep.run("debruijn_formula", lambda: debruijn_formula(args.debruijn), lambda: count_cycles_best(net))
        rep.extend(verify_all(net))
    elif args.tnet:
        rep = verify_all(_load(args.tnet))
    else:
        raise ValueError("verify needs a T-net file or --debruijn n")
    out.write(rep.table() if args.table else rep.lines())
    return 0 if rep.passed else EXIT_VERIFY


def cmd_stanley_encode(args, out, err):
    out.write(db.stanley_encode(args.seq1, args.seq2, args.n) + "\n")


def cmd_stanley_decode(args, out, err):
    b1, b2 = db.stanley_decode(args.bits, args.n)
    out.write(f"{b1}\n{b2}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tnets", description="T-net doubling, Eulerian cycles and de Bruijn ranking")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="print rho_n(bits)")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-s", help="bit string of length 2^(n-1)-n")
    g.add_argument("--random", action="store_true")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rank", help="print the bit string ranking a sequence")
    r.add_argument("-n", type=int, required=True)
    r.add_argument("sequence")
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("count", help="count Eulerian cycles")
    c.add_argument("tnet")
    c.add_argument("--method", choices=("best", "enum"), default="best")
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("double", help="print the doubled net")
    d.add_argument("tnet")
    d.set_defaults(func=cmd_double)

    e = sub.add_parser("enumerate", help="print all Eulerian cycles")
    e.add_argument("tnet")
    e.set_defaults(func=cmd_enumerate)

    lv = sub.add_parser("levels", help="per-level population and cycle counts")
    lv.add_argument("tnet")
    lv.set_defaults(func=cmd_levels)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("tnet", nargs="?")
    v.add_argument("--debruijn", type=int, metavar="n")
    v.add_argument("--table", action="store_true", help="plain-text table instead of CHECK lines")
    v.set_defaults(func=cmd_verify)

    se = sub.add_parser("stanley-encode", help="pair of sequences -> 2^n bits")
    se.add_argument("seq1")
    se.add_argument("seq2")
    se.add_argument("-n", type=int, required=True)
    se.set_defaults(func=cmd_stanley_encode)

    sd = sub.add_parser("stanley-decode", help="2^n bits -> pair of sequences")
    sd.add_argument("bits")
    sd.add_argument("-n", type=int, required=True)
    sd.set_defaults(func=cmd_stanley_decode)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err) or 0
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
