"""Command-line surface: convert, insum, multiply, top, recode, chart.

Every command is a thin composition of the library operations; results go
to stdout or to files, timing and warnings to stderr.  Exit codes: 0 on
success, 1 on errors, 3 when input links had to be skipped and --quiet was
not given.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import algebra, charts, netsjson, pajek, tq
from .network import (
    NetworkError,
    TemporalNetwork,
    del_loops,
    lookup_label,
    one_to_two_mode,
    transpose,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SKIPPED = 3

LAST_ENV = "TQNETS_LAST"


def _eprint(*args) -> None:
    print(*args, file=sys.stderr)


def _default_last() -> int | None:
    raw = os.environ.get(LAST_ENV)
    return int(raw) if raw else None


def _load_network(path) -> TemporalNetwork:
    return netsjson.read_netsjson(path)


def _load_quantity(path, node: str | None) -> tq.TQ:
    """Quantity source: a triple-form CSV, or a netsJSON network plus a
    --node label whose in-sum is extracted."""
    if str(path).lower().endswith(".csv"):
        return netsjson.read_tq_csv(path)
    net = _load_network(path)
    if node is None:
        raise NetworkError(f"{path} is a network; pass --node to select a quantity")
    return algebra.net_in_sum(net, lookup_label(net, node))


def _print_quantity(q: tq.TQ) -> None:
    print(tq.render(q))
    summary = tq.tq_summary(q)
    if summary is not None:
        print(f"summary: {summary}")
    print(f"total: {tq._fmt_value(tq.tq_total(q))}")


def cmd_convert(args) -> int:
    t0 = time.perf_counter()
    static = pajek.parse_net(args.net)
    part = pajek.parse_clu(args.clu)
    temporalize = pajek.temporalize_one_mode if args.one_mode \
        else pajek.temporalize_two_mode
    net, report = temporalize(static, part, args.mode,
                              first=args.first, last=args.last)
    netsjson.write_netsjson(net, args.out)
    elapsed = time.perf_counter() - t0
    n1 = len(net.mode_ids(1))
    n2 = len(net.mode_ids(2))
    print(f"nodes: {n1}+{n2}  links: {len(net.links)}  "
          f"horizon: {net.horizon.first}-{net.horizon.last}  "
          f"skipped: {report.skipped}")
    _eprint(f"time used: {elapsed:.3f}s")
    if report.skipped and not args.quiet:
        _eprint(f"warning: {report.skipped} links skipped (event year missing "
                f"or outside the horizon)")
        return EXIT_SKIPPED
    return EXIT_OK


def cmd_insum(args) -> int:
    net = _load_network(args.net)
    q = algebra.net_in_sum(net, lookup_label(net, args.node))
    if args.cut_gt is not None:
        q = tq.cut_gt(q, args.cut_gt)
    elif args.cut_ge is not None:
        q = tq.cut_ge(q, args.cut_ge)
    _print_quantity(q)
    if args.csv:
        netsjson.export_tq_csv(q, args.csv)
    return EXIT_OK


def _as_two_mode(net: TemporalNetwork) -> TemporalNetwork:
    return net if net.is_two_mode else one_to_two_mode(net)


def cmd_multiply(args) -> int:
    t0 = time.perf_counter()
    a = _load_network(args.a)
    if args.two2one_cols:
        if args.b is not None or args.c is not None:
            raise NetworkError("--two2one-cols takes a single input network")
        out = algebra.two_to_one_cols(a)
    else:
        if args.b is None:
            raise NetworkError("multiply needs a second network (or --two2one-cols)")
        if args.transpose_a:
            a = transpose(a)
        a = _as_two_mode(a)
        b = _load_network(args.b)
        if args.c is not None:
            m = _as_two_mode(b)
            c = _as_two_mode(_load_network(args.c))
            out = algebra.triple_product(a, m, c)
        else:
            out = algebra.multiply(a, _as_two_mode(b))
    netsjson.write_netsjson(out, args.out)
    elapsed = time.perf_counter() - t0
    print(f"links: {len(out.links)}")
    _eprint(f"time used: {elapsed:.3f}s")
    return EXIT_OK


def cmd_top(args) -> int:
    net = _load_network(args.net)
    if args.drop_loops:
        net = del_loops(net)
    extract = algebra.top_loops if args.loops else algebra.top_links
    for rank, row in enumerate(extract(net, args.thresh), start=1):
        print(f"{rank}\t{row.tail_label}\t{row.head_label}\t"
              f"{tq._fmt_value(row.total)}\t{tq.render(row.quantity)}")
    return EXIT_OK


def cmd_recode(args) -> int:
    q = _load_quantity(args.source, args.node)
    breaks = [int(x) for x in args.breaks.split(",")]
    recoded = tq.tq_change_time(q, breaks)
    print("band\tperiod\tvalue")
    for s, _, v in recoded:
        print(f"{s}\t{breaks[s - 1]}-{breaks[s] - 1}\t{tq._fmt_value(v)}")
    return EXIT_OK


def cmd_chart(args) -> int:
    q = _load_quantity(args.source, args.node)
    if args.tmin is not None and args.tmax is not None and args.tmin >= args.tmax:
        raise NetworkError(f"--tmin {args.tmin} must be below --tmax {args.tmax}")
    if args.svg:
        charts.render_tq_chart(q, args.svg, tmin=args.tmin, tmax=args.tmax,
                               vmax=args.tqmax, title=args.title, fill=args.fill)
    if args.csv:
        netsjson.export_tq_csv(q, args.csv, per_instant=True)
    if not (args.svg or args.csv):
        raise NetworkError("chart needs --svg and/or --csv")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tqnets",
        description="Temporal bibliographic networks: convert, derive, query, chart.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="temporalize a Pajek net + year partition")
    p.add_argument("net", help="Pajek .net file")
    p.add_argument("clu", help="Pajek .clu year partition")
    p.add_argument("out", help="output netsJSON file")
    p.add_argument("--mode", choices=["instant", "cumulative"], default="instant")
    p.add_argument("--one-mode", action="store_true",
                   help="treat the input as a one-mode (citation) network")
    p.add_argument("--first", type=int, default=None)
    p.add_argument("--last", type=int, default=_default_last(),
                   help=f"horizon end (default: max partition year, or ${LAST_ENV})")
    p.add_argument("--quiet", action="store_true",
                   help="do not fail on skipped links")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("insum", help="temporal in-sum of a node")
    p.add_argument("net", help="netsJSON network")
    p.add_argument("--node", required=True, help="node label")
    p.add_argument("--cut-gt", type=float, default=None)
    p.add_argument("--cut-ge", type=float, default=None)
    p.add_argument("--csv", default=None, help="also export triples as CSV")
    p.set_defaults(func=cmd_insum)

    p = sub.add_parser("multiply", help="network product (or co-occurrence projection)")
    p.add_argument("a", help="left factor (netsJSON)")
    p.add_argument("b", nargs="?", default=None, help="right factor")
    p.add_argument("c", nargs="?", default=None, help="optional third factor")
    p.add_argument("--transpose-a", action="store_true")
    p.add_argument("--two2one-cols", action="store_true",
                   help="column co-occurrence projection of a single two-mode network")
    p.add_argument("-o", "--out", required=True, help="output netsJSON file")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("top", help="rank links or loops by total")
    p.add_argument("net", help="netsJSON network")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--links", dest="loops", action="store_false", default=False)
    group.add_argument("--loops", dest="loops", action="store_true")
    p.add_argument("--thresh", type=float, default=0.0)
    p.add_argument("--drop-loops", action="store_true")
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("recode", help="recode a quantity onto coarser periods")
    p.add_argument("source", help="triple CSV or netsJSON network")
    p.add_argument("--node", default=None, help="node label (netsJSON sources)")
    p.add_argument("--breaks", required=True, help="comma-separated breakpoints")
    p.set_defaults(func=cmd_recode)

    p = sub.add_parser("chart", help="render a quantity as a bar chart")
    p.add_argument("source", help="triple CSV or netsJSON network")
    p.add_argument("--node", default=None, help="node label (netsJSON sources)")
    p.add_argument("--svg", default=None, help="figure output (svg/png by extension)")
    p.add_argument("--csv", default=None, help="per-instant CSV output")
    p.add_argument("--tmin", type=int, default=None)
    p.add_argument("--tmax", type=int, default=None)
    p.add_argument("--tqmax", type=float, default=None, help="value-axis maximum")
    p.add_argument("--title", default="")
    p.add_argument("--fill", default="red")
    p.set_defaults(func=cmd_chart)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NetworkError, pajek.PajekError, ValueError, OSError) as err:
        _eprint(f"error: {err}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
