"""Pajek .net / .clu readers and writers, plus temporalization of a static
network with a year partition.

Supported .net subset: ``*vertices N`` (one-mode) or ``*vertices N N1``
(two-mode) followed by optional vertex lines ``id "label"``, then any
number of ``*arcs`` / ``*edges`` sections with ``tail head [weight]``
lines.  Section keywords are case-insensitive; blank lines and lines
starting with ``%`` are skipped.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional, TextIO

from . import tq
from .network import KIND_CUMULATIVE, KIND_INSTANT, NetworkError, Node, TemporalNetwork
from .tq import TQ, TimeHorizon


class PajekError(ValueError):
    pass


@dataclass
class StaticNetwork:
    """Parsed .net file, before temporalization."""

    labels: list[str]
    n_mode1: Optional[int]  # None for one-mode networks
    arcs: list[tuple[int, int, float]] = field(default_factory=list)
    edges: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def is_two_mode(self) -> bool:
        return self.n_mode1 is not None


@dataclass
class TimePartition:
    """Per-node integer years, aligned with a .net file's vertex order."""

    values: list[int]

    def valid_years(self) -> list[int]:
        return [y for y in self.values if y > 0]


@dataclass
class TemporalizeReport:
    kept: int = 0
    skipped: int = 0


def _open(path, mode: str = "r") -> TextIO:
    if path == "-":
        return sys.stdin if "r" in mode else sys.stdout
    return open(path, mode, encoding="utf-8")


def _lines(fh: TextIO):
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        yield lineno, line


def _parse_vertex_line(line: str, lineno: int) -> tuple[int, str]:
    head, _, rest = line.partition(" ")
    try:
        vid = int(head)
    except ValueError:
        raise PajekError(f"line {lineno}: bad vertex id {head!r}") from None
    rest = rest.strip()
    if not rest:
        return vid, str(vid)
    if rest.startswith('"'):
        end = rest.find('"', 1)
        if end < 0:
            raise PajekError(f"line {lineno}: unterminated quoted label")
        return vid, rest[1:end]
    return vid, rest.split()[0]


def parse_net(path) -> StaticNetwork:
    with _open(path) as fh:
        return _parse_net_stream(fh)


def _parse_net_stream(fh: TextIO) -> StaticNetwork:
    n = n1 = None
    labels: list[Optional[str]] = []
    defined: set[int] = set()
    arcs: list[tuple[int, int, float]] = []
    edges: list[tuple[int, int, float]] = []
    section = None

    for lineno, line in _lines(fh):
        if line.startswith("*"):
            parts = line.split()
            key = parts[0].lower()
            if key == "*vertices":
                if n is not None:
                    raise PajekError(f"line {lineno}: repeated *vertices header")
                try:
                    n = int(parts[1])
                    n1 = int(parts[2]) if len(parts) > 2 else None
                except (IndexError, ValueError):
                    raise PajekError(f"line {lineno}: malformed *vertices header") from None
                if n < 0 or (n1 is not None and not 0 <= n1 <= n):
                    raise PajekError(f"line {lineno}: bad vertex counts")
                labels = [None] * n
                section = "vertices"
            elif key in ("*arcs", "*edges"):
                if n is None:
                    raise PajekError(f"line {lineno}: {key} before *vertices")
                section = key[1:]
            else:
                raise PajekError(f"line {lineno}: unsupported section {parts[0]!r}")
            continue

        if section == "vertices":
            vid, lab = _parse_vertex_line(line, lineno)
            if not 1 <= vid <= n:
                raise PajekError(f"line {lineno}: vertex id {vid} out of range 1..{n}")
            if vid in defined:
                raise PajekError(f"line {lineno}: vertex {vid} redefined")
            defined.add(vid)
            labels[vid - 1] = lab
        elif section in ("arcs", "edges"):
            parts = line.split()
            if len(parts) not in (2, 3):
                raise PajekError(f"line {lineno}: malformed link line")
            try:
                u, w = int(parts[0]), int(parts[1])
                weight = float(parts[2]) if len(parts) == 3 else 1.0
            except ValueError:
                raise PajekError(f"line {lineno}: malformed link line") from None
            if not (1 <= u <= n and 1 <= w <= n):
                raise PajekError(f"line {lineno}: link ({u}, {w}) out of range 1..{n}")
            (arcs if section == "arcs" else edges).append((u, w, weight))
        else:
            raise PajekError(f"line {lineno}: data outside any section")

    if n is None:
        raise PajekError("missing *vertices header")
    final = [lab if lab is not None else str(i + 1) for i, lab in enumerate(labels)]
    return StaticNetwork(final, n1, arcs, edges)


def write_net(net: StaticNetwork, path) -> None:
    """Emit the canonical form: always-quoted labels, one section per kind."""
    with _open(path, "w") as fh:
        header = f"*vertices {len(net.labels)}"
        if net.n_mode1 is not None:
            header += f" {net.n_mode1}"
        fh.write(header + "\n")
        for i, lab in enumerate(net.labels, start=1):
            fh.write(f'{i} "{lab}"\n')
        for name, items in (("*arcs", net.arcs), ("*edges", net.edges)):
            if items:
                fh.write(name + "\n")
                for u, w, weight in items:
                    fh.write(f"{u} {w} {tq._fmt_value(weight)}\n")


def parse_clu(path) -> TimePartition:
    with _open(path) as fh:
        n = None
        values: list[int] = []
        for lineno, line in _lines(fh):
            if line.startswith("*"):
                parts = line.split()
                if parts[0].lower() != "*vertices" or len(parts) < 2:
                    raise PajekError(f"line {lineno}: malformed .clu header")
                try:
                    n = int(parts[1])
                except ValueError:
                    raise PajekError(f"line {lineno}: malformed .clu header") from None
                continue
            if n is None:
                raise PajekError(f"line {lineno}: value before *vertices header")
            try:
                values.append(int(line.split()[0]))
            except ValueError:
                raise PajekError(f"line {lineno}: bad partition value {line!r}") from None
        if n is None:
            raise PajekError("missing *vertices header")
        if len(values) != n:
            raise PajekError(f"expected {n} partition values, found {len(values)}")
    return TimePartition(values)


def write_clu(part: TimePartition, path) -> None:
    with _open(path, "w") as fh:
        fh.write(f"*vertices {len(part.values)}\n")
        for v in part.values:
            fh.write(f"{v}\n")


def _derive_horizon(part: TimePartition, first: Optional[int],
                    last: Optional[int]) -> TimeHorizon:
    valid = part.valid_years()
    if not valid and (first is None or last is None):
        raise NetworkError("partition has no valid (positive) years; pass first/last")
    return TimeHorizon(first if first is not None else min(valid),
                       last if last is not None else max(valid))


def _event_tq(year: int, weight: float, mode: str, horizon: TimeHorizon) -> TQ:
    if mode == KIND_INSTANT:
        return ((year, year + 1, weight),)
    return ((year, horizon.last + 1, weight),)


def _check_mode(mode: str) -> None:
    if mode not in (KIND_INSTANT, KIND_CUMULATIVE):
        raise NetworkError(f"temporalization mode must be instant or cumulative, got {mode!r}")


def temporalize_two_mode(
    net: StaticNetwork,
    part: TimePartition,
    mode: str,
    first: Optional[int] = None,
    last: Optional[int] = None,
) -> tuple[TemporalNetwork, TemporalizeReport]:
    """Date every (event, participant) link by the event's partition year.

    Links whose event year is missing (<= 0) or outside the horizon are
    skipped and counted in the report.
    """
    _check_mode(mode)
    if not net.is_two_mode:
        raise NetworkError("temporalize_two_mode expects a two-mode network")
    n1 = net.n_mode1
    if len(part.values) not in (n1, len(net.labels)):
        raise NetworkError(
            f"partition length {len(part.values)} does not match "
            f"{n1} mode-1 vertices")
    horizon = _derive_horizon(TimePartition(part.values[:n1]), first, last)

    report = TemporalizeReport()
    links: dict[tuple[int, int], TQ] = {}
    for u, w, weight in net.arcs + net.edges:
        if u > n1 and w <= n1:  # tolerate links written participant-first
            u, w = w, u
        if not (u <= n1 < w):
            raise NetworkError(f"link ({u}, {w}) does not run from mode 1 to mode 2")
        year = part.values[u - 1]
        if year <= 0 or not horizon.first <= year <= horizon.last:
            report.skipped += 1
            continue
        q = _event_tq(year, weight, mode, horizon)
        if (u, w) in links:
            links[(u, w)] = tq.tq_sum(links[(u, w)], q)
        else:
            links[(u, w)] = q
        report.kept += 1

    nodes = tuple(Node(i + 1, lab, 1 if i < n1 else 2)
                  for i, lab in enumerate(net.labels))
    return TemporalNetwork(nodes, links, horizon, True, mode), report


def temporalize_one_mode(
    net: StaticNetwork,
    part: TimePartition,
    mode: str,
    first: Optional[int] = None,
    last: Optional[int] = None,
) -> tuple[TemporalNetwork, TemporalizeReport]:
    """Date every arc by its tail node's partition year (a citation becomes
    active when the citing work appears).  Undirected edges are expanded
    into two arcs, each dated by its own tail."""
    _check_mode(mode)
    if net.is_two_mode:
        raise NetworkError("temporalize_one_mode expects a one-mode network")
    if len(part.values) != len(net.labels):
        raise NetworkError(
            f"partition length {len(part.values)} does not match "
            f"{len(net.labels)} vertices")
    horizon = _derive_horizon(part, first, last)

    all_arcs = list(net.arcs)
    for u, w, weight in net.edges:
        all_arcs.append((u, w, weight))
        if u != w:
            all_arcs.append((w, u, weight))

    report = TemporalizeReport()
    links: dict[tuple[int, int], TQ] = {}
    for u, w, weight in all_arcs:
        year = part.values[u - 1]
        if year <= 0 or not horizon.first <= year <= horizon.last:
            report.skipped += 1
            continue
        q = _event_tq(year, weight, mode, horizon)
        if (u, w) in links:
            links[(u, w)] = tq.tq_sum(links[(u, w)], q)
        else:
            links[(u, w)] = q
        report.kept += 1

    nodes = tuple(Node(i + 1, lab, 1) for i, lab in enumerate(net.labels))
    return TemporalNetwork(nodes, links, horizon, True, mode), report
