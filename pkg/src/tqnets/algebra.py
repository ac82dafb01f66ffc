"""Temporal network algebra: semiring multiplication, co-occurrence
projection, in/out sums, row normalization and top extraction.

Multiplication is sparse: it touches only stored links, row by row, with a
fixed accumulation order so floating-point results are reproducible.
"""

from __future__ import annotations

from . import tq
from .network import (
    KIND_CUMULATIVE,
    KIND_GENERAL,
    NetworkError,
    Node,
    RankedLink,
    TemporalNetwork,
    square_to_one_mode,
)
from .semiring import COMBINATORIAL, Semiring
from .tq import TQ


def _product_kind(a: TemporalNetwork, b: TemporalNetwork) -> str:
    if a.kind == KIND_CUMULATIVE and b.kind == KIND_CUMULATIVE:
        return KIND_CUMULATIVE
    return KIND_GENERAL


def _mid_map(a: TemporalNetwork, b: TemporalNetwork) -> dict[int, int]:
    """Map a's column ids to b's row ids by label; the two sets must match."""
    a_cols = {a.node(i).label: i for i in a.mode_ids(2)}
    b_rows = {b.node(i).label: i for i in b.mode_ids(1)}
    for lab in sorted(a_cols.keys() | b_rows.keys()):
        if lab not in b_rows:
            raise NetworkError(f"mid-dimension label {lab!r} missing from right factor")
        if lab not in a_cols:
            raise NetworkError(f"mid-dimension label {lab!r} missing from left factor")
    return {a_cols[lab]: b_rows[lab] for lab in a_cols}


def multiply(a: TemporalNetwork, b: TemporalNetwork,
             sr: Semiring = COMBINATORIAL) -> TemporalNetwork:
    """Product network on a's rows x b's columns; entry (i, j) is the
    tq_sum over shared middle nodes p of tq_prod(a[i,p], b[p,j])."""
    if not (a.is_two_mode and b.is_two_mode):
        raise NetworkError("multiply expects two-mode factors; lift one-mode inputs")
    if a.horizon != b.horizon:
        raise NetworkError(f"horizon mismatch: {a.horizon} vs {b.horizon}")
    mid = _mid_map(a, b)

    rows = a.mode_ids(1)
    cols = b.mode_ids(2)
    row_new = {old: i + 1 for i, old in enumerate(rows)}
    col_new = {old: i + 1 + len(rows) for i, old in enumerate(cols)}
    nodes = tuple(Node(row_new[i], a.node(i).label, 1) for i in rows) + tuple(
        Node(col_new[j], b.node(j).label, 2) for j in cols)

    adj_a = a.out_adjacency()
    adj_b = b.out_adjacency()
    links: dict[tuple[int, int], TQ] = {}
    for i in rows:
        acc: dict[int, TQ] = {}
        for p in adj_a.get(i, ()):
            bp = mid[p]
            qa = a.links[(i, p)]
            for j in adj_b.get(bp, ()):
                prod = tq.tq_prod(qa, b.links[(bp, j)], sr)
                if prod:
                    acc[j] = tq.tq_sum(acc.get(j, tq.EMPTY), prod, sr)
        for j in sorted(acc):
            if acc[j]:
                links[(row_new[i], col_new[j])] = acc[j]
    return TemporalNetwork(nodes, links, a.horizon, True, _product_kind(a, b))


def triple_product(a: TemporalNetwork, m: TemporalNetwork, b: TemporalNetwork,
                   sr: Semiring = COMBINATORIAL) -> TemporalNetwork:
    """Left-to-right chained product a . m . b (factors as supplied).

    A square result (row and column labels coincide, as in journal-to-journal
    citation products) is collapsed to one mode so loops become addressable.
    """
    out = multiply(multiply(a, m, sr), b, sr)
    row_labels = {out.node(i).label for i in out.mode_ids(1)}
    col_labels = {out.node(j).label for j in out.mode_ids(2)}
    if row_labels == col_labels:
        out = square_to_one_mode(out)
    return out


def two_to_one_cols(a: TemporalNetwork, sr: Semiring = COMBINATORIAL) -> TemporalNetwork:
    """Column co-occurrence projection: transpose(a) . a folded onto the
    column node set, stored undirected with loops retained.

    The loop (p, p) counts the events in which p took part; an off-diagonal
    entry (p, q) counts the events shared by p and q.
    """
    if not a.is_two_mode:
        raise NetworkError("two_to_one_cols expects a two-mode network")
    cols = a.mode_ids(2)
    new_id = {old: i + 1 for i, old in enumerate(cols)}
    nodes = tuple(Node(new_id[j], a.node(j).label, 1) for j in cols)

    adj = a.out_adjacency()
    links: dict[tuple[int, int], TQ] = {}
    for e in a.mode_ids(1):
        parts = adj.get(e, ())
        for xi, x in enumerate(parts):
            qx = a.links[(e, x)]
            for y in parts[xi:]:
                prod = tq.tq_prod(qx, a.links[(e, y)], sr)
                if prod:
                    key = (new_id[x], new_id[y])
                    links[key] = tq.tq_sum(links.get(key, tq.EMPTY), prod, sr)
    return TemporalNetwork(nodes, links, a.horizon, False, _product_kind(a, a))


def net_in_sum(net: TemporalNetwork, node_id: int, sr: Semiring = COMBINATORIAL) -> TQ:
    """Sum of the quantities on links entering the node (incident links in
    an undirected network).  No zero padding; see pad_zero for the padded
    variant."""
    net.node(node_id)
    acc = tq.EMPTY
    for (u, w), q in sorted(net.links.items()):
        if w == node_id or (not net.directed and u == node_id and u != w):
            acc = tq.tq_sum(acc, q, sr)
    return acc


def net_out_sum(net: TemporalNetwork, node_id: int, sr: Semiring = COMBINATORIAL) -> TQ:
    net.node(node_id)
    acc = tq.EMPTY
    for (u, w), q in sorted(net.links.items()):
        if u == node_id or (not net.directed and w == node_id and u != w):
            acc = tq.tq_sum(acc, q, sr)
    return acc


def _div_rowsum(q: TQ, rowsum: TQ) -> TQ:
    out = []
    for s, f, vq, vr in tq._segments(q, rowsum):
        if vq is None:
            continue
        out.append((s, f, vq / max(1, vr)))
    return tq._merge_adjacent(out)


def normalize_rows(net: TemporalNetwork) -> TemporalNetwork:
    """Fractional-credit normalization: at each instant every entry of a row
    is divided by max(1, the row's total at that instant)."""
    if not net.directed:
        raise NetworkError("normalize_rows expects a directed network")
    rowsums: dict[int, TQ] = {}
    links: dict[tuple[int, int], TQ] = {}
    for (u, w), q in sorted(net.links.items()):
        rowsums[u] = tq.tq_sum(rowsums.get(u, tq.EMPTY), q)
    for (u, w), q in net.links.items():
        links[(u, w)] = _div_rowsum(q, rowsums[u])
    kind = KIND_GENERAL if net.kind == KIND_CUMULATIVE else net.kind
    return TemporalNetwork(net.nodes, links, net.horizon, net.directed, kind)


def _ranked(net: TemporalNetwork, items) -> list[RankedLink]:
    rows = [
        RankedLink(u, w, net.node(u).label, net.node(w).label, tq.tq_total(q), q)
        for (u, w), q in items
    ]
    rows.sort(key=lambda r: (-r.total, r.tail_label, r.head_label))
    return rows


def top_links(net: TemporalNetwork, threshold: float) -> list[RankedLink]:
    """Non-loop links with total >= threshold, heaviest first; ties break on
    (tail label, head label)."""
    items = [((u, w), q) for (u, w), q in net.links.items()
             if u != w and tq.tq_total(q) >= threshold]
    return _ranked(net, items)


def top_loops(net: TemporalNetwork, threshold: float) -> list[RankedLink]:
    items = [((u, w), q) for (u, w), q in net.links.items()
             if u == w and tq.tq_total(q) >= threshold]
    return _ranked(net, items)
