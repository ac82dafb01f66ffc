"""Sparse temporal networks: labeled nodes plus a link map to temporal
quantities.

Networks are immutable after construction.  Two-mode networks carry their
event set as mode 1 and the participant set as mode 2; every link must run
from mode 1 to mode 2.  Undirected networks store each edge once with
tail <= head.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from . import tq
from .tq import TQ, TimeHorizon

KIND_GENERAL = "general"
KIND_INSTANT = "instant"
KIND_CUMULATIVE = "cumulative"
KINDS = (KIND_GENERAL, KIND_INSTANT, KIND_CUMULATIVE)


class NetworkError(ValueError):
    pass


@dataclass(frozen=True)
class Node:
    id: int
    label: str
    mode: int = 1


@dataclass(frozen=True)
class RankedLink:
    """One row of a top-links / top-loops extraction."""

    tail: int
    head: int
    tail_label: str
    head_label: str
    total: float
    quantity: TQ


class TemporalNetwork:
    def __init__(
        self,
        nodes: Iterable[Node],
        links: Mapping[tuple[int, int], TQ],
        horizon: TimeHorizon,
        directed: bool = True,
        kind: str = KIND_GENERAL,
    ):
        self.nodes: tuple[Node, ...] = tuple(nodes)
        self.links: dict[tuple[int, int], TQ] = dict(links)
        self.horizon = horizon
        self.directed = directed
        self.kind = kind
        self._validate()

    def _validate(self) -> None:
        if self.kind not in KINDS:
            raise NetworkError(f"unknown network kind {self.kind!r}")
        n = len(self.nodes)
        ids = [v.id for v in self.nodes]
        if ids != list(range(1, n + 1)):
            raise NetworkError("node ids must be contiguous from 1")
        for mode in (1, 2):
            labels = [v.label for v in self.nodes if v.mode == mode]
            if len(labels) != len(set(labels)):
                raise NetworkError(f"duplicate labels within mode {mode}")
        modes = {v.mode for v in self.nodes}
        if not modes <= {1, 2}:
            raise NetworkError("node modes must be 1 or 2")
        two_mode = 2 in modes
        by_id = {v.id: v for v in self.nodes}
        for (u, w), q in self.links.items():
            if u not in by_id or w not in by_id:
                raise NetworkError(f"link ({u}, {w}) references unknown node")
            if not q:
                raise NetworkError(f"link ({u}, {w}) carries an empty quantity")
            if not tq.is_canonical(q):
                raise NetworkError(f"link ({u}, {w}) quantity is not canonical")
            if two_mode and not (by_id[u].mode == 1 and by_id[w].mode == 2):
                raise NetworkError(
                    f"two-mode link ({u}, {w}) must run from mode 1 to mode 2")
            if not self.directed and u > w:
                raise NetworkError(
                    f"undirected link ({u}, {w}) must be stored with tail <= head")

    # -- basic views -----------------------------------------------------

    @property
    def is_two_mode(self) -> bool:
        return any(v.mode == 2 for v in self.nodes)

    def mode_ids(self, mode: int) -> list[int]:
        return [v.id for v in self.nodes if v.mode == mode]

    def node(self, node_id: int) -> Node:
        if not 1 <= node_id <= len(self.nodes):
            raise NetworkError(f"unknown node id {node_id}")
        return self.nodes[node_id - 1]

    def out_adjacency(self) -> dict[int, list[int]]:
        """tail -> sorted heads; undirected edges appear in both directions."""
        adj: dict[int, list[int]] = {}
        for (u, w) in self.links:
            adj.setdefault(u, []).append(w)
            if not self.directed and u != w:
                adj.setdefault(w, []).append(u)
        for heads in adj.values():
            heads.sort()
        return adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalNetwork):
            return NotImplemented
        return (self.nodes == other.nodes and self.links == other.links
                and self.horizon == other.horizon
                and self.directed == other.directed and self.kind == other.kind)

    def __repr__(self) -> str:
        return (f"TemporalNetwork({len(self.nodes)} nodes, "
                f"{len(self.links)} links, {self.horizon.first}-{self.horizon.last}, "
                f"{'directed' if self.directed else 'undirected'}, {self.kind})")


def index_by_label(net: TemporalNetwork, mode: Optional[int] = None) -> dict[str, int]:
    """label -> id map; restrict to one mode to disambiguate lifted views."""
    out: dict[str, int] = {}
    for v in net.nodes:
        if mode is not None and v.mode != mode:
            continue
        if v.label in out:
            raise NetworkError(f"duplicate label {v.label!r}; use a mode-restricted index")
        out[v.label] = v.id
    return out


def lookup_label(net: TemporalNetwork, label: str, mode: Optional[int] = None) -> int:
    idx = index_by_label(net, mode)
    if label not in idx:
        raise NetworkError(f"label {label!r} not found in network")
    return idx[label]


def verify_kind(net: TemporalNetwork) -> bool:
    """Re-check the declared kind invariant over all links."""
    if net.kind == KIND_CUMULATIVE:
        return all(tq.is_cumulative(q, net.horizon) for q in net.links.values())
    if net.kind == KIND_INSTANT:
        return all(len(q) == 1 and q[0][1] - q[0][0] == 1 for q in net.links.values())
    return True


def transpose(net: TemporalNetwork) -> TemporalNetwork:
    """Reverse every link; in two-mode networks the modes swap as well."""
    if not net.directed:
        return net
    nodes = tuple(Node(v.id, v.label, 3 - v.mode) for v in net.nodes) \
        if net.is_two_mode else net.nodes
    links = {(w, u): q for (u, w), q in net.links.items()}
    return TemporalNetwork(nodes, links, net.horizon, net.directed, net.kind)


def del_loops(net: TemporalNetwork) -> TemporalNetwork:
    if net.is_two_mode:
        raise NetworkError("loops are undefined in a two-mode network")
    links = {(u, w): q for (u, w), q in net.links.items() if u != w}
    return TemporalNetwork(net.nodes, links, net.horizon, net.directed, net.kind)


def square_to_one_mode(net: TemporalNetwork) -> TemporalNetwork:
    """Collapse a two-mode network whose row and column label sets coincide
    (e.g. a journal x journal product) into a one-mode network."""
    if not net.is_two_mode:
        return net
    rows = net.mode_ids(1)
    cols = net.mode_ids(2)
    row_labels = [net.node(i).label for i in rows]
    col_labels = {net.node(j).label: j for j in cols}
    if set(row_labels) != set(col_labels):
        raise NetworkError("row and column label sets differ; cannot collapse")
    new_id = {old: i + 1 for i, old in enumerate(rows)}
    for lab, j in col_labels.items():
        new_id[j] = new_id[rows[row_labels.index(lab)]]
    nodes = tuple(Node(new_id[i], net.node(i).label, 1) for i in rows)
    links = {(new_id[u], new_id[w]): q for (u, w), q in net.links.items()}
    return TemporalNetwork(nodes, links, net.horizon, True, net.kind)


def one_to_two_mode(net: TemporalNetwork) -> TemporalNetwork:
    """Lift a one-mode network into a two-mode view with the node set
    duplicated as rows (mode 1) and columns (mode 2)."""
    if net.is_two_mode:
        raise NetworkError("network is already two-mode")
    if not net.directed:
        raise NetworkError("lift an undirected network after symmetrizing it")
    n = len(net.nodes)
    nodes = tuple(Node(v.id, v.label, 1) for v in net.nodes) + tuple(
        Node(v.id + n, v.label, 2) for v in net.nodes)
    links = {(u, w + n): q for (u, w), q in net.links.items()}
    return TemporalNetwork(nodes, links, net.horizon, True, net.kind)
