"""netsJSON interchange format and CSV export of temporal quantities.

Schema (version tqnet-netsjson/1):

    {
      "format": "tqnet-netsjson/1",
      "info":  {"kind": ..., "directed": ..., "time": {"first", "last"},
                "counts": {"nodes", "links"}},
      "nodes": [{"id", "lab", "mode"}, ...],            # sorted by id
      "links": [{"tail", "head", "tq": [[s, f, v], ...]}, ...]
                                                        # sorted by (tail, head)
    }

Output ordering and number formatting are fixed, so serialization is
byte-deterministic; integral values are written as JSON integers, other
reals with their shortest round-trip representation.
"""

from __future__ import annotations

import csv
import json
import sys
from typing import TextIO

import jsonschema

from . import tq
from .network import KINDS, NetworkError, Node, TemporalNetwork, verify_kind
from .tq import TQ, TimeHorizon

FORMAT = "tqnet-netsjson/1"

_TRIPLE = {
    "type": "array",
    "minItems": 3,
    "maxItems": 3,
    "prefixItems": [
        {"type": "integer"},
        {"type": "integer"},
        {"type": "number"},
    ],
}

SCHEMA = {
    "type": "object",
    "required": ["format", "info", "nodes", "links"],
    "properties": {
        "format": {"const": FORMAT},
        "info": {
            "type": "object",
            "required": ["kind", "directed", "time"],
            "properties": {
                "kind": {"enum": list(KINDS)},
                "directed": {"type": "boolean"},
                "time": {
                    "type": "object",
                    "required": ["first", "last"],
                    "properties": {
                        "first": {"type": "integer"},
                        "last": {"type": "integer"},
                    },
                },
            },
        },
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "lab", "mode"],
                "properties": {
                    "id": {"type": "integer", "minimum": 1},
                    "lab": {"type": "string"},
                    "mode": {"enum": [1, 2]},
                },
            },
        },
        "links": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tail", "head", "tq"],
                "properties": {
                    "tail": {"type": "integer", "minimum": 1},
                    "head": {"type": "integer", "minimum": 1},
                    "tq": {"type": "array", "minItems": 1, "items": _TRIPLE},
                },
            },
        },
    },
}


def _open(path, mode: str = "r") -> TextIO:
    if path == "-":
        return sys.stdin if "r" in mode else sys.stdout
    return open(path, mode, encoding="utf-8")


def _num(v: float):
    if isinstance(v, float) and v.is_integer():
        return int(v)
    return v


def network_to_dict(net: TemporalNetwork) -> dict:
    return {
        "format": FORMAT,
        "info": {
            "kind": net.kind,
            "directed": net.directed,
            "time": {"first": net.horizon.first, "last": net.horizon.last},
            "counts": {"nodes": len(net.nodes), "links": len(net.links)},
        },
        "nodes": [
            {"id": v.id, "lab": v.label, "mode": v.mode} for v in net.nodes
        ],
        "links": [
            {"tail": u, "head": w,
             "tq": [[s, f, _num(v)] for s, f, v in net.links[(u, w)]]}
            for u, w in sorted(net.links)
        ],
    }


def write_netsjson(net: TemporalNetwork, path) -> None:
    with _open(path, "w") as fh:
        json.dump(network_to_dict(net), fh, indent=2)
        fh.write("\n")


def network_from_dict(doc: dict) -> TemporalNetwork:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as err:
        raise NetworkError(f"invalid netsJSON at {err.json_path}: {err.message}") from None
    nodes = tuple(Node(n["id"], n["lab"], n["mode"]) for n in doc["nodes"])
    links: dict[tuple[int, int], TQ] = {}
    for i, link in enumerate(doc["links"]):
        key = (link["tail"], link["head"])
        if key in links:
            raise NetworkError(f"invalid netsJSON at $.links[{i}]: duplicate link {key}")
        links[key] = tq.make(link["tq"])
    info = doc["info"]
    net = TemporalNetwork(
        nodes, links,
        TimeHorizon(info["time"]["first"], info["time"]["last"]),
        info["directed"], info["kind"],
    )
    if not verify_kind(net):
        raise NetworkError(f"network does not satisfy its declared kind {net.kind!r}")
    return net


def read_netsjson(path) -> TemporalNetwork:
    with _open(path) as fh:
        return network_from_dict(json.load(fh))


def export_tq_csv(q: TQ, path, per_instant: bool = False) -> None:
    """Write a quantity as CSV: triple rows (start,finish,value) or one row
    per instant (t,value) for direct bar plotting."""
    with _open(path, "w") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if per_instant:
            writer.writerow(["t", "value"])
            for s, f, v in q:
                for t in range(s, f):
                    writer.writerow([t, _num(v)])
        else:
            writer.writerow(["start", "finish", "value"])
            for s, f, v in q:
                writer.writerow([s, f, _num(v)])


def read_tq_csv(path) -> TQ:
    """Read a triple-form CSV (start,finish,value) back into a quantity."""
    with _open(path) as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["start", "finish", "value"]:
            raise NetworkError(f"{path}: expected CSV header start,finish,value")
        triples = []
        for row in reader:
            if not row:
                continue
            triples.append((int(row[0]), int(row[1]), float(row[2])))
    return tq.make(triples)
