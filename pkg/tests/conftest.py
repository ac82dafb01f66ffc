"""Shared fixtures: the published worked-example quantities and the dense
per-instant oracles the sparse implementations are checked against."""

from __future__ import annotations

import random

import pytest

import tqnets as T
from tqnets.network import Node, TemporalNetwork

# worked-example quantities used across test modules

A_EXAMPLE = T.make([(1, 5, 2), (6, 8, 1), (11, 12, 3), (14, 16, 2),
                    (17, 18, 5), (19, 20, 1)])
B_EXAMPLE = T.make([(2, 3, 4), (4, 7, 3), (9, 10, 2), (13, 15, 5), (16, 21, 1)])

S_EXPECTED = T.make([
    (1, 2, 2), (2, 3, 6), (3, 4, 2), (4, 5, 5), (5, 6, 3), (6, 7, 4),
    (7, 8, 1), (9, 10, 2), (11, 12, 3), (13, 14, 5), (14, 15, 7),
    (15, 16, 2), (16, 17, 1), (17, 18, 6), (18, 19, 1), (19, 20, 2),
    (20, 21, 1),
])
P_EXPECTED = T.make([(2, 3, 8), (4, 5, 6), (6, 7, 3), (14, 15, 10),
                     (17, 18, 5), (19, 20, 1)])

PR = T.make([(2005, 2006, 4), (2006, 2007, 3), (2007, 2008, 4),
             (2008, 2009, 9), (2009, 2010, 4), (2010, 2011, 14),
             (2011, 2012, 5), (2012, 2013, 7), (2013, 2014, 2),
             (2014, 2015, 3), (2015, 2016, 6)])
CPR = T.make([(2005, 2006, 4), (2006, 2007, 7), (2007, 2008, 11),
              (2008, 2009, 20), (2009, 2010, 24), (2010, 2011, 38),
              (2011, 2012, 43), (2012, 2013, 50), (2013, 2014, 52),
              (2014, 2015, 55), (2015, 2017, 61)])

BD = T.make([(2005, 2006, 4), (2006, 2007, 3), (2007, 2008, 4),
             (2008, 2009, 7), (2009, 2010, 4), (2010, 2011, 11),
             (2011, 2013, 4), (2015, 2016, 1)])
RA = T.make([(1997, 1998, 3), (1998, 1999, 1), (2000, 2002, 1),
             (2004, 2005, 1), (2005, 2006, 2), (2006, 2008, 1),
             (2009, 2010, 2), (2011, 2012, 1), (2013, 2016, 1)])


# dense oracles

def dense(q: T.TQ, lo: int, hi: int) -> dict[int, float]:
    """Per-instant evaluation; undefined instants are absent."""
    out = {}
    for t in range(lo, hi):
        v = T.value_at(q, t)
        if v is not None:
            out[t] = v
    return out


def from_dense(values: dict[int, float]) -> T.TQ:
    triples = [(t, t + 1, v) for t, v in sorted(values.items())]
    return T.make(triples)


def dense_matrix(net: TemporalNetwork, t: int) -> dict[tuple[int, int], float]:
    out = {}
    for (u, w), q in net.links.items():
        v = T.value_at(q, t)
        if v is not None:
            out[(u, w)] = v
            if not net.directed and u != w:
                out[(w, u)] = v
    return out


def random_tq(rng: random.Random, lo: int = 0, hi: int = 30,
              max_intervals: int = 5, values=range(0, 9)) -> T.TQ:
    triples = []
    t = lo
    for _ in range(rng.randint(0, max_intervals)):
        s = t + rng.randint(0, 3)
        f = s + rng.randint(1, 4)
        if f > hi:
            break
        triples.append((s, f, rng.choice(values)))
        t = f
    return T.make(triples)


def random_two_mode(rng: random.Random, n1: int, n2: int, density: float,
                    horizon: T.TimeHorizon, kind: str = "general",
                    label_prefixes=("e", "p")) -> TemporalNetwork:
    nodes = tuple(Node(i + 1, f"{label_prefixes[0]}{i + 1}", 1) for i in range(n1)) \
        + tuple(Node(n1 + j + 1, f"{label_prefixes[1]}{j + 1}", 2) for j in range(n2))
    links = {}
    for i in range(1, n1 + 1):
        for j in range(n1 + 1, n1 + n2 + 1):
            if rng.random() < density:
                if kind == "cumulative":
                    s = rng.randint(horizon.first, horizon.last)
                    q = T.make([(s, horizon.last + 1, rng.randint(1, 5))])
                else:
                    q = random_tq(rng, horizon.first, horizon.last + 1)
                if q:
                    links[(i, j)] = q
    return TemporalNetwork(nodes, links, horizon, True, kind)


@pytest.fixture
def rng():
    return random.Random(20240817)
