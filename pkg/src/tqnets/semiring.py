"""Semiring value domains for temporal quantities.

A semiring bundles the two binary operations used when combining link
values: ``add`` for parallel combination and ``mul`` for sequential
combination, together with their neutral elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable


@dataclass(frozen=True)
class Semiring:
    """Value domain (A, add, mul, zero, one).

    ``eq`` is an equality-with-tolerance predicate used by tests and by
    canonicalization when merging adjacent intervals of real values.
    ``numeric`` marks instances whose values support ordering and running
    sums (needed by the cumulative transform).
    """

    name: str
    add: Callable[[float, float], float]
    mul: Callable[[float, float], float]
    zero: float
    one: float
    numeric: bool = True
    eq: Callable[[float, float], bool] = field(default=lambda x, y: x == y)


def _approx(x: float, y: float, tol: float = 1e-9) -> bool:
    if x == y:
        return True
    if math.isinf(x) or math.isinf(y):
        return x == y
    return abs(x - y) <= tol


#: Counting semiring: nonnegative reals with ordinary + and *.
COMBINATORIAL = Semiring(
    name="combinatorial",
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    zero=0,
    one=1,
    numeric=True,
    eq=_approx,
)

#: Shortest-path style semiring: (reals + infinity, min, +, inf, 0).
MINPLUS = Semiring(
    name="minplus",
    add=min,
    mul=lambda x, y: x + y,
    zero=math.inf,
    one=0,
    numeric=False,
    eq=_approx,
)
