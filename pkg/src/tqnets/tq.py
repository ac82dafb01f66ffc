"""Temporal quantities: piecewise-constant functions of integer time.

A temporal quantity is a sorted tuple of disjoint half-open intervals
``(s, f, v)``: the value is ``v`` on ``[s, f)`` and undefined elsewhere.
"Undefined" is the absence of an interval, not the semiring zero; an
explicit zero value is a legitimate, distinct state.

Sum is defined on the union of the activity sets (undefined acts as the
additive identity), product on the intersection (undefined absorbs).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .semiring import COMBINATORIAL, Semiring

Triple = tuple[int, int, float]
TQ = tuple[Triple, ...]

#: The nowhere-defined quantity; identity for tq_sum.
EMPTY: TQ = ()


@dataclass(frozen=True)
class TimeHorizon:
    """Inclusive year range [first, last]; intervals live in [first, last+1)."""

    first: int
    last: int

    def __post_init__(self) -> None:
        if self.first > self.last:
            raise ValueError(f"bad horizon: first {self.first} > last {self.last}")


def make(triples: Iterable[Sequence]) -> TQ:
    """Build a canonical temporal quantity from (s, f, v) triples.

    Validates ordering and disjointness, and merges adjacent intervals
    carrying the same value.
    """
    items = [(int(s), int(f), v) for s, f, v in triples]
    for s, f, _ in items:
        if s >= f:
            raise ValueError(f"empty interval ({s}, {f})")
    for (_, f1, _), (s2, _, _) in zip(items, items[1:]):
        if f1 > s2:
            raise ValueError("intervals overlap or are out of order")
    return _merge_adjacent(items)


def _merge_adjacent(items: list[Triple]) -> TQ:
    out: list[Triple] = []
    for s, f, v in items:
        if out and out[-1][1] == s and out[-1][2] == v:
            out[-1] = (out[-1][0], f, v)
        else:
            out.append((s, f, v))
    return tuple(out)


def is_canonical(a: TQ) -> bool:
    for s, f, _ in a:
        if s >= f:
            return False
    for (_, f1, v1), (s2, _, v2) in zip(a, a[1:]):
        if f1 > s2:
            return False
        if f1 == s2 and v1 == v2:
            return False
    return True


def value_at(a: TQ, t: int) -> Optional[float]:
    """Value at instant t, or None when undefined there."""
    idx = bisect_right(a, (t, float("inf"))) - 1
    if idx >= 0:
        s, f, v = a[idx]
        if s <= t < f:
            return v
    return None


def _segments(a: TQ, b: TQ):
    """Yield (s, f, va, vb) over elementary segments covered by a or b."""
    bounds = sorted({x for s, f, _ in a for x in (s, f)}
                    | {x for s, f, _ in b for x in (s, f)})
    ia = ib = 0
    for t0, t1 in zip(bounds, bounds[1:]):
        while ia < len(a) and a[ia][1] <= t0:
            ia += 1
        while ib < len(b) and b[ib][1] <= t0:
            ib += 1
        va = a[ia][2] if ia < len(a) and a[ia][0] <= t0 else None
        vb = b[ib][2] if ib < len(b) and b[ib][0] <= t0 else None
        if va is not None or vb is not None:
            yield t0, t1, va, vb


def tq_sum(a: TQ, b: TQ, sr: Semiring = COMBINATORIAL) -> TQ:
    """Parallel combination: defined on the union of activity sets."""
    if not a:
        return b
    if not b:
        return a
    out: list[Triple] = []
    for s, f, va, vb in _segments(a, b):
        if va is None:
            v = vb
        elif vb is None:
            v = va
        else:
            v = sr.add(va, vb)
        out.append((s, f, v))
    return _merge_adjacent(out)


def tq_prod(a: TQ, b: TQ, sr: Semiring = COMBINATORIAL) -> TQ:
    """Sequential combination: defined on the intersection of activity sets."""
    if not a or not b:
        return EMPTY
    out: list[Triple] = []
    for s, f, va, vb in _segments(a, b):
        if va is not None and vb is not None:
            out.append((s, f, sr.mul(va, vb)))
    return _merge_adjacent(out)


def ones(horizon: TimeHorizon, sr: Semiring = COMBINATORIAL) -> TQ:
    """The quantity equal to sr.one on the whole horizon; tq_prod identity."""
    return ((horizon.first, horizon.last + 1, sr.one),)


def tq_cum(a: TQ, horizon: TimeHorizon) -> TQ:
    """Running-sum transform: interval i extends from s_i to s_{i+1}
    (the final one to last+1) and carries the sum of values up to i."""
    if not a:
        return EMPTY
    if a[0][0] < horizon.first or a[-1][1] > horizon.last + 1:
        raise ValueError("quantity extends outside the horizon")
    out: list[Triple] = []
    run = 0
    for i, (s, _, v) in enumerate(a):
        run = run + v
        nxt = a[i + 1][0] if i + 1 < len(a) else horizon.last + 1
        out.append((s, nxt, run))
    return _merge_adjacent(out)


def is_cumulative(a: TQ, horizon: TimeHorizon) -> bool:
    """True iff activity, once started, persists to the horizon end with
    non-decreasing values."""
    if not a:
        return True
    if a[0][0] < horizon.first or a[-1][1] != horizon.last + 1:
        return False
    for (_, f1, v1), (s2, _, v2) in zip(a, a[1:]):
        if f1 != s2 or v2 < v1:
            return False
    return True


def tq_cut(a: TQ, threshold: float, strict: bool = True) -> TQ:
    """Keep intervals whose value exceeds (strict) or reaches (non-strict)
    the threshold; the rest become undefined."""
    if strict:
        kept = [t for t in a if t[2] > threshold]
    else:
        kept = [t for t in a if t[2] >= threshold]
    return _merge_adjacent(kept)


def cut_gt(a: TQ, threshold: float) -> TQ:
    return tq_cut(a, threshold, strict=True)


def cut_ge(a: TQ, threshold: float) -> TQ:
    return tq_cut(a, threshold, strict=False)


def tq_change_time(a: TQ, breakpoints: Sequence[int]) -> TQ:
    """Recode onto a coarser time scale.

    ``breakpoints`` p defines bands [p_i, p_{i+1}); band i (1-based)
    collects the sum of per-instant values falling inside it.  Bands are
    kept one triple each, so band boundaries remain visible even when
    consecutive bands carry equal values.
    """
    p = list(breakpoints)
    if len(p) < 2 or any(x >= y for x, y in zip(p, p[1:])):
        raise ValueError("breakpoints must be strictly ascending, length >= 2")
    if not a:
        return EMPTY
    if a[0][0] < p[0] or a[-1][1] > p[-1]:
        raise ValueError("quantity extends outside the breakpoint range")
    bands: dict[int, float] = {}
    for s, f, v in a:
        i = bisect_right(p, s) - 1
        while s < f:
            seg_end = min(f, p[i + 1])
            bands[i] = bands.get(i, 0) + v * (seg_end - s)
            s = seg_end
            i += 1
    return tuple((i + 1, i + 2, bands[i]) for i in sorted(bands))


def tq_total(a: TQ) -> float:
    """Time-length weighted sum of values."""
    return sum(v * (f - s) for s, f, v in a)


def tq_summary(a: TQ) -> Optional[tuple[int, int, float, float]]:
    """(min time, max time, min value, max value); None for the empty quantity."""
    if not a:
        return None
    values = [v for _, _, v in a]
    return (a[0][0], a[-1][1], min(values), max(values))


def pad_zero(a: TQ, horizon: TimeHorizon) -> TQ:
    """Fill undefined stretches of the horizon with explicit zeros."""
    first, end = horizon.first, horizon.last + 1
    out: list[Triple] = []
    t = first
    for s, f, v in a:
        if s < first or f > end:
            raise ValueError("quantity extends outside the horizon")
        if t < s:
            out.append((t, s, 0))
        out.append((s, f, v))
        t = f
    if t < end:
        out.append((t, end, 0))
    return _merge_adjacent(out)


def _fmt_value(v: float) -> str:
    if isinstance(v, float) and v.is_integer():
        return str(int(v))
    return str(v)


def render(a: TQ) -> str:
    """Listing-style text form: ``[(s, f, v), ...]``."""
    body = ", ".join(f"({s}, {f}, {_fmt_value(v)})" for s, f, v in a)
    return f"[{body}]"
