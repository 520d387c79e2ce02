"""Barcodes: finite lists of real intervals and their basic geometry.

A barcode is an ordered list of bars (birth, death) with birth < death.
Labels are implicit 1-based positions; relabeling is always explicit.  All
values are immutable and all operations here are pure functions, so they are
safe to share between threads.

Levels: at level k every bar contributes the 2^k + 1 points

    birth + l * (death - birth) / 2^k     for l = 0 .. 2^k,

computed directly from this formula (never by repeated addition) so rounding
cannot drift and flip an ordering.  A barcode is k-strict when all of these
points, over all bars, are pairwise distinct.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    InvalidBarError,
    InvalidLabelError,
    InvalidScaleError,
    NotStrictError,
    ParseError,
    RetriesExhaustedError,
)
from .rng import SplitMix64


@dataclass(frozen=True)
class Bar:
    """A single interval; birth < death strictly."""

    birth: float
    death: float

    def __post_init__(self):
        if not (self.birth < self.death):
            raise InvalidBarError(
                f"bar ({self.birth!r}, {self.death!r}) needs birth < death"
            )

    @property
    def length(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class Barcode:
    """An ordered, non-empty list of bars; label i is position i (1-based)."""

    bars: tuple[Bar, ...]

    def __post_init__(self):
        if len(self.bars) == 0:
            raise InvalidBarError("barcode needs at least one bar")

    def __len__(self) -> int:
        return len(self.bars)

    def bar(self, label: int) -> Bar:
        """The bar with 1-based label ``label``."""
        if not 1 <= label <= len(self.bars):
            raise InvalidLabelError(f"label {label} out of range 1..{len(self.bars)}")
        return self.bars[label - 1]

    def pairs(self) -> list[tuple[float, float]]:
        return [(b.birth, b.death) for b in self.bars]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "Barcode":
        return cls(tuple(Bar(float(b), float(d)) for b, d in pairs))


@dataclass(frozen=True)
class IntervalGraph:
    """Bars as vertices 1..n; an edge where two open intervals intersect."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]  # pairs (i, j) with i < j


def sample_points(barcode: Barcode, k: int) -> list[tuple[float, int]]:
    """All level-k sample points as (value, bar label), grouped by bar.

    Within a bar the points appear with l ascending, so the first is the
    birth and the last the death.
    """
    step = 1 << k
    points: list[tuple[float, int]] = []
    for label, bar in enumerate(barcode.bars, start=1):
        length = bar.death - bar.birth
        for ell in range(step + 1):
            points.append((bar.birth + ell * length / step, label))
    return points


def strictness_collisions(
    barcode: Barcode, k: int, eps: float = 0.0
) -> list[tuple[tuple[float, int], tuple[float, int]]]:
    """Pairs of level-k sample points at distance <= eps, if any.

    Only adjacent pairs in sorted order are reported; an empty list means
    the barcode is k-strict at tolerance eps.
    """
    points = sorted(sample_points(barcode, k))
    out = []
    for prev, cur in zip(points, points[1:]):
        if cur[0] - prev[0] <= eps:
            out.append((prev, cur))
    return out


def is_k_strict(barcode: Barcode, k: int, eps: float = 0.0) -> bool:
    """True iff all level-k sample points are pairwise distinct.

    Two values collide when |x - y| <= eps; eps = 0 is exact comparison of
    doubles.  k = 0 with eps = 0 is ordinary strictness: distinct births,
    distinct deaths, and no birth equal to any death.
    """
    return not strictness_collisions(barcode, k, eps)


def require_k_strict(barcode: Barcode, k: int, eps: float = 0.0) -> None:
    collisions = strictness_collisions(barcode, k, eps)
    if collisions:
        raise NotStrictError(k, collisions)


def crossing_number(barcode: Barcode, i: int, j: int) -> int:
    """How bars i and j interleave: 0 disjoint, 1 stepped, 2 nested.

    The pair is ordered internally so the case analysis sees the earlier
    birth first; the result is symmetric in i and j.  Requires a 0-strict
    barcode so the three cases are exhaustive.
    """
    if i == j:
        raise InvalidLabelError(f"labels must differ, got i = j = {i}")
    first, second = barcode.bar(i), barcode.bar(j)
    require_k_strict(barcode, 0)
    if second.birth < first.birth:
        first, second = second, first
    if first.death < second.birth:
        return 0
    if first.death < second.death:
        return 1
    return 2


def interval_graph(barcode: Barcode) -> IntervalGraph:
    """Edge {i, j} iff the open intervals of bars i and j intersect."""
    n = len(barcode)
    edges = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = barcode.bars[i - 1], barcode.bars[j - 1]
            if max(a.birth, b.birth) < min(a.death, b.death):
                edges.add((i, j))
    return IntervalGraph(n, frozenset(edges))


def affine_transform(barcode: Barcode, alpha: float, delta: float) -> Barcode:
    """Map every bar (b, d) to (alpha*b + delta, alpha*d + delta), alpha > 0."""
    if not alpha > 0:
        raise InvalidScaleError(f"scale must be positive, got {alpha!r}")
    return Barcode(
        tuple(Bar(alpha * b.birth + delta, alpha * b.death + delta) for b in barcode.bars)
    )


def has_containing_bar(barcode: Barcode) -> bool:
    """True iff some bar contains all others (min birth and max death)."""
    lo = min(b.birth for b in barcode.bars)
    hi = max(b.death for b in barcode.bars)
    return any(b.birth == lo and b.death == hi for b in barcode.bars)


def generate_barcode(
    n: int,
    seed: int,
    k: int = 0,
    spread: float = 10.0,
    contained: bool = False,
    max_retries: int = 1000,
) -> Barcode:
    """A deterministic pseudo-random k-strict barcode with n bars.

    Births fall in [0, spread) and lengths in [spread/10, spread/2).  With
    ``contained`` the first bar is widened to contain all the others.  The
    result is rejection-sampled until it verifies as k-strict, which for
    continuous draws almost always succeeds on the first try.
    """
    if n < 1:
        raise InvalidBarError("need n >= 1")
    rng = SplitMix64(seed)
    for _ in range(max_retries):
        inner = n - 1 if contained else n
        pairs = []
        for _ in range(inner):
            birth = rng.uniform(0.0, spread)
            length = rng.uniform(spread / 10.0, spread / 2.0)
            pairs.append((birth, birth + length))
        if contained:
            if pairs:
                lo = min(b for b, _ in pairs)
                hi = max(d for _, d in pairs)
            else:
                lo, hi = 0.0, spread
            pad_lo = rng.uniform(spread / 20.0, spread / 4.0)
            pad_hi = rng.uniform(spread / 20.0, spread / 4.0)
            pairs.insert(0, (lo - pad_lo, hi + pad_hi))
        candidate = Barcode.from_pairs(pairs)
        if is_k_strict(candidate, k):
            return candidate
    raise RetriesExhaustedError(f"no {k}-strict barcode after {max_retries} draws")


# ---------------------------------------------------------------------------
# File formats.  CSV: one "birth,death" per line, '#' starts a comment line.
# JSON: an array of 2-element arrays [birth, death].  Labels are line order.
# ---------------------------------------------------------------------------

def fmt17(x: float) -> str:
    """Format a double with 17 significant digits (round-trip exact)."""
    return f"{x:.17g}"


def parse_barcode_csv(text: str) -> Barcode:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'birth,death', got {raw!r}")
        try:
            birth, death = float(fields[0]), float(fields[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if not (math.isfinite(birth) and math.isfinite(death)):
            raise ParseError(f"line {lineno}: non-finite value in {raw!r}")
        pairs.append((birth, death))
    if not pairs:
        raise ParseError("no bars found")
    try:
        return Barcode.from_pairs(pairs)
    except InvalidBarError as exc:
        raise ParseError(str(exc)) from exc


def parse_barcode_json(text: str) -> Barcode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list) or not data:
        raise ParseError("expected a non-empty JSON array of [birth, death] pairs")
    pairs = []
    for idx, item in enumerate(data):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, (int, float)) for v in item)
        ):
            raise ParseError(f"entry {idx}: expected [birth, death], got {item!r}")
        pairs.append((float(item[0]), float(item[1])))
    try:
        return Barcode.from_pairs(pairs)
    except InvalidBarError as exc:
        raise ParseError(str(exc)) from exc


def format_barcode_csv(barcode: Barcode) -> str:
    lines = [f"{fmt17(b.birth)},{fmt17(b.death)}" for b in barcode.bars]
    return "\n".join(lines) + "\n"


def format_barcode_json(barcode: Barcode) -> str:
    return json.dumps([[b.birth, b.death] for b in barcode.bars])


def read_barcode(path: str, fmt: str | None = None) -> Barcode:
    """Load a barcode file; format from ``fmt`` or the file extension."""
    if fmt is None:
        ext = os.path.splitext(path)[1].lower()
        if ext == ".csv":
            fmt = "csv"
        elif ext == ".json":
            fmt = "json"
        else:
            raise ParseError(f"cannot infer format of {path!r}; pass fmt")
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "csv":
        return parse_barcode_csv(text)
    if fmt == "json":
        return parse_barcode_json(text)
    raise ParseError(f"unknown barcode format {fmt!r}")
