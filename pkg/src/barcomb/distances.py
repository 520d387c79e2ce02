"""Exact bottleneck and q-Wasserstein distances, and affine alignment.

Barcodes are compared as persistence diagrams: bar (b, d) is the plane point
(b, d), the ground metric is the sup norm, and any bar may be matched to the
diagonal instead of a partner, at cost (d - b) / 2.  Both solvers are exact:

* bottleneck — binary search over the finite set of candidate costs with a
  perfect-matching feasibility test (augmenting paths) at each candidate;
* wasserstein — a minimum-cost assignment on the (n+m) x (n+m) augmented
  cost matrix with entries raised to the q-th power.

Every distance returns a witness matching, and the reported value is
recomputed from the witness pairs so the two always agree exactly.

``align`` fits the affine map sending the earliest-born bar of one barcode
onto that of the other; ``check_convergence_bounds`` verifies that aligned
distances stay within span / 2^k (and its q-Wasserstein variant) whenever
two barcodes share their level-k invariant and one bar contains all others.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .barcode import (
    Barcode,
    affine_transform,
    has_containing_bar,
    is_k_strict,
)
from .errors import (
    DegenerateBarError,
    InvalidQError,
    PreconditionFailedError,
    RetriesExhaustedError,
)
from .multiperm import g_k
from .rng import SplitMix64

BOUND_TOLERANCE = 1e-9

# A witness pair is (left label, right label) with None meaning the diagonal;
# diagonal-to-diagonal fillers are dropped from witnesses.
Pair = tuple[int | None, int | None]


@dataclass(frozen=True)
class Matching:
    """A perfect matching between two diagrams, diagonal allowed."""

    pairs: tuple[Pair, ...]
    cost: float


@dataclass(frozen=True)
class Alignment:
    """The map x -> alpha * x + delta, alpha > 0."""

    alpha: float
    delta: float


def _linf(x: tuple[float, float], y: tuple[float, float]) -> float:
    return max(abs(x[0] - y[0]), abs(x[1] - y[1]))


def _diag_cost(x: tuple[float, float]) -> float:
    return (x[1] - x[0]) / 2.0


def pair_cost(left: Barcode, right: Barcode, pair: Pair) -> float:
    """Ground cost of one witness pair."""
    l, r = pair
    if l is not None and r is not None:
        return _linf(left.pairs()[l - 1], right.pairs()[r - 1])
    if l is not None:
        return _diag_cost(left.pairs()[l - 1])
    if r is not None:
        return _diag_cost(right.pairs()[r - 1])
    return 0.0


def bottleneck_cost(left: Barcode, right: Barcode, pairs) -> float:
    """Max pair cost; how a bottleneck witness's cost is recomputed."""
    return max((pair_cost(left, right, p) for p in pairs), default=0.0)


def wasserstein_cost(left: Barcode, right: Barcode, pairs, q: float) -> float:
    """Sum of pair costs to the q, then the q-th root, in pair order."""
    total = 0.0
    for p in pairs:
        total += pair_cost(left, right, p) ** q
    return total ** (1.0 / q)


def _sorted_pairs(raw: list[Pair]) -> tuple[Pair, ...]:
    # bar-left pairs by left label first, then diagonal-left pairs by right
    return tuple(
        sorted(raw, key=lambda p: (p[0] is None, p[0] or 0, p[1] or 0))
    )


def _feasible_matching(
    xs: list, ys: list, threshold: float
) -> list[int] | None:
    """Perfect matching using only edges of cost <= threshold, or None.

    Left vertices are the n bars of xs then m diagonal slots; right vertices
    are the m bars of ys then n diagonal slots.  Returns right-to-left
    assignments when a perfect matching exists.
    """
    n, m = len(xs), len(ys)
    size = n + m

    def edge(l: int, r: int) -> bool:
        if l < n:
            if r < m:
                return _linf(xs[l], ys[r]) <= threshold
            return _diag_cost(xs[l]) <= threshold
        if r < m:
            return _diag_cost(ys[r]) <= threshold
        return True

    match_right = [-1] * size  # right vertex -> left vertex

    def augment(l: int, visited: list[bool]) -> bool:
        for r in range(size):
            if not visited[r] and edge(l, r):
                visited[r] = True
                if match_right[r] == -1 or augment(match_right[r], visited):
                    match_right[r] = l
                    return True
        return False

    for l in range(size):
        if not augment(l, [False] * size):
            return None
    return match_right


def _witness_from_assignment(
    n: int, m: int, right_to_left: list[int]
) -> tuple[Pair, ...]:
    raw: list[Pair] = []
    for r, l in enumerate(right_to_left):
        if l < n and r < m:
            raw.append((l + 1, r + 1))
        elif l < n:
            raw.append((l + 1, None))
        elif r < m:
            raw.append((None, r + 1))
    return _sorted_pairs(raw)


def bottleneck(left: Barcode, right: Barcode) -> tuple[float, Matching]:
    """Exact bottleneck distance and an optimal witness matching."""
    xs, ys = left.pairs(), right.pairs()
    candidates = {0.0}
    candidates.update(_linf(x, y) for x in xs for y in ys)
    candidates.update(_diag_cost(x) for x in xs)
    candidates.update(_diag_cost(y) for y in ys)
    levels = sorted(candidates)
    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible_matching(xs, ys, levels[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    assignment = _feasible_matching(xs, ys, levels[lo])
    assert assignment is not None
    pairs = _witness_from_assignment(len(xs), len(ys), assignment)
    distance = bottleneck_cost(left, right, pairs)
    return distance, Matching(pairs, distance)


def wasserstein(left: Barcode, right: Barcode, q: float) -> tuple[float, Matching]:
    """Exact q-Wasserstein distance and an optimal witness matching."""
    q = float(q)
    if not (q >= 1.0 and np.isfinite(q)):
        raise InvalidQError(f"need finite q >= 1, got {q!r}")
    xs, ys = left.pairs(), right.pairs()
    n, m = len(xs), len(ys)
    size = n + m
    cost = np.zeros((size, size))
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            cost[i, j] = _linf(x, y) ** q
        cost[i, m:] = _diag_cost(x) ** q
    for j, y in enumerate(ys):
        cost[n:, j] = _diag_cost(y) ** q
    rows, cols = linear_sum_assignment(cost)
    right_to_left = [-1] * size
    for l, r in zip(rows, cols):
        right_to_left[int(r)] = int(l)
    pairs = _witness_from_assignment(n, m, right_to_left)
    distance = wasserstein_cost(left, right, pairs, q)
    return distance, Matching(pairs, distance)


def align(left: Barcode, right: Barcode) -> Alignment:
    """Affine map carrying the earliest-born bar of ``right`` onto ``left``'s.

    With (b1, d1) and (b1', d1') the bars of smallest birth on each side,
    alpha = (d1 - b1) / (d1' - b1') and delta = b1 - alpha * b1', so the map
    sends b1' to b1 and d1' to d1 exactly.
    """
    b1, d1 = min(left.pairs())
    b1p, d1p = min(right.pairs())
    if d1p == b1p:
        raise DegenerateBarError("alignment source bar has zero length")
    alpha = (d1 - b1) / (d1p - b1p)
    delta = b1 - alpha * b1p
    return Alignment(alpha, delta)


@dataclass(frozen=True)
class BoundReport:
    """Aligned distances against their level-k bounds."""

    d_inf: float
    d_q: float
    bound_inf: float
    bound_q: float
    alpha: float
    delta: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "d_inf": self.d_inf,
            "d_q": self.d_q,
            "bound_inf": self.bound_inf,
            "bound_q": self.bound_q,
            "alpha": self.alpha,
            "delta": self.delta,
            "pass": self.passed,
        }


def check_convergence_bounds(
    left: Barcode, right: Barcode, k: int, q: float
) -> BoundReport:
    """Align ``right`` to ``left`` and test the level-k distance bounds.

    Preconditions: both barcodes k-strict, equal level-k invariants, and a
    bar of ``left`` containing all others.  Violations raise
    PreconditionFailedError naming each failed condition.  When the
    preconditions hold the bounds are a theorem, so ``passed`` is expected
    true up to solver tolerance.
    """
    failures = []
    strict = is_k_strict(left, k) and is_k_strict(right, k)
    if not strict:
        failures.append("strictness")
    if not strict or len(left) != len(right) or g_k(left, k) != g_k(right, k):
        failures.append("invariant equality")
    if not has_containing_bar(left):
        failures.append("containing bar")
    if failures:
        raise PreconditionFailedError(failures)

    alignment = align(left, right)
    aligned = affine_transform(right, alignment.alpha, alignment.delta)
    d_inf, _ = bottleneck(left, aligned)
    d_q, _ = wasserstein(left, aligned, q)
    span = max(b.death for b in left.bars) - min(b.birth for b in left.bars)
    bound_inf = span / (1 << k)
    n = len(left)
    bound_q = (n - 1) ** (1.0 / q) * bound_inf
    passed = (
        d_inf <= bound_inf + BOUND_TOLERANCE and d_q <= bound_q + BOUND_TOLERANCE
    )
    return BoundReport(
        d_inf=d_inf,
        d_q=d_q,
        bound_inf=bound_inf,
        bound_q=bound_q,
        alpha=alignment.alpha,
        delta=alignment.delta,
        passed=passed,
    )


def perturb_preserving_invariant(
    barcode: Barcode,
    magnitude: float,
    k: int,
    seed: int,
    max_retries: int = 10000,
) -> Barcode:
    """Jitter endpoints without changing the level-k invariant.

    Each endpoint moves independently by uniform noise in
    [-magnitude, magnitude) drawn from a seeded deterministic stream; draws
    are rejected until the result is k-strict with the same level-k
    invariant as the input.  Deterministic given (barcode, magnitude, k,
    seed).
    """
    target = g_k(barcode, k)
    rng = SplitMix64(seed)
    for _ in range(max_retries):
        pairs = []
        ok = True
        for bar in barcode.bars:
            b = bar.birth + rng.uniform(-magnitude, magnitude)
            d = bar.death + rng.uniform(-magnitude, magnitude)
            if not b < d:
                ok = False
            pairs.append((b, d))
        if not ok:
            continue
        candidate = Barcode.from_pairs(pairs)
        if is_k_strict(candidate, k) and g_k(candidate, k) == target:
            return candidate
    raise RetriesExhaustedError(
        f"no invariant-preserving perturbation after {max_retries} draws"
    )
