"""Shared test fixtures: seeded barcode factories and gap measurement."""

import random

from barcomb.barcode import Barcode, sample_points


def random_barcode(rng: random.Random, n: int, lo=0.0, hi=1.0) -> Barcode:
    pairs = []
    for _ in range(n):
        b = rng.uniform(lo, hi)
        pairs.append((b, b + rng.uniform(0.05, 1.0) * (hi - lo)))
    return Barcode.from_pairs(pairs)


def min_gap(barcode: Barcode, k: int) -> float:
    """Smallest spacing between level-k sample points."""
    values = sorted(v for v, _ in sample_points(barcode, k))
    return min(b - a for a, b in zip(values, values[1:]))


def star_barcode(n: int, k: int, rng: random.Random) -> Barcode:
    """A containing bar plus n-1 bars inside distinct level-k cells.

    Same-invariant perturbations of these can use the full cell width, so
    aligned distances track the cell size 2^-k.
    """
    cells = 1 << k
    chosen = rng.sample(range(cells), n - 1)
    h = 1.0 / cells
    pairs = [(0.0, 1.0)]
    for cell in chosen:
        center = (cell + rng.uniform(0.4, 0.6)) * h
        width = rng.uniform(0.15, 0.3) * h
        pairs.append((center - width / 2, center + width / 2))
    return Barcode.from_pairs(pairs)


def fit_slope(xs, ys) -> float:
    x_mean = sum(xs) / len(xs)
    y_mean = sum(ys) / len(ys)
    return sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys)) / sum(
        (x - x_mean) ** 2 for x in xs
    )
