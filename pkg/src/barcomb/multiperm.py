"""Multipermutation algebra behind the barcode invariants.

A multipermutation over alphabet {1..n} with uniform multiplicity m is a word
of length n*m in which every symbol occurs exactly m times.  Words are
compared in the multinomial Newman order through the embedding ``iota`` that
distinguishes the copies of each symbol: the r-th occurrence of i becomes
i_r, copies of a symbol always staying in increasing copy order, and
s <= t iff the inversion set of iota(s) is contained in that of iota(t).

A word is *canonical* when the first occurrences of 1, 2, ..., n appear in
that order; canonical words are exactly the orbit representatives under
symbol relabeling, so orbits are always materialized as their canonical
representative and never as a separate type.

Barcode maps: ``f_k`` reads off the bar labels of the sorted level-k sample
points of a k-strict barcode; ``g_k`` is its canonicalization, the labeling-
and scale-invariant of the barcode at level k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .barcode import Barcode, require_k_strict, sample_points
from .errors import InvalidWordError, NotCanonicalError, ShapeMismatchError

# A permutation of the totally ordered set {1_1 < ... < 1_m < 2_1 < ... < n_m},
# written as (symbol, copy_index) pairs with copy_index counted from 1.
EmbeddedPermutation = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Multipermutation:
    """A word over {1..n} in which every symbol occurs exactly m times.

    >>> s = Multipermutation((1, 2, 1, 3, 3, 2))
    >>> s.n, s.m
    (3, 2)
    >>> str(s)
    '1 2 1 3 3 2'
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise InvalidWordError("empty word")
        counts = Counter(word)
        n = max(counts)
        m = len(word) // n
        if sorted(counts) != list(range(1, n + 1)):
            raise InvalidWordError(f"symbols must be exactly 1..{n}: {word}")
        if any(c != m for c in counts.values()):
            raise InvalidWordError(f"multiplicities must be uniform: {word}")

    @property
    def n(self) -> int:
        return max(self.word)

    @property
    def m(self) -> int:
        return len(self.word) // self.n

    @property
    def is_canonical(self) -> bool:
        """True iff first occurrences of 1..n appear in increasing order."""
        want = 1
        seen = set()
        for sym in self.word:
            if sym not in seen:
                if sym != want:
                    return False
                seen.add(sym)
                want += 1
        return True

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.word)

    @classmethod
    def from_string(cls, text: str) -> "Multipermutation":
        try:
            word = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise InvalidWordError(f"not a word of integers: {text!r}") from exc
        return cls(word)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "word": list(self.word)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Multipermutation":
        try:
            word = tuple(int(v) for v in data["word"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidWordError(f"bad word payload: {data!r}") from exc
        s = cls(word)
        if "n" in data and data["n"] != s.n:
            raise InvalidWordError(f"declared n={data['n']} but word has n={s.n}")
        if "m" in data and data["m"] != s.m:
            raise InvalidWordError(f"declared m={data['m']} but word has m={s.m}")
        return s


# Canonical representatives are plain multipermutations whose ``is_canonical``
# holds; operations that need one check the flag.
CanonicalInvariant = Multipermutation


def _check_same_shape(s: Multipermutation, t: Multipermutation) -> None:
    if s.n != t.n or s.m != t.m:
        raise ShapeMismatchError(
            f"shape ({s.n},{s.m}) vs ({t.n},{t.m}) do not match"
        )


def f_k(barcode: Barcode, k: int) -> Multipermutation:
    """Labels of the sorted level-k sample points of a k-strict barcode.

    The result has alphabet size n = number of bars and multiplicity
    m = 2^k + 1.  Raises NotStrictError when sample points collide.
    """
    require_k_strict(barcode, k)
    points = sorted(sample_points(barcode, k))
    return Multipermutation(tuple(label for _, label in points))


def relabel(s: Multipermutation, pi: Sequence[int]) -> Multipermutation:
    """Apply a symbol permutation elementwise: word'[p] = pi(word[p]).

    ``pi`` is one-line notation on {1..n}: pi[i-1] is the image of i.

    >>> str(relabel(Multipermutation((1, 2, 1, 3, 3, 2)), (2, 1, 3)))
    '2 1 2 3 3 1'
    """
    n = s.n
    if sorted(pi) != list(range(1, n + 1)):
        raise InvalidWordError(f"not a permutation of 1..{n}: {pi!r}")
    return Multipermutation(tuple(pi[sym - 1] for sym in s.word))


def invert_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a 1-based one-line permutation."""
    inv = [0] * len(pi)
    for pos, val in enumerate(pi, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def canonicalize(s: Multipermutation) -> CanonicalInvariant:
    """The canonical representative of the relabeling orbit of ``s``.

    Relabels by the inverse of the first-occurrence permutation, so first
    occurrences come out in increasing order.  Idempotent, and constant on
    orbits: two words canonicalize equally iff one is a relabeling of the
    other.

    >>> str(canonicalize(Multipermutation((2, 1, 4, 1, 3, 3, 2, 4))))
    '1 2 3 2 4 4 1 3'
    """
    tau: list[int] = []
    seen = set()
    for sym in s.word:
        if sym not in seen:
            seen.add(sym)
            tau.append(sym)
    return relabel(s, invert_permutation(tau))


def g_k(barcode: Barcode, k: int) -> CanonicalInvariant:
    """The level-k invariant: canonicalized ``f_k``.

    Unchanged under bar relabeling and under increasing affine maps of the
    real line; orbit equality is representative equality.
    """
    return canonicalize(f_k(barcode, k))


def iota(s: Multipermutation | Sequence[int]) -> EmbeddedPermutation:
    """Distinguish copies: the r-th occurrence of symbol i becomes (i, r).

    Accepts a raw word as well, so it also applies to words with non-uniform
    multiplicities.

    >>> iota((1, 2, 1, 3, 2))
    ((1, 1), (2, 1), (1, 2), (3, 1), (2, 2))
    """
    word = s.word if isinstance(s, Multipermutation) else tuple(s)
    counts: Counter[int] = Counter()
    out = []
    for sym in word:
        counts[sym] += 1
        out.append((sym, counts[sym]))
    return tuple(out)


def inversion_set(
    p: EmbeddedPermutation,
) -> frozenset[tuple[tuple[int, int], tuple[int, int]]]:
    """All pairs (x, y) with x > y in the copy order but x preceding y."""
    out = set()
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                out.add((p[a], p[b]))
    return frozenset(out)


def _inversion_mask(s: Multipermutation) -> int:
    """Inversion set of iota(s) as a bitmask over unordered value pairs.

    Value of (sym, copy) in the total order is (sym-1)*m + copy, in 1..N.
    Bit for the pair {u < v} is set iff v precedes u.  Subset tests on these
    masks implement the Newman order.
    """
    m = s.m
    counts: Counter[int] = Counter()
    values = []
    for sym in s.word:
        counts[sym] += 1
        values.append((sym - 1) * m + counts[sym])
    mask = 0
    for a in range(len(values)):
        va = values[a]
        for b in range(a + 1, len(values)):
            vb = values[b]
            if va > vb:
                # pair index for {vb < va}
                mask |= 1 << ((va - 1) * (va - 2) // 2 + (vb - 1))
    return mask


def newman_leq(s: Multipermutation, t: Multipermutation) -> bool:
    """Multinomial Newman order: inversions of iota(s) within iota(t)."""
    _check_same_shape(s, t)
    ms, mt = _inversion_mask(s), _inversion_mask(t)
    return ms & ~mt == 0


def inversion_multiset(s: Multipermutation) -> Counter[tuple[int, int]]:
    """Counts of out-of-order symbol pairs: (j, i) with j > i, counted once
    per position pair where a copy of j precedes a copy of i.

    >>> sorted(inversion_multiset(Multipermutation((1, 2, 3, 2, 4, 4, 1, 3))).items())
    [((2, 1), 2), ((3, 1), 1), ((3, 2), 1), ((4, 1), 2), ((4, 3), 2)]
    """
    counts: Counter[tuple[int, int]] = Counter()
    word = s.word
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            if word[a] > word[b]:
                counts[(word[a], word[b])] += 1
    return counts


def prec(s: CanonicalInvariant, t: CanonicalInvariant) -> bool:
    """Order on canonical representatives via inversion-multiset containment.

    Agrees with ``newman_leq`` on canonical words (for multiplicity 2 this is
    the classical statement; it is verified exhaustively by the test suite).
    """
    _check_same_shape(s, t)
    for u in (s, t):
        if not u.is_canonical:
            raise NotCanonicalError(f"not canonical: {u}")
    return inversion_multiset(s) <= inversion_multiset(t)


def rank(s: CanonicalInvariant) -> int:
    """Total inversion count; the grading of the barcode lattices."""
    return sum(inversion_multiset(s).values())


def delta_k(s: Multipermutation) -> Multipermutation:
    """Delete every other occurrence of each symbol, starting with the second.

    Defined for multiplicity m = 2^(k+1) + 1, producing multiplicity
    2^k + 1; composed with the level-(k+1) barcode map it yields the
    level-k map.

    >>> str(delta_k(Multipermutation((1, 2, 1, 1, 2, 3, 3, 3, 2))))
    '1 2 1 3 3 2'
    """
    m = s.m
    if m < 3 or (m - 1) & (m - 2) != 0:
        raise ShapeMismatchError(
            f"multiplicity {m} is not 2^(k+1)+1 for any k >= 0"
        )
    counts: Counter[int] = Counter()
    kept = []
    for sym in s.word:
        counts[sym] += 1
        if counts[sym] % 2 == 1:
            kept.append(sym)
    return Multipermutation(tuple(kept))


def second_occurrence_subword(s: CanonicalInvariant) -> tuple[int, ...]:
    """The symbols at their second occurrences, in word order."""
    counts: Counter[int] = Counter()
    out = []
    for sym in s.word:
        counts[sym] += 1
        if counts[sym] == 2:
            out.append(sym)
    return tuple(out)


def phi(barcode: Barcode) -> tuple[int, ...]:
    """Death order relative to birth order, as a permutation of {1..n}.

    With sigma sorting deaths and tau sorting births, this is tau^-1 * sigma;
    equivalently the second-occurrence subword of the level-0 invariant.
    """
    require_k_strict(barcode, 0)
    n = len(barcode)
    by_birth = sorted(range(1, n + 1), key=lambda i: barcode.bars[i - 1].birth)
    by_death = sorted(range(1, n + 1), key=lambda i: barcode.bars[i - 1].death)
    tau_inv = invert_permutation(by_birth)
    return tuple(tau_inv[by_death[pos] - 1] for pos in range(n))
