"""Enumeration of the power-k barcode lattices with full order operations.

The level-k lattice on n bars consists of all canonical multipermutations
with alphabet size n and multiplicity m = 2^k + 1, ordered by the Newman
relation.  Equivalently (and verified by ``verify_ideal_isomorphism``) it is
the principal ideal below the fully nested word inside the full multinomial
Newman lattice.

Enumeration is deterministic: elements are produced in lexicographic word
order, so indices, Hasse diagrams, and DOT/JSON output are byte-stable.
Covers are adjacent swaps of an increasing symbol pair whose result is still
canonical.  Meets and joins are found by search over the enumerated diagram;
their uniqueness is asserted, which is the lattice property itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .errors import NotAnElementError, TooLargeError
from .multiperm import Multipermutation, newman_leq, rank

DEFAULT_POSITION_CAP = 16


@dataclass(frozen=True)
class LatticeSpec:
    """Bar count n >= 1 and level k >= 0; multiplicity m = 2^k + 1."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 0:
            raise ValueError(f"need n >= 1 and k >= 0, got ({self.n}, {self.k})")

    @property
    def m(self) -> int:
        return (1 << self.k) + 1

    @property
    def positions(self) -> int:
        return self.n * self.m


def top_element(spec: LatticeSpec) -> Multipermutation:
    """The fully nested word: 1..n, then 2^k copies of n down to 1.

    >>> str(top_element(LatticeSpec(3, 0)))
    '1 2 3 3 2 1'
    >>> str(top_element(LatticeSpec(3, 1)))
    '1 2 3 3 3 2 2 1 1'
    """
    word = list(range(1, spec.n + 1))
    for sym in range(spec.n, 0, -1):
        word.extend([sym] * (spec.m - 1))
    return Multipermutation(tuple(word))


def _iter_words(n: int, m: int, canonical_only: bool) -> Iterator[tuple[int, ...]]:
    """All multiset permutations of {1^m .. n^m} in lexicographic order.

    With ``canonical_only``, a symbol may start only after the previous
    symbol has appeared, which yields exactly the canonical words.
    """
    remaining = [m] * (n + 1)  # 1-based
    word: list[int] = []
    seen = 0  # largest symbol already placed; canonical words grow it by 1

    def backtrack() -> Iterator[tuple[int, ...]]:
        nonlocal seen
        if len(word) == n * m:
            yield tuple(word)
            return
        limit = min(n, seen + 1) if canonical_only else n
        for sym in range(1, limit + 1):
            if remaining[sym] == 0:
                continue
            remaining[sym] -= 1
            word.append(sym)
            prev_seen = seen
            seen = max(seen, sym)
            yield from backtrack()
            seen = prev_seen
            word.pop()
            remaining[sym] += 1

    return backtrack()


def _canonical_after_swap(word: tuple[int, ...]) -> bool:
    want = 1
    seen = set()
    for sym in word:
        if sym not in seen:
            if sym != want:
                return False
            seen.add(sym)
            want += 1
    return True


@dataclass(frozen=True)
class HasseDiagram:
    """An enumerated barcode lattice with cover edges and rank labels."""

    spec: LatticeSpec
    elements: tuple[Multipermutation, ...]
    covers: tuple[tuple[int, int], ...]  # (lower index, upper index)
    ranks: tuple[int, ...]

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {s.word: i for i, s in enumerate(self.elements)}

    def index_of(self, s: Multipermutation) -> int:
        try:
            return self._index[s.word]
        except KeyError:
            raise NotAnElementError(f"{s} is not an element of this lattice") from None

    def __contains__(self, s: Multipermutation) -> bool:
        return s.word in self._index

    @cached_property
    def _down_masks(self) -> tuple[int, ...]:
        """Bitmask per element of everything below-or-equal to it."""
        order = sorted(range(len(self.elements)), key=self.ranks.__getitem__)
        masks = [0] * len(self.elements)
        children: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            children[hi].append(lo)
        for i in order:
            mask = 1 << i
            for c in children[i]:
                mask |= masks[c]
            masks[i] = mask
        return tuple(masks)

    @cached_property
    def _up_masks(self) -> tuple[int, ...]:
        order = sorted(
            range(len(self.elements)), key=self.ranks.__getitem__, reverse=True
        )
        masks = [0] * len(self.elements)
        parents: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            parents[lo].append(hi)
        for i in order:
            mask = 1 << i
            for p in parents[i]:
                mask |= masks[p]
            masks[i] = mask
        return tuple(masks)

    def leq(self, s: Multipermutation, t: Multipermutation) -> bool:
        """Order by reachability in the diagram."""
        return bool(self._down_masks[self.index_of(t)] >> self.index_of(s) & 1)

    def _extremum(self, s, t, masks, comasks) -> Multipermutation:
        common = masks[self.index_of(s)] & masks[self.index_of(t)]
        found = []
        probe = common
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            probe ^= low
            if comasks[i] & common == low:
                found.append(i)
        # a lattice has exactly one extremal common bound; anything else
        # means the enumeration is corrupt
        assert len(found) == 1, f"expected unique bound, got {len(found)}"
        return self.elements[found[0]]

    def meet(self, s: Multipermutation, t: Multipermutation) -> Multipermutation:
        """Unique maximal common lower bound."""
        return self._extremum(s, t, self._down_masks, self._up_masks)

    def join(self, s: Multipermutation, t: Multipermutation) -> Multipermutation:
        """Unique minimal common upper bound."""
        return self._extremum(s, t, self._up_masks, self._down_masks)

    def rank_vector(self) -> list[int]:
        counts = [0] * (max(self.ranks) + 1)
        for r in self.ranks:
            counts[r] += 1
        return counts

    def to_dot(self) -> str:
        """Graphviz source; node ids are the lexicographic element indices."""
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i, (s, r) in enumerate(zip(self.elements, self.ranks)):
            lines.append(f'  n{i} [label="{s} (rank {r})"];')
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "elements": [list(s.word) for s in self.elements],
            "covers": [list(edge) for edge in self.covers],
            "ranks": list(self.ranks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _check_cap(spec: LatticeSpec, cap: int) -> None:
    if spec.positions > cap:
        raise TooLargeError(
            f"lattice needs {spec.positions} positions, cap is {cap}"
        )


@lru_cache(maxsize=None)
def enumerate_lattice(
    spec: LatticeSpec, cap: int = DEFAULT_POSITION_CAP
) -> HasseDiagram:
    """All canonical words with cover edges and ranks, in lexicographic order."""
    _check_cap(spec, cap)
    elements = [
        Multipermutation(w) for w in _iter_words(spec.n, spec.m, canonical_only=True)
    ]
    index = {s.word: i for i, s in enumerate(elements)}
    covers = []
    for i, s in enumerate(elements):
        word = s.word
        for p in range(len(word) - 1):
            if word[p] < word[p + 1]:
                swapped = word[:p] + (word[p + 1], word[p]) + word[p + 2 :]
                if _canonical_after_swap(swapped):
                    covers.append((i, index[swapped]))
    ranks = tuple(rank(s) for s in elements)
    return HasseDiagram(spec, tuple(elements), tuple(sorted(covers)), ranks)


def meet(
    s: Multipermutation,
    t: Multipermutation,
    spec: LatticeSpec,
    cap: int = DEFAULT_POSITION_CAP,
) -> Multipermutation:
    return enumerate_lattice(spec, cap).meet(s, t)


def join(
    s: Multipermutation,
    t: Multipermutation,
    spec: LatticeSpec,
    cap: int = DEFAULT_POSITION_CAP,
) -> Multipermutation:
    return enumerate_lattice(spec, cap).join(s, t)


def rank_vector(spec: LatticeSpec, cap: int = DEFAULT_POSITION_CAP) -> list[int]:
    """Element counts per rank, bottom to top."""
    return enumerate_lattice(spec, cap).rank_vector()


@dataclass(frozen=True)
class IdealReport:
    """Result of checking canonical words against the ideal below the top."""

    spec: LatticeSpec
    canonical_count: int
    ideal_count: int
    total_words: int
    equal: bool
    missing: tuple[tuple[int, ...], ...]  # in ideal, not canonical
    extra: tuple[tuple[int, ...], ...]  # canonical, not in ideal

    def to_json_dict(self) -> dict:
        return {
            "n": self.spec.n,
            "k": self.spec.k,
            "canonical_count": self.canonical_count,
            "ideal_count": self.ideal_count,
            "total_words": self.total_words,
            "equal": self.equal,
            "missing": [list(w) for w in self.missing],
            "extra": [list(w) for w in self.extra],
        }


def verify_ideal_isomorphism(
    spec: LatticeSpec, cap: int = DEFAULT_POSITION_CAP
) -> IdealReport:
    """Check that canonical words are exactly the ideal below the top.

    Enumerates the full multinomial Newman lattice, filters by comparison
    with the fully nested word, and compares with the canonical enumeration.
    """
    _check_cap(spec, cap)
    top = top_element(spec)
    canonical = {s.word for s in enumerate_lattice(spec, cap).elements}
    ideal = set()
    total = 0
    for w in _iter_words(spec.n, spec.m, canonical_only=False):
        total += 1
        if newman_leq(Multipermutation(w), top):
            ideal.add(w)
    missing = tuple(sorted(ideal - canonical))
    extra = tuple(sorted(canonical - ideal))
    return IdealReport(
        spec=spec,
        canonical_count=len(canonical),
        ideal_count=len(ideal),
        total_words=total,
        equal=not missing and not extra,
        missing=missing,
        extra=extra,
    )
