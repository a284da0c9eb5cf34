"""Integer partitions and the statistics driving the Lebesgue correspondence.

A partition is a non-increasing finite sequence of positive integers; the
empty sequence is the empty partition.  Everything downstream (the step map,
the enumeration oracle, the series cross-checks) works with these values and
four statistics:

    weight |p|        sum of parts
    conjugate p'      p'[j] = #{i : p[i] >= j+1}  (transposed Young diagram)
    alt_sum |p|_a     p[0] - p[1] + p[2] - p[3] + ...
    num_odd_parts     count of odd entries

For partitions with distinct parts, alt_sum(p) == num_odd_parts(conjugate(p));
that lemma is what turns the step map's conserved quantity into the
alternating-sum refinement.

All values are immutable; arithmetic is exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integers; ``Partition()`` is empty.

    Construction validates the invariants.  Use :func:`make_partition` to
    canonicalize arbitrary input (sort, drop zeros).
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for x in self.parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"partition parts must be integers, got {x!r}")
            if x < 1:
                raise ValueError(f"partition parts must be positive, got {x}")
            if prev is not None and x > prev:
                raise ValueError(f"parts must be non-increasing, got {self.parts}")
            prev = x

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        # Textual form: comma-separated parts, empty string for the empty partition.
        return ",".join(str(x) for x in self.parts)


EMPTY = Partition()


def make_partition(raw: Iterable[int]) -> Partition:
    """Canonicalize ``raw`` into a Partition: drop zeros, sort non-increasing.

    Negative or non-integer entries are rejected.  This is the single
    canonicalization point: every operation that subtracts from parts routes
    its result through here so emptied parts silently disappear.
    """
    parts = []
    for x in raw:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"partition parts must be integers, got {x!r}")
        if x < 0:
            raise ValueError(f"partition parts must be non-negative, got {x}")
        if x:
            parts.append(x)
    parts.sort(reverse=True)
    return Partition(tuple(parts))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: part j counts parts of p that are > j."""
    if not p:
        return p
    cols = [0] * p.parts[0]
    for x in p.parts:
        for j in range(x):
            cols[j] += 1
    return Partition(tuple(cols))


def alt_sum(p: Partition) -> int:
    """Alternating sum p[0] - p[1] + p[2] - ...; non-negative, same parity as |p|."""
    total = 0
    for i, x in enumerate(p.parts):
        total += x if i % 2 == 0 else -x
    return total


def num_odd_parts(p: Partition) -> int:
    return sum(1 for x in p.parts if x % 2)


def has_distinct_parts(p: Partition) -> bool:
    return len(set(p.parts)) == len(p.parts)


def all_parts_even(p: Partition) -> bool:
    return all(x % 2 == 0 for x in p.parts)
