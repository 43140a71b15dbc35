"""Degree sequences, degree multisets, and the charge function.

A *degree sequence* is any sequence of non-negative integers, read as the
preorder outdegrees of tree nodes.  The *charge* of a sequence is
``len(s) - sum(s)``: each node contributes 1 minus its outdegree.  A
non-empty sequence encodes exactly one tree (it is *well-formed*) iff its
total charge is 1 and the charge of every proper prefix is at most 0.

Plain Python sequences stand in for degree sequences throughout the
package; only the multiset constraint gets a class of its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from operator import index
from typing import Iterable, Mapping, Sequence

from .errors import ChargeNotOneError


class DegreeMultiset:
    """Bag of node outdegrees with multiplicities.

    The multiset is the sampling constraint: a tree satisfies it when its
    nodes' outdegrees, counted with multiplicity, are exactly this bag.
    Multiplicities must be positive and the bag must not be empty.
    """

    __slots__ = ("_counts", "_total")

    def __init__(self, counts: Mapping[int, int]):
        cleaned: dict[int, int] = {}
        for degree, multiplicity in counts.items():
            degree, multiplicity = index(degree), index(multiplicity)
            if degree < 0:
                raise ValueError(f"outdegree must be non-negative, got {degree}")
            if multiplicity < 1:
                raise ValueError(
                    f"multiplicity of degree {degree} must be positive, "
                    f"got {multiplicity}"
                )
            cleaned[degree] = multiplicity
        if not cleaned:
            raise ValueError("degree multiset must contain at least one node")
        self._counts = dict(sorted(cleaned.items()))
        self._total = sum(cleaned.values())

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeMultiset":
        """Build from an iterable listing one outdegree per node."""
        counts: dict[int, int] = {}
        for degree in degrees:
            counts[degree] = counts.get(degree, 0) + 1
        return cls(counts)

    @property
    def counts(self) -> dict[int, int]:
        """Copy of the degree -> multiplicity map, keys ascending."""
        return dict(self._counts)

    @property
    def total_nodes(self) -> int:
        return self._total

    @property
    def charge(self) -> int:
        """Node count minus the sum of outdegrees; 1 iff a tree exists."""
        return self._total - sum(d * m for d, m in self._counts.items())

    def to_sequence(self) -> list[int]:
        """Expand to the canonical degree sequence (ascending by degree)."""
        out: list[int] = []
        for degree, multiplicity in self._counts.items():
            out.extend([degree] * multiplicity)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {m}" for d, m in self._counts.items())
        return f"DegreeMultiset({{{inner}}})"


@dataclass(frozen=True)
class SegmentDecomposition:
    """Split of a charge-1 sequence into complete tree codes plus a tail.

    ``complete_prefix_length`` is the number of leading symbols covered by
    complete codes, ``complete_expression_count`` how many such codes the
    prefix holds, and ``tail_charge`` the charge of what remains (always
    ``1 - complete_expression_count``).
    """

    complete_prefix_length: int
    complete_expression_count: int
    tail_charge: int


def charge(degrees: Sequence[int]) -> int:
    """Total charge of a degree sequence: ``sum(1 - d for d in degrees)``.

    Charge is additive over concatenation; the empty sequence has charge 0.
    """
    return len(degrees) - sum(degrees)


def prefix_charges(degrees: Sequence[int]) -> list[int]:
    """Running charge after each element; empty input gives an empty list."""
    return list(accumulate(1 - d for d in degrees))


def is_well_formed(degrees: Sequence[int]) -> bool:
    """True iff ``degrees`` is the preorder outdegree code of exactly one tree.

    Criterion: non-empty, total charge 1, and every proper prefix has
    charge <= 0.  The recursive equivalent is ``codec.decode_prefix``
    consuming the whole input; the test suite checks the two agree.
    """
    if not degrees:
        return False
    running = 0
    last = len(degrees) - 1
    for i, degree in enumerate(degrees):
        running += 1 - degree
        if running > 0 and i < last:
            return False
    return running == 1


def is_constructible(multiset: DegreeMultiset) -> bool:
    """True iff at least one ordered tree uses every node of ``multiset``.

    Equivalent to the multiset having charge exactly 1.
    """
    return multiset.charge == 1


def decompose(degrees: Sequence[int]) -> SegmentDecomposition:
    """Greedily split ``degrees`` into complete tree codes plus a deficient tail.

    Scans left to right, cutting a segment each time the running charge
    reaches 1; every cut is therefore the shortest remaining prefix that
    completes a tree.  Requires total charge 1.  A well-formed input
    decomposes as a single segment covering the whole sequence.

    Raises:
        ChargeNotOneError: if the total charge differs from 1.
    """
    total = charge(degrees)
    if total != 1:
        raise ChargeNotOneError(total)
    running = 0
    segments = 0
    prefix_length = 0
    for position, degree in enumerate(degrees, start=1):
        running += 1 - degree
        if running == 1:
            running = 0
            segments += 1
            prefix_length = position
    return SegmentDecomposition(prefix_length, segments, 1 - segments)
