"""Shared exhaustive families and independent brute-force oracles.

``brute_parse`` consumes a code by the recursive definition of an
expression and is deliberately independent of both library criteria it is
used to cross-check (the prefix-charge test and the iterative decoder).
"""

import itertools

import pytest

from degtree import DegreeMultiset

MAX_DEGREE = 4
MAX_LEN = 9


def brute_parse(code, start=0):
    """End index of the single expression starting at ``start``, or None."""
    if start >= len(code):
        return None
    position = start + 1
    for _ in range(code[start]):
        position = brute_parse(code, position)
        if position is None:
            return None
    return position


def brute_well_formed(code):
    return len(code) > 0 and brute_parse(tuple(code)) == len(code)


def all_sequences(max_len, max_degree):
    """Every degree sequence with 1 <= len <= max_len and entries <= max_degree."""
    for length in range(1, max_len + 1):
        yield from itertools.product(range(max_degree + 1), repeat=length)


def _fixed_sum_tuples(length, total, max_degree):
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, max_degree) + 1):
        for rest in _fixed_sum_tuples(length - 1, total - first, max_degree):
            yield (first,) + rest


def charge_one_sequences(max_len, max_degree):
    """The bounded family restricted to total charge exactly 1."""
    for length in range(1, max_len + 1):
        yield from _fixed_sum_tuples(length, length - 1, max_degree)


def constructible_multisets(max_nodes, max_degree):
    """Every degree multiset with charge 1 in the bounded family."""
    for n in range(1, max_nodes + 1):
        for combo in itertools.combinations_with_replacement(
            range(max_degree + 1), n
        ):
            if n - sum(combo) == 1:
                yield DegreeMultiset.from_degrees(combo)


@pytest.fixture(scope="session")
def charge_one_family():
    """All 15,749 charge-1 sequences with length <= 9, degrees <= 4."""
    return list(charge_one_sequences(MAX_LEN, MAX_DEGREE))


@pytest.fixture(scope="session")
def well_formed_family(charge_one_family):
    """The 1,847 well-formed members of the charge-1 family."""
    return [s for s in charge_one_family if brute_well_formed(s)]
