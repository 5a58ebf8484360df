"""The Redei-Berge function of a labeled digraph in noncommuting variables.

Three independent algorithms compute the same element:

  * rb_by_colorings      -- straight from the defining sum over colorings and
                            friendly listings (monomial basis);
  * rb_by_permutations   -- signed sum over permutations all of whose cycles
                            are directed cycles of the digraph or of its
                            complement (power-sum basis);
  * rb_by_deletion_contraction -- the recursion W(X) = W(X minus e) minus
                            W(X contract e) inducted, after relabeling the
                            chosen edge to (n-1, n).

rb_commutative computes the classical commutative Redei-Berge function from
descent sets of vertex listings, entirely independently of the three routes
above, and serves as the cross-check once variables are allowed to commute.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping, Sequence

from .digraph import Digraph
from .errors import SizeLimitError, SymmetryViolationError
from .ncsym import CSymElement, NCSymElement
from .setpart import (
    IntPartition,
    SetPartition,
    enumerate_partitions,
    factorial_weight,
    inverse_perm,
    mobius,
    mobius_from_bottom,
    refines,
)

MAX_COLORING_ALGORITHM = 8
MAX_PERMUTATION_ALGORITHM = 8
MAX_DELETION_CONTRACTION = 7
MAX_DESCENT_ALGORITHM = 8

Coloring = tuple[int, ...]


# -- friendly listings ------------------------------------------------------


def _check_coloring(dg: Digraph, colors: Sequence[int]) -> Coloring:
    colors = tuple(int(c) for c in colors)
    if len(colors) != dg.n:
        raise ValueError(f"coloring has {len(colors)} entries for {dg.n} vertices")
    if any(c < 1 for c in colors):
        raise ValueError("colors must be positive integers")
    return colors


def is_friendly(dg: Digraph, colors: Sequence[int], listing: Sequence[int]) -> bool:
    """Weakly increasing in the coloring, strictly across every edge pair."""
    for a, b in zip(listing, listing[1:]):
        ca, cb = colors[a - 1], colors[b - 1]
        if ca > cb:
            return False
        if ca == cb and (a, b) in dg.edges:
            return False
    return True


def count_friendly(dg: Digraph, colors: Sequence[int]) -> int:
    """Number of vertex listings that are friendly for the given coloring.

    Only listings sorted by color can qualify, so the enumeration runs over
    arrangements within each color class instead of all n! listings.
    """
    colors = _check_coloring(dg, colors)
    classes: dict[int, list[int]] = defaultdict(list)
    for v in range(1, dg.n + 1):
        classes[colors[v - 1]].append(v)
    ordered = [classes[c] for c in sorted(classes)]
    count = 0
    for arrangement in itertools.product(*(itertools.permutations(cls) for cls in ordered)):
        listing = [v for part in arrangement for v in part]
        if is_friendly(dg, colors, listing):
            count += 1
    return count


def rb_by_colorings(dg: Digraph) -> NCSymElement:
    """Monomial-basis expansion from the defining sum over colorings.

    For each set partition of the vertex positions, every linear order of its
    blocks is tried as a coloring; the friendly-listing counts must agree
    across all block orders (that agreement is the symmetry of the function),
    and the common count is the monomial coefficient.
    """
    n = dg.n
    if n > MAX_COLORING_ALGORITHM:
        raise SizeLimitError(f"coloring algorithm limited to n <= {MAX_COLORING_ALGORITHM}")
    if n == 0:
        return NCSymElement.one("M")
    terms: dict[SetPartition, int] = {}
    for pi in enumerate_partitions(n):
        counts = set()
        for block_order in itertools.permutations(pi.blocks):
            colors = [0] * n
            for color, block in enumerate(block_order, start=1):
                for v in block:
                    colors[v - 1] = color
            counts.add(count_friendly(dg, colors))
            if len(counts) > 1:
                raise SymmetryViolationError(
                    f"friendly counts differ across block orders of {pi} on {dg.describe()}"
                )
        value = counts.pop()
        if value:
            terms[pi] = value
    return NCSymElement(n, "M", terms)


# -- cycle-structured permutations -------------------------------------------


def signed_cycle_covers(dg: Digraph, within: SetPartition | None = None) -> Iterator[tuple[int, tuple[tuple[int, ...], ...]]]:
    """Yield (phi, cycle supports) over permutations whose every cycle is a
    directed cycle of the digraph or of its complement.

    phi sums (length - 1) over the cycles lying in the digraph itself; the
    complement includes loops, so a fixed point is always a cycle of exactly
    one side (edge sets are disjoint, hence no cycle can be classified both
    ways).  Cycles are grown from the smallest unassigned vertex so sparse
    digraphs prune early.  With ``within``, cycles are confined to the blocks
    of that partition, which restricts the sum to permutations whose cycle
    type refines it.
    """
    n = dg.n
    edges = dg.edges
    if within is not None:
        block_id = {v: i for i, b in enumerate(within.blocks) for v in b}

    blocks: list[tuple[int, ...]] = []

    def place(unused: frozenset[int], phi: int) -> Iterator[tuple[int, tuple[tuple[int, ...], ...]]]:
        if not unused:
            yield phi, tuple(blocks)
            return
        start = min(unused)
        rest = unused - {start}
        if within is None:
            allowed = rest
        else:
            allowed = frozenset(v for v in rest if block_id[v] == block_id[start])
        yield from grow([start], allowed, rest, None, phi)

    def grow(path, allowed, rest, in_x, phi):
        v = path[-1]
        start = path[0]
        # close the current cycle; a singleton closes through its loop slot
        closing_in_x = (v, start) in edges
        if in_x is None or in_x == closing_in_x:
            cycle_phi = len(path) - 1 if closing_in_x else 0
            blocks.append(tuple(sorted(path)))
            yield from place(rest - frozenset(path[1:]), phi + cycle_phi)
            blocks.pop()
        for w in sorted(allowed):
            if w in path:
                continue
            step_in_x = (v, w) in edges
            if in_x is None or in_x == step_in_x:
                path.append(w)
                yield from grow(path, allowed, rest, step_in_x, phi)
                path.pop()

    yield from place(frozenset(range(1, n + 1)), 0)


def rb_by_permutations(dg: Digraph) -> NCSymElement:
    """Power-sum expansion: signed sum of p over cycle types of permutations
    whose cycles are directed cycles of the digraph or of its complement."""
    if dg.n > MAX_PERMUTATION_ALGORITHM:
        raise SizeLimitError(f"permutation algorithm limited to n <= {MAX_PERMUTATION_ALGORITHM}")
    acc: dict[tuple, int] = defaultdict(int)
    for phi, blocks in signed_cycle_covers(dg):
        acc[blocks] += -1 if phi % 2 else 1
    terms = {SetPartition(blocks): c for blocks, c in acc.items() if c}
    return NCSymElement(dg.n, "P", terms)


def rb_tournament(dg: Digraph) -> NCSymElement:
    """Tournament power-sum expansion: 2**(number of nontrivial cycles) summed
    over permutations whose nontrivial cycles are odd directed cycles of the
    tournament (fixed points are unrestricted)."""
    if not dg.is_tournament():
        raise ValueError("tournament expansion requires a tournament")
    if dg.n > MAX_PERMUTATION_ALGORITHM:
        raise SizeLimitError(f"permutation algorithm limited to n <= {MAX_PERMUTATION_ALGORITHM}")
    edges = dg.edges
    acc: dict[tuple, int] = defaultdict(int)
    blocks: list[tuple[int, ...]] = []

    def place(unused: frozenset[int], psi: int):
        if not unused:
            acc[tuple(blocks)] += 2 ** psi
            return
        start = min(unused)
        rest = unused - {start}
        # the fixed point
        blocks.append((start,))
        place(rest, psi)
        blocks.pop()
        # odd directed cycles of length >= 3 through start
        grow([start], rest, psi)

    def grow(path, rest, psi):
        v = path[-1]
        start = path[0]
        if len(path) >= 3 and len(path) % 2 == 1 and (v, start) in edges:
            blocks.append(tuple(sorted(path)))
            place(rest - frozenset(path[1:]), psi + 1)
            blocks.pop()
        for w in sorted(rest):
            if w not in path and (v, w) in edges:
                path.append(w)
                grow(path, rest, psi)
                path.pop()

    place(frozenset(range(1, dg.n + 1)), 0)
    terms = {SetPartition(b): c for b, c in acc.items() if c}
    return NCSymElement(dg.n, "P", terms)


# -- deletion-contraction -----------------------------------------------------


@lru_cache(maxsize=None)
def _discrete_expansion(n: int) -> NCSymElement:
    """The edge-free base case: sum of (block factorial product) * m over all
    set partitions; loops never affect the function."""
    if n == 0:
        return NCSymElement.one("M")
    return NCSymElement(n, "M", {pi: factorial_weight(pi) for pi in enumerate_partitions(n)})


def _move_to_last_pair(u: int, v: int, n: int) -> tuple[int, ...]:
    """Permutation sending u to n-1 and v to n, order-preserving elsewhere."""
    delta = [0] * n
    delta[u - 1] = n - 1
    delta[v - 1] = n
    label = 1
    for w in range(1, n + 1):
        if w != u and w != v:
            delta[w - 1] = label
            label += 1
    return tuple(delta)


def rb_by_deletion_contraction(dg: Digraph) -> NCSymElement:
    """Monomial-basis expansion by the deletion-contraction recursion.

    The lexicographically smallest non-loop edge is moved onto (n-1, n) by an
    order-preserving relabeling, the recursion applied there, and the result
    pulled back; the relabeling step keeps every recursive call on the
    distinguished edge the contraction is defined for.
    """
    if dg.n > MAX_DELETION_CONTRACTION:
        raise SizeLimitError(f"deletion-contraction limited to n <= {MAX_DELETION_CONTRACTION}")
    return _delcon(dg)


def _delcon(dg: Digraph) -> NCSymElement:
    non_loop = dg.non_loop_edges()
    if not non_loop:
        return _discrete_expansion(dg.n)
    u, v = non_loop[0]
    n = dg.n
    delta = _move_to_last_pair(u, v, n)
    moved = dg.relabel(delta)
    deleted = _delcon(moved.delete_edges([(n - 1, n)]))
    contracted = _delcon(moved.contract_last_edge())
    return (deleted - contracted.induct()).act(inverse_perm(delta))


# -- commutative oracle via descent sets --------------------------------------


class QSymElement:
    """Aggregated descent-set data: counts per subset of {1..n-1}."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[frozenset, int]):
        cleaned: dict[frozenset, int] = {}
        for key, count in terms.items():
            key = frozenset(key)
            if not all(1 <= i <= degree - 1 for i in key):
                raise ValueError(f"descent set {sorted(key)} out of range for degree {degree}")
            if count < 0:
                raise ValueError("descent multiplicities must be nonnegative")
            if count:
                cleaned[key] = count
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("QSymElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, QSymElement)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        bits = [f"{c}*F{sorted(i)}" for i, c in sorted(self.terms.items(), key=lambda t: sorted(t[0]))]
        return "<" + " + ".join(bits) + ">" if bits else "<0>"


def descent_aggregate(dg: Digraph) -> QSymElement:
    """Counts of edge-descent sets over all n! vertex listings."""
    if dg.n > MAX_DESCENT_ALGORITHM:
        raise SizeLimitError(f"descent algorithm limited to n <= {MAX_DESCENT_ALGORITHM}")
    counts: dict[frozenset, int] = defaultdict(int)
    for listing in itertools.permutations(range(1, dg.n + 1)):
        descents = frozenset(
            i for i in range(1, dg.n) if (listing[i - 1], listing[i]) in dg.edges
        )
        counts[descents] += 1
    return QSymElement(dg.n, counts)


def _fundamental_words(n: int, strict_at: frozenset, alphabet: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing words of length n over {1..alphabet}, strictly
    increasing immediately after each position in strict_at."""

    def rec(pos: int, prev: int) -> Iterator[tuple[int, ...]]:
        if pos > n:
            yield ()
            return
        lo = prev + 1 if (pos - 1) in strict_at else max(prev, 1)
        for letter in range(lo, alphabet + 1):
            for tail in rec(pos + 1, letter):
                yield (letter,) + tail

    return rec(1, 1)


def rb_commutative(dg: Digraph) -> CSymElement:
    """The commutative Redei-Berge function, in the monomial basis.

    Expands the descent aggregate into monomials over n variables (enough in
    degree n), asserts the result is genuinely symmetric, and reads off the
    monomial coefficients from sorted exponent vectors.
    """
    n = dg.n
    if n == 0:
        return CSymElement(0, "m", {IntPartition([]): 1})
    aggregate = descent_aggregate(dg)
    coeffs: dict[tuple[int, ...], int] = defaultdict(int)
    for strict_at, mult in aggregate.terms.items():
        for word in _fundamental_words(n, strict_at, n):
            exponents = [0] * n
            for letter in word:
                exponents[letter - 1] += 1
            coeffs[tuple(exponents)] += mult
    by_pattern: dict[tuple[int, ...], dict[tuple[int, ...], int]] = defaultdict(dict)
    for vec, c in coeffs.items():
        by_pattern[tuple(sorted(vec, reverse=True))][vec] = c
    terms: dict[IntPartition, int] = {}
    for pattern, vectors in by_pattern.items():
        values = set(vectors.values())
        if len(vectors) < _arrangement_count(pattern):
            values.add(0)  # some arrangement of this pattern never appeared
        if len(values) != 1:
            raise SymmetryViolationError(
                f"descent aggregate of {dg.describe()} is not symmetric at pattern {pattern}"
            )
        value = values.pop()
        if value:
            terms[IntPartition([p for p in pattern if p])] = value
    return CSymElement(n, "m", terms)


def _arrangement_count(pattern: tuple[int, ...]) -> int:
    total = factorial(len(pattern))
    for mult in set(pattern):
        total //= factorial(pattern.count(mult))
    return total


# -- coefficient formulas ------------------------------------------------------


def monomial_coefficient(dg: Digraph, pi: SetPartition) -> int:
    """Signed count of cycle-structured permutations whose type refines pi.

    Evaluated by the restricted enumeration directly, without expanding the
    whole function; agrees with the monomial coefficient after conversion.
    """
    if pi.n != dg.n:
        raise ValueError(f"partition of [{pi.n}] paired with digraph on {dg.n} vertices")
    total = 0
    for phi, _ in signed_cycle_covers(dg, within=pi):
        total += -1 if phi % 2 else 1
    return total


def elementary_coefficient(dg: Digraph, pi: SetPartition) -> Fraction:
    """Coefficient of the elementary basis element at pi, by the Mobius-weighted
    sum over cycle-structured permutations whose type is refined by pi."""
    if pi.n != dg.n:
        raise ValueError(f"partition of [{pi.n}] paired with digraph on {dg.n} vertices")
    total = Fraction(0)
    for phi, blocks in signed_cycle_covers(dg):
        cycle_type = SetPartition(blocks)
        if not refines(pi, cycle_type):
            continue
        sign = -1 if phi % 2 else 1
        total += Fraction(sign * mobius(pi, cycle_type), mobius_from_bottom(cycle_type))
    return total


# -- dispatcher -----------------------------------------------------------------


ALGORITHMS = ("definition", "permutations", "deletion-contraction")


def redei_berge(dg: Digraph, algorithm: str = "auto") -> NCSymElement:
    """Compute the function by the named algorithm; "auto" uses the
    permutation expansion, which has the largest size capacity."""
    if algorithm == "auto":
        algorithm = "permutations"
    if algorithm == "definition":
        return rb_by_colorings(dg)
    if algorithm == "permutations":
        return rb_by_permutations(dg)
    if algorithm == "deletion-contraction":
        return rb_by_deletion_contraction(dg)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS} or 'auto'")
