"""The lattice of set partitions of {1..n} under refinement.

Partitions are kept in canonical form (elements ascending inside each block,
blocks ordered by their minimum), which fixes equality, hashing and the
enumeration order.  All weights use Python's arbitrary-precision integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import DegreeMismatchError, OrderViolationError, SizeLimitError

MAX_GROUND_SET = 12  # Bell(12) ~ 4.2e6; enumeration beyond this is refused


class SetPartition:
    """A partition of {1..n} into disjoint nonempty blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        seen: set[int] = set()
        total = 0
        for block in canon:
            if not block:
                raise ValueError("empty block in set partition")
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
            total += len(block)
        if n is None:
            n = total
        if n != total or seen != set(range(1, n + 1)):
            raise ValueError(f"blocks do not partition {{1..{n}}}: {canon}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks and self.n == other.n

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other):
        # canonical-form lexicographic order; used for deterministic output
        if not isinstance(other, SetPartition):
            return NotImplemented
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __repr__(self):
        return f"SetPartition({self})"

    def __str__(self):
        if self.n == 0:
            return ""
        if self.n <= 9:
            return "/".join("".join(str(x) for x in b) for b in self.blocks)
        return "/".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        """The block containing element x."""
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"element {x} not in ground set of size {self.n}")


class IntPartition:
    """A weakly decreasing sequence of positive integer parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted(parts, reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("IntPartition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, IntPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        if not isinstance(other, IntPartition):
            return NotImplemented
        return self.parts < other.parts

    def __repr__(self):
        return f"IntPartition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def parse_set_partition(text: str) -> SetPartition:
    """Parse "134/2" or the explicit "{1,3,4}/{2}" form (required once n > 9)."""
    text = text.strip()
    if text == "":
        return SetPartition([])
    blocks = []
    for chunk in text.split("/"):
        chunk = chunk.strip()
        if chunk.startswith("{") and chunk.endswith("}"):
            blocks.append([int(x) for x in chunk[1:-1].split(",")])
        elif chunk.isdigit():
            blocks.append([int(c) for c in chunk])
        else:
            raise ValueError(f"cannot parse set partition block {chunk!r}")
    return SetPartition(blocks)


def singletons(n: int) -> SetPartition:
    """The minimal partition of {1..n}: every element alone."""
    return SetPartition([[i] for i in range(1, n + 1)])


def one_block(n: int) -> SetPartition:
    """The maximal partition of {1..n}: a single block."""
    return SetPartition([range(1, n + 1)] if n else [])


def _partitions_of(items: tuple) -> Iterator[list[list]]:
    """All partitions of a sequence of distinct items, as lists of lists."""
    if not items:
        yield []
        return
    head = items[0]
    for smaller in _partitions_of(items[1:]):
        yield [[head]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[head] + smaller[i]] + smaller[i + 1:]


def enumerate_partitions(n: int) -> list[SetPartition]:
    """Every set partition of {1..n}, in canonical-form lexicographic order."""
    if not 1 <= n <= MAX_GROUND_SET:
        raise SizeLimitError(f"ground set size {n} outside 1..{MAX_GROUND_SET}")
    return sorted(SetPartition(blocks) for blocks in _partitions_of(tuple(range(1, n + 1))))


def bell_number(n: int) -> int:
    """Number of set partitions of {1..n}, by the Bell triangle recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def refines(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff every block of sigma lies inside a block of pi."""
    if sigma.n != pi.n:
        raise DegreeMismatchError(f"ground sets differ: {sigma.n} vs {pi.n}")
    index = _block_index(pi)
    return all(len({index[x] for x in b}) == 1 for b in sigma.blocks)


def _block_index(pi: SetPartition) -> dict[int, int]:
    return {x: i for i, b in enumerate(pi.blocks) for x in b}


def mobius(sigma: SetPartition, pi: SetPartition) -> int:
    """Mobius function of the interval [sigma, pi] in the partition lattice.

    The interval factors as a product over the blocks of pi; a block holding
    k blocks of sigma contributes (-1)**(k-1) * (k-1)!.
    """
    if not refines(sigma, pi):
        raise OrderViolationError(f"{sigma} does not refine {pi}")
    index = _block_index(pi)
    counts = [0] * len(pi.blocks)
    for b in sigma.blocks:
        counts[index[b[0]]] += 1
    result = 1
    for k in counts:
        result *= (-1) ** (k - 1) * factorial(k - 1)
    return result


def mobius_from_bottom(pi: SetPartition) -> int:
    """mu(0-hat, pi): each block of size s contributes (-1)**(s-1) * (s-1)!."""
    result = 1
    for b in pi.blocks:
        result *= (-1) ** (len(b) - 1) * factorial(len(b) - 1)
    return result


def lambda_of(pi: SetPartition) -> IntPartition:
    """The integer partition of block sizes."""
    return IntPartition(len(b) for b in pi.blocks)


def multiplicity_weight(pi: SetPartition) -> int:
    """Product of r_i! where r_i is the number of blocks of size i."""
    counts: dict[int, int] = {}
    for b in pi.blocks:
        counts[len(b)] = counts.get(len(b), 0) + 1
    result = 1
    for r in counts.values():
        result *= factorial(r)
    return result


def factorial_weight(pi: SetPartition) -> int:
    """Product of |B|! over the blocks B."""
    result = 1
    for b in pi.blocks:
        result *= factorial(len(b))
    return result


def insert_last(pi: SetPartition) -> SetPartition:
    """Extend the ground set by one, putting n+1 into the block of n."""
    n = pi.n
    if n < 1:
        raise ValueError("cannot insert into the empty partition")
    blocks = [list(b) + [n + 1] if n in b else list(b) for b in pi.blocks]
    return SetPartition(blocks)


def apply_perm(delta: Sequence[int], pi: SetPartition) -> SetPartition:
    """Push the blocks of pi through the permutation i -> delta[i-1]."""
    if len(delta) != pi.n:
        raise DegreeMismatchError(f"permutation of [{len(delta)}] applied to partition of [{pi.n}]")
    return SetPartition([[delta[x - 1] for x in b] for b in pi.blocks])


def cycle_type_partition(sigma: Sequence[int]) -> SetPartition:
    """The set partition whose blocks are the orbits of the permutation."""
    n = len(sigma)
    seen = [False] * (n + 1)
    blocks = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orbit = []
        x = start
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = sigma[x - 1]
        blocks.append(orbit)
    return SetPartition(blocks)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inverse_perm(delta: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(delta)
    for i, image in enumerate(delta, start=1):
        inv[image - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def coarsenings(pi: SetPartition) -> tuple[SetPartition, ...]:
    """All partitions sigma with pi <= sigma, obtained by merging blocks."""
    result = []
    for grouping in _partitions_of(pi.blocks):
        merged = [list(itertools.chain.from_iterable(group)) for group in grouping]
        result.append(SetPartition(merged))
    return tuple(sorted(result))


@lru_cache(maxsize=None)
def refinements(pi: SetPartition) -> tuple[SetPartition, ...]:
    """All partitions sigma with sigma <= pi, obtained by splitting blocks."""
    per_block = [list(_partitions_of(b)) for b in pi.blocks]
    result = []
    for choice in itertools.product(*per_block):
        blocks = list(itertools.chain.from_iterable(choice))
        result.append(SetPartition(blocks))
    return tuple(sorted(result))
