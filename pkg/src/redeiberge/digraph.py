"""Labeled digraphs and the constructions the invariant needs.

Vertices are labeled 1..n and equality is exact (same n, same edge set);
there is no isomorphism quotient.  Loops are permitted, and the complement
is taken inside the full square V x V, so it creates a loop wherever the
original digraph lacks one.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from .errors import MissingEdgeError, SizeLimitError

Edge = tuple[int, int]

MAX_HAMILTONIAN = 9  # listing count grows factorially


class Digraph:
    """A digraph on vertices 1..n with a set of ordered-pair edges."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edge_set = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edge_set:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_set)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={sorted(self.edges)})"

    def describe(self) -> str:
        return f"n={self.n} edges={sorted(self.edges)}"

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_loop_edges(self) -> list[Edge]:
        return sorted((u, v) for u, v in self.edges if u != v)

    # -- constructions -------------------------------------------------

    def complement(self) -> "Digraph":
        """Edge set (V x V) minus E; includes loops at vertices without one."""
        full = {(u, v) for u in range(1, self.n + 1) for v in range(1, self.n + 1)}
        return Digraph(self.n, full - self.edges)

    def opposite(self) -> "Digraph":
        """Every edge reversed."""
        return Digraph(self.n, {(v, u) for u, v in self.edges})

    def delete_edges(self, removed: Iterable[Edge]) -> "Digraph":
        removed = frozenset((int(u), int(v)) for u, v in removed)
        if not removed <= self.edges:
            missing = sorted(removed - self.edges)
            raise MissingEdgeError(f"edges not in digraph: {missing}")
        return Digraph(self.n, self.edges - removed)

    def contract_last_edge(self) -> "Digraph":
        """Contract the edge (n-1, n); the merged vertex takes label n-1.

        Orientation matters: for w <= n-2 the new vertex receives the edge
        (w, n-1) when w pointed at the old n-1, and the edge (n-1, w) when
        the old n pointed at w.  Everything else incident to n-1 or n is
        dropped, so contraction never creates a loop.
        """
        n = self.n
        if n < 2 or (n - 1, n) not in self.edges:
            raise MissingEdgeError(f"digraph has no edge ({n - 1},{n}) to contract")
        kept = {(u, v) for u, v in self.edges if u <= n - 2 and v <= n - 2}
        for w in range(1, n - 1):
            if (w, n - 1) in self.edges:
                kept.add((w, n - 1))
            if (n, w) in self.edges:
                kept.add((n - 1, w))
        return Digraph(n - 1, kept)

    def relabel(self, delta: Sequence[int]) -> "Digraph":
        """Rename vertex i to delta[i-1]."""
        if len(delta) != self.n:
            raise ValueError(f"permutation of [{len(delta)}] applied to digraph on {self.n} vertices")
        return Digraph(self.n, {(delta[u - 1], delta[v - 1]) for u, v in self.edges})

    def product(self, other: "Digraph") -> "Digraph":
        """Disjoint union plus every edge from a left vertex to a right vertex."""
        shift = self.n
        edges = set(self.edges)
        edges.update((u + shift, v + shift) for u, v in other.edges)
        edges.update((u, v + shift) for u in range(1, self.n + 1) for v in range(1, other.n + 1))
        return Digraph(self.n + other.n, edges)

    def __mul__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.product(other)

    # -- predicates and searches ----------------------------------------

    def is_tournament(self) -> bool:
        """Loopless, with exactly one orientation of every unordered pair."""
        if any(u == v for u, v in self.edges):
            return False
        for u in range(1, self.n + 1):
            for v in range(u + 1, self.n + 1):
                if ((u, v) in self.edges) == ((v, u) in self.edges):
                    return False
        return True

    def is_disjoint_union_of_paths(self) -> bool:
        """No loops, in- and out-degree at most one, and no directed cycle."""
        if any(u == v for u, v in self.edges):
            return False
        out_deg = [0] * (self.n + 1)
        in_deg = [0] * (self.n + 1)
        for u, v in self.edges:
            out_deg[u] += 1
            in_deg[v] += 1
        if any(d > 1 for d in out_deg) or any(d > 1 for d in in_deg):
            return False
        return self.find_directed_cycle() is None

    def find_directed_cycle(self, include_loops: bool = False) -> list[Edge] | None:
        """One directed cycle as an edge list in traversal order, or None.

        Loops count as length-1 cycles only when include_loops is set;
        otherwise cycles have length >= 2.
        """
        if include_loops:
            for v in range(1, self.n + 1):
                if (v, v) in self.edges:
                    return [(v, v)]
        adj = self._adjacency(loops=False)
        state = [0] * (self.n + 1)  # 0 unvisited, 1 on stack, 2 done
        stack: list[int] = []

        def dfs(v: int) -> list[Edge] | None:
            state[v] = 1
            stack.append(v)
            for w in adj[v]:
                if state[w] == 1:
                    i = stack.index(w)
                    cyc = stack[i:]
                    return [(cyc[j], cyc[(j + 1) % len(cyc)]) for j in range(len(cyc))]
                if state[w] == 0:
                    found = dfs(w)
                    if found is not None:
                        return found
            stack.pop()
            state[v] = 2
            return None

        for v in range(1, self.n + 1):
            if state[v] == 0:
                found = dfs(v)
                if found is not None:
                    return found
        return None

    def hamiltonian_path_count(self) -> int:
        """Number of vertex listings whose every consecutive pair is an edge."""
        if self.n > MAX_HAMILTONIAN:
            raise SizeLimitError(f"n={self.n} exceeds the Hamiltonian-path guard {MAX_HAMILTONIAN}")
        if self.n == 0:
            return 1
        adj = self._adjacency(loops=False)
        full = (1 << self.n) - 1

        def extend(v: int, used: int) -> int:
            if used == full:
                return 1
            total = 0
            for w in adj[v]:
                bit = 1 << (w - 1)
                if not used & bit:
                    total += extend(w, used | bit)
            return total

        return sum(extend(s, 1 << (s - 1)) for s in range(1, self.n + 1))

    def _adjacency(self, loops: bool) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in sorted(self.edges):
            if loops or u != v:
                adj[u].append(v)
        return adj


def simple_cycle_lengths(dg: Digraph) -> Iterator[int]:
    """Lengths of all simple directed cycles (loops reported as length 1)."""
    adj = dg._adjacency(loops=False)
    for v in range(1, dg.n + 1):
        if (v, v) in dg.edges:
            yield 1

    def dfs(start: int, v: int, on_path: set[int]) -> Iterator[int]:
        for w in adj[v]:
            if w == start:
                yield len(on_path)
            elif w > start and w not in on_path:
                on_path.add(w)
                yield from dfs(start, w, on_path)
                on_path.remove(w)

    for start in range(1, dg.n + 1):
        yield from dfs(start, start, {start})


def has_even_directed_cycle(dg: Digraph) -> bool:
    """True when some simple directed cycle (2-cycles included) has even length."""
    return any(length % 2 == 0 for length in simple_cycle_lengths(dg))


# -- generators ----------------------------------------------------------


def complete_digraph(n: int) -> Digraph:
    """All n*n ordered pairs, loops included."""
    return Digraph(n, {(u, v) for u in range(1, n + 1) for v in range(1, n + 1)})


def discrete_digraph(n: int) -> Digraph:
    return Digraph(n, ())


def path_digraph(n: int) -> Digraph:
    return Digraph(n, {(i, i + 1) for i in range(1, n)})


def cycle_digraph(n: int) -> Digraph:
    """Directed cycle 1 -> 2 -> ... -> n -> 1; a single loop when n = 1."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return Digraph(n, {(i, i % n + 1) for i in range(1, n + 1)})


def random_digraph(n: int, p: float, seed: int, loops: bool = True) -> Digraph:
    """Each ordered pair (loops included unless disabled) kept with probability p."""
    rng = random.Random(seed)
    edges = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v and not loops:
                continue
            if rng.random() < p:
                edges.add((u, v))
    return Digraph(n, edges)


def random_tournament(n: int, seed: int) -> Digraph:
    """Each unordered pair oriented uniformly at random."""
    rng = random.Random(seed)
    edges = set()
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            edges.add((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, edges)


# -- text format ----------------------------------------------------------


def parse_digraph(text: str) -> Digraph:
    """Parse the text format: "n <count>" then one "u v" edge per line.

    "#" starts a comment; blank lines are ignored; duplicate edges rejected.
    Errors carry the 1-based line number.
    """
    n: int | None = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"line {lineno}: edge ({u},{v}) out of range for n={n}")
        if (u, v) in edges:
            raise ValueError(f"line {lineno}: duplicate edge ({u},{v})")
        edges.add((u, v))
    if n is None:
        raise ValueError("line 1: missing 'n <count>' header")
    return Digraph(n, edges)


def format_digraph(dg: Digraph) -> str:
    lines = [f"n {dg.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(dg.edges))
    return "\n".join(lines) + "\n"
