"""Machine verification of the identities the invariant satisfies.

Every check compares exact expansions (normalized to a common basis) or
exact integer counts; a failing report always carries a witness.  Checks
whose hypothesis the instance does not meet are reported as skipped, never
silently dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, has_even_directed_cycle
from .invariant import (
    MAX_DELETION_CONTRACTION,
    MAX_PERMUTATION_ALGORITHM,
    count_friendly,
    rb_by_colorings,
    rb_by_deletion_contraction,
    rb_by_permutations,
    rb_commutative,
    rb_tournament,
    _move_to_last_pair,
)
from .ncsym import NCSymElement, multiply
from .setpart import singletons

ALL_CHECKS = (
    "opposite",
    "tournament-complement",
    "product",
    "deletion-contraction",
    "subset-decomposition",
    "cycle-decomposition",
    "triangle",
    "counting-lemma",
    "cross-algorithm",
    "commutative",
    "integrality",
    "p-nonnegativity",
    "tournament-formula",
    "berge-parity",
    "redei-parity",
)

# the coloring-definition oracle is the slowest route; cap it lower here
MAX_CROSS_ALGORITHM_DEFINITION = 6
MAX_SUBSET_EDGES = 10
MAX_COUNTING_LEMMA_VERTICES = 4
MAX_COUNTING_LEMMA_EDGES = 6


@dataclass(frozen=True)
class VerificationReport:
    check: str
    instance: str
    status: str  # "pass", "fail" or "skipped"
    witness: str | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _element_witness(lhs, rhs) -> str:
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    for key in keys:
        a, b = lhs.coefficient(key), rhs.coefficient(key)
        if a != b:
            return f"coefficient at {key}: {a} != {b}"
    return "elements are equal"


def compare_elements(check: str, instance: str, lhs, rhs) -> VerificationReport:
    """Pass/fail report from two expansions already in a common basis."""
    if lhs == rhs:
        return VerificationReport(check, instance, "pass")
    return VerificationReport(check, instance, "fail", _element_witness(lhs, rhs))


def _skip(check: str, instance: str, reason: str) -> VerificationReport:
    return VerificationReport(check, instance, "skipped", reason)


def check_identities(
    dg: Digraph,
    checks: Iterable[str] | None = None,
    other: Digraph | None = None,
    instance: str | None = None,
) -> list[VerificationReport]:
    """Run the requested identity checks on one instance.

    The product check pairs the instance with ``other`` when given, and with
    itself otherwise.  Failures come back as reports, never exceptions.
    """
    requested = tuple(checks) if checks is not None else ALL_CHECKS
    unknown = [c for c in requested if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {list(ALL_CHECKS)}")
    name = instance if instance is not None else dg.describe()
    runner = _CheckRunner(dg, other, name)
    return [runner.run(check) for check in requested]


class _CheckRunner:
    """Caches the permutation expansion across the checks of one instance."""

    def __init__(self, dg: Digraph, other: Digraph | None, instance: str):
        self.dg = dg
        self.other = other
        self.instance = instance
        self._cache: dict[Digraph, NCSymElement] = {}

    def w(self, dg: Digraph) -> NCSymElement:
        if dg not in self._cache:
            self._cache[dg] = rb_by_permutations(dg)
        return self._cache[dg]

    def run(self, check: str) -> VerificationReport:
        return getattr(self, "check_" + check.replace("-", "_"))()

    def check_opposite(self) -> VerificationReport:
        if self.dg.n > MAX_PERMUTATION_ALGORITHM:
            return _skip("opposite", self.instance, f"n > {MAX_PERMUTATION_ALGORITHM}")
        return compare_elements("opposite", self.instance, self.w(self.dg), self.w(self.dg.opposite()))

    def check_tournament_complement(self) -> VerificationReport:
        if not self.dg.is_tournament():
            return _skip("tournament-complement", self.instance, "hypothesis unmet: not a tournament")
        return compare_elements(
            "tournament-complement", self.instance, self.w(self.dg), self.w(self.dg.complement())
        )

    def check_product(self) -> VerificationReport:
        right = self.other if self.other is not None else self.dg
        total = self.dg.n + right.n
        if total > MAX_PERMUTATION_ALGORITHM:
            return _skip("product", self.instance, f"combined size {total} > {MAX_PERMUTATION_ALGORITHM}")
        lhs = self.w(self.dg.product(right))
        rhs = multiply(self.w(self.dg), self.w(right))
        return compare_elements("product", self.instance, lhs, rhs)

    def check_deletion_contraction(self) -> VerificationReport:
        non_loop = self.dg.non_loop_edges()
        if not non_loop:
            return _skip("deletion-contraction", self.instance, "hypothesis unmet: no non-loop edge")
        n = self.dg.n
        for u, v in non_loop:
            delta = _move_to_last_pair(u, v, n)
            moved = self.dg.relabel(delta)
            lhs = self.w(moved)
            rhs = self.w(moved.delete_edges([(n - 1, n)])) - self.w(moved.contract_last_edge()).induct()
            if lhs != rhs:
                witness = f"edge ({u},{v}): " + _element_witness(lhs, rhs)
                return VerificationReport("deletion-contraction", self.instance, "fail", witness)
        return VerificationReport("deletion-contraction", self.instance, "pass")

    def check_subset_decomposition(self) -> VerificationReport:
        if self.dg.is_disjoint_union_of_paths():
            return _skip("subset-decomposition", self.instance, "hypothesis unmet: disjoint union of paths")
        edges = self.dg.sorted_edges()
        if len(edges) > MAX_SUBSET_EDGES:
            return _skip("subset-decomposition", self.instance, f"|E| > {MAX_SUBSET_EDGES}")
        rhs = self._alternating_deletion_sum(edges)
        return compare_elements("subset-decomposition", self.instance, self.w(self.dg), rhs)

    def check_cycle_decomposition(self) -> VerificationReport:
        cycle = self.dg.find_directed_cycle()
        if cycle is None:
            return _skip("cycle-decomposition", self.instance, "hypothesis unmet: no directed cycle")
        rhs = self._alternating_deletion_sum(cycle)
        return compare_elements("cycle-decomposition", self.instance, self.w(self.dg), rhs)

    def check_triangle(self) -> VerificationReport:
        triangle = _find_triangle(self.dg)
        if triangle is None:
            return _skip("triangle", self.instance, "hypothesis unmet: no directed triangle")
        e1, e2, e3 = triangle
        rhs = (
            self.w(self.dg.delete_edges([e1]))
            + self.w(self.dg.delete_edges([e2]))
            + self.w(self.dg.delete_edges([e3]))
            - self.w(self.dg.delete_edges([e1, e2]))
            - self.w(self.dg.delete_edges([e2, e3]))
            - self.w(self.dg.delete_edges([e3, e1]))
            + self.w(self.dg.delete_edges([e1, e2, e3]))
        )
        return compare_elements("triangle", self.instance, self.w(self.dg), rhs)

    def check_counting_lemma(self) -> VerificationReport:
        n = self.dg.n
        edges = self.dg.sorted_edges()
        if n > MAX_COUNTING_LEMMA_VERTICES or len(edges) > MAX_COUNTING_LEMMA_EDGES:
            return _skip(
                "counting-lemma",
                self.instance,
                f"instance too large for the exhaustive check (n <= {MAX_COUNTING_LEMMA_VERTICES}, "
                f"|E| <= {MAX_COUNTING_LEMMA_EDGES})",
            )
        qualifying = [
            F
            for F in _subsets(edges)
            if F and not Digraph(n, F).is_disjoint_union_of_paths()
        ]
        if not qualifying:
            return _skip("counting-lemma", self.instance, "hypothesis unmet: no qualifying edge subset")
        for colors in itertools.product(range(1, n + 1), repeat=n):
            counts = {S: count_friendly(self.dg.delete_edges(S), colors) for S in _subsets(edges)}
            base = counts[()]
            for F in qualifying:
                total = 0
                for S in _subsets(F):
                    if S:
                        total += (-1) ** (len(S) - 1) * counts[S]
                if total != base:
                    witness = f"coloring {colors}, subset {list(F)}: {total} != {base}"
                    return VerificationReport("counting-lemma", self.instance, "fail", witness)
        return VerificationReport("counting-lemma", self.instance, "pass")

    def check_cross_algorithm(self) -> VerificationReport:
        n = self.dg.n
        if n > MAX_DELETION_CONTRACTION:
            return _skip("cross-algorithm", self.instance, "only the permutation algorithm applies")
        in_m = self.w(self.dg).to_basis("M")
        report = compare_elements(
            "cross-algorithm", self.instance, in_m, rb_by_deletion_contraction(self.dg)
        )
        if report.status == "fail" or n > MAX_CROSS_ALGORITHM_DEFINITION:
            return report
        return compare_elements("cross-algorithm", self.instance, in_m, rb_by_colorings(self.dg))

    def check_commutative(self) -> VerificationReport:
        image = self.w(self.dg).to_basis("M").commutative_image()
        return compare_elements("commutative", self.instance, image, rb_commutative(self.dg))

    def check_integrality(self) -> VerificationReport:
        wp = self.w(self.dg)
        for element, label in ((wp, "P"), (wp.to_basis("M"), "M")):
            if not element.is_integral():
                bad = next(k for k, c in element.terms.items() if c.denominator != 1)
                witness = f"{label}-basis coefficient at {bad} is {element.terms[bad]}"
                return VerificationReport("integrality", self.instance, "fail", witness)
        return VerificationReport("integrality", self.instance, "pass")

    def check_p_nonnegativity(self) -> VerificationReport:
        if has_even_directed_cycle(self.dg):
            return _skip("p-nonnegativity", self.instance, "hypothesis unmet: has an even directed cycle")
        wp = self.w(self.dg)
        for key, coeff in wp.terms.items():
            if coeff < 0:
                witness = f"negative power-sum coefficient {coeff} at {key}"
                return VerificationReport("p-nonnegativity", self.instance, "fail", witness)
        bottom = wp.coefficient(singletons(self.dg.n)) if self.dg.n else 1
        if bottom < 1:
            witness = f"coefficient at the all-singletons partition is {bottom}, expected >= 1"
            return VerificationReport("p-nonnegativity", self.instance, "fail", witness)
        return VerificationReport("p-nonnegativity", self.instance, "pass")

    def check_tournament_formula(self) -> VerificationReport:
        if not self.dg.is_tournament():
            return _skip("tournament-formula", self.instance, "hypothesis unmet: not a tournament")
        return compare_elements(
            "tournament-formula", self.instance, rb_tournament(self.dg), self.w(self.dg)
        )

    def check_berge_parity(self) -> VerificationReport:
        count = self.dg.hamiltonian_path_count()
        complement = self.dg.complement()
        loopless = Digraph(complement.n, {(u, v) for u, v in complement.edges if u != v})
        other = loopless.hamiltonian_path_count()
        if count % 2 == other % 2:
            return VerificationReport("berge-parity", self.instance, "pass")
        witness = f"Hamiltonian path counts {count} and {other} differ mod 2"
        return VerificationReport("berge-parity", self.instance, "fail", witness)

    def check_redei_parity(self) -> VerificationReport:
        if not self.dg.is_tournament():
            return _skip("redei-parity", self.instance, "hypothesis unmet: not a tournament")
        count = self.dg.hamiltonian_path_count()
        if count % 2 == 1:
            return VerificationReport("redei-parity", self.instance, "pass")
        return VerificationReport(
            "redei-parity", self.instance, "fail", f"Hamiltonian path count {count} is even"
        )

    def _alternating_deletion_sum(self, edges: Sequence[tuple[int, int]]) -> NCSymElement:
        total = NCSymElement.zero(self.dg.n, "P")
        for S in _subsets(tuple(edges)):
            if not S:
                continue
            sign = -1 if len(S) % 2 == 0 else 1
            total = total + sign * self.w(self.dg.delete_edges(S))
        return total


def _subsets(items: tuple) -> Iterable[tuple]:
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def _find_triangle(dg: Digraph) -> tuple | None:
    """Lexicographically first directed 3-cycle, as its three edges."""
    for u in range(1, dg.n + 1):
        for v in range(1, dg.n + 1):
            if v == u or (u, v) not in dg.edges or v < u:
                continue
            for w in range(1, dg.n + 1):
                if w in (u, v) or w < u:
                    continue
                if (v, w) in dg.edges and (w, u) in dg.edges:
                    return ((u, v), (v, w), (w, u))
    return None
