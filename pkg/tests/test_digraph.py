"""Digraph constructions, predicates, Hamiltonian-path counting, text format."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redeiberge.digraph import (
    Digraph,
    complete_digraph,
    cycle_digraph,
    discrete_digraph,
    format_digraph,
    has_even_directed_cycle,
    parse_digraph,
    path_digraph,
    random_digraph,
    random_tournament,
    simple_cycle_lengths,
)
from redeiberge.errors import MissingEdgeError, SizeLimitError


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Digraph(n, edges)


def all_tournaments(n):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield Digraph(n, {(u, v) if b else (v, u) for (u, v), b in zip(pairs, bits)})


# -- construction -------------------------------------------------------------


def test_edges_validated():
    with pytest.raises(ValueError):
        Digraph(2, [(1, 3)])
    with pytest.raises(ValueError):
        Digraph(0, [(1, 1)])
    Digraph(1, [(1, 1)])  # loops are allowed


def test_equality_is_exact():
    assert Digraph(2, [(1, 2)]) == Digraph(2, [(1, 2)])
    assert Digraph(2, [(1, 2)]) != Digraph(2, [(2, 1)])
    assert Digraph(2, ()) != Digraph(3, ())


# -- complement and opposite ----------------------------------------------------


def test_complement_examples():
    assert complete_digraph(3).complement() == discrete_digraph(3)
    assert discrete_digraph(2).complement() == Digraph(2, [(1, 1), (1, 2), (2, 1), (2, 2)])
    assert path_digraph(2).complement() == Digraph(2, [(1, 1), (2, 2), (2, 1)])


def test_opposite_examples():
    assert path_digraph(2).opposite() == Digraph(2, [(2, 1)])
    symmetric = Digraph(2, [(1, 2), (2, 1)])
    assert symmetric.opposite() == symmetric


@given(digraphs())
def test_complement_and_opposite_are_involutions(dg):
    assert dg.complement().complement() == dg
    assert dg.opposite().opposite() == dg
    assert dg.opposite().complement() == dg.complement().opposite()


def test_tournament_complement_is_opposite_plus_loops():
    for n in range(1, 6):
        for t in all_tournaments(n):
            loopless = {(u, v) for u, v in t.complement().edges if u != v}
            assert loopless == t.opposite().edges


# -- deletion and contraction ------------------------------------------------------


def test_delete_edges_examples():
    assert path_digraph(2).delete_edges([(1, 2)]) == discrete_digraph(2)
    dg = cycle_digraph(3)
    assert dg.delete_edges([]) == dg
    assert dg.delete_edges(dg.edges) == discrete_digraph(3)
    with pytest.raises(MissingEdgeError):
        dg.delete_edges([(2, 1)])


def test_contract_examples():
    assert path_digraph(2).contract_last_edge() == discrete_digraph(1)
    assert path_digraph(3).contract_last_edge() == path_digraph(2)
    assert cycle_digraph(3).contract_last_edge() == Digraph(2, [(1, 2), (2, 1)])
    with pytest.raises(MissingEdgeError):
        discrete_digraph(3).contract_last_edge()
    with pytest.raises(MissingEdgeError):
        Digraph(3, [(3, 2)]).contract_last_edge()


def test_contract_drops_everything_incident_to_the_pair():
    # edges into the old head survive; edges out of the old tail survive;
    # the reverse edge, loops, and the other two directions vanish
    dg = Digraph(3, [(2, 3), (3, 2), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (3, 3)])
    assert dg.contract_last_edge() == Digraph(2, [(1, 2), (2, 1)])


def _assert_contraction_loop_free(dg):
    # loops at untouched vertices survive contraction (they are edges away
    # from the contracted pair); the merged vertex itself never gains one
    result = dg.contract_last_edge()
    assert result.n == dg.n - 1
    assert (result.n, result.n) not in result.edges
    for u, v in result.edges:
        if u == v:
            assert (u, v) in dg.edges and u <= dg.n - 2


def test_contract_never_creates_loops_exhaustive_small():
    for n in (2, 3, 4):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if (u, v) != (n - 1, n)]
        for bits in range(1 << len(pairs)):
            edges = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
            edges.add((n - 1, n))
            _assert_contraction_loop_free(Digraph(n, edges))


def test_contract_never_creates_loops_sampled_n5():
    rng = random.Random(99)
    for _ in range(2000):
        edges = {(u, v) for u in range(1, 6) for v in range(1, 6) if rng.random() < 0.4}
        edges.add((4, 5))
        _assert_contraction_loop_free(Digraph(5, edges))


# -- relabeling and products ----------------------------------------------------------


def test_relabel_examples():
    dg = path_digraph(2)
    assert dg.relabel((1, 2)) == dg
    assert dg.relabel((2, 1)) == Digraph(2, [(2, 1)])


@given(digraphs(max_n=6), st.data())
def test_relabel_is_a_group_action(dg, data):
    delta = tuple(data.draw(st.permutations(range(1, dg.n + 1))))
    inverse = tuple(sorted(range(1, dg.n + 1), key=lambda i: delta[i - 1]))
    assert dg.relabel(delta).relabel(inverse) == dg


def test_product_examples():
    assert discrete_digraph(1) * discrete_digraph(1) == path_digraph(2)
    x = Digraph(3, [(1, 2), (3, 3)])
    assert x * discrete_digraph(0) == x
    assert discrete_digraph(0) * x == x
    assert discrete_digraph(2) * discrete_digraph(1) == Digraph(3, [(1, 3), (2, 3)])


def test_product_shifts_right_factor():
    left = path_digraph(2)
    right = Digraph(2, [(2, 1)])
    expected = Digraph(4, [(1, 2), (4, 3), (1, 3), (1, 4), (2, 3), (2, 4)])
    assert left * right == expected


# -- predicates -----------------------------------------------------------------------


def test_is_tournament_examples():
    assert cycle_digraph(3).is_tournament()
    assert path_digraph(2).is_tournament()
    assert not discrete_digraph(2).is_tournament()
    assert not Digraph(2, [(1, 2), (2, 1)]).is_tournament()
    assert not Digraph(2, [(1, 2), (1, 1)]).is_tournament()


def test_is_disjoint_union_of_paths_examples():
    for n in range(1, 6):
        assert path_digraph(n).is_disjoint_union_of_paths()
        assert discrete_digraph(n).is_disjoint_union_of_paths()
    assert Digraph(5, [(1, 2), (4, 3)]).is_disjoint_union_of_paths()
    assert not cycle_digraph(3).is_disjoint_union_of_paths()
    assert not Digraph(2, [(1, 2), (2, 1)]).is_disjoint_union_of_paths()
    assert not Digraph(3, [(1, 2), (1, 3)]).is_disjoint_union_of_paths()  # out-degree 2
    assert not Digraph(3, [(1, 3), (2, 3)]).is_disjoint_union_of_paths()  # in-degree 2
    assert not Digraph(1, [(1, 1)]).is_disjoint_union_of_paths()  # loop


def test_find_directed_cycle_examples():
    assert cycle_digraph(3).find_directed_cycle() == [(1, 2), (2, 3), (3, 1)]
    assert path_digraph(4).find_directed_cycle() is None
    assert Digraph(2, [(1, 2), (2, 1)]).find_directed_cycle() == [(1, 2), (2, 1)]


def test_find_directed_cycle_loop_handling():
    loop = Digraph(2, [(1, 1)])
    assert loop.find_directed_cycle() is None
    assert loop.find_directed_cycle(include_loops=True) == [(1, 1)]


def test_find_directed_cycle_returns_real_cycle():
    rng = random.Random(4)
    for _ in range(100):
        dg = random_digraph(6, 0.25, rng.randint(0, 10**6), loops=False)
        cycle = dg.find_directed_cycle()
        if cycle is None:
            continue
        assert all(e in dg.edges for e in cycle)
        assert len(cycle) >= 2
        for (a, b), (c, d) in zip(cycle, cycle[1:] + cycle[:1]):
            assert b == c


def test_simple_cycle_lengths_and_evenness():
    assert sorted(simple_cycle_lengths(cycle_digraph(4))) == [4]
    assert sorted(simple_cycle_lengths(cycle_digraph(3))) == [3]
    assert sorted(simple_cycle_lengths(Digraph(2, [(1, 2), (2, 1), (1, 1)]))) == [1, 2]
    assert has_even_directed_cycle(cycle_digraph(4))
    assert has_even_directed_cycle(Digraph(2, [(1, 2), (2, 1)]))
    assert not has_even_directed_cycle(cycle_digraph(3))
    assert not has_even_directed_cycle(Digraph(1, [(1, 1)]))


# -- Hamiltonian paths --------------------------------------------------------------------


def brute_force_hamiltonian(dg):
    count = 0
    for listing in itertools.permutations(range(1, dg.n + 1)):
        if all((a, b) in dg.edges for a, b in zip(listing, listing[1:])):
            count += 1
    return count


def test_hamiltonian_examples():
    assert path_digraph(3).hamiltonian_path_count() == 1
    assert cycle_digraph(3).hamiltonian_path_count() == 3
    transitive = Digraph(3, [(1, 2), (1, 3), (2, 3)])
    assert transitive.hamiltonian_path_count() == 1


def test_hamiltonian_against_brute_force():
    rng = random.Random(12)
    for _ in range(40):
        dg = random_digraph(5, 0.4, rng.randint(0, 10**6))
        assert dg.hamiltonian_path_count() == brute_force_hamiltonian(dg)


@given(digraphs(max_n=7))
@settings(max_examples=40)
def test_hamiltonian_invariant_under_opposite(dg):
    assert dg.hamiltonian_path_count() == dg.opposite().hamiltonian_path_count()


def test_hamiltonian_size_guard():
    with pytest.raises(SizeLimitError):
        discrete_digraph(10).hamiltonian_path_count()


# -- generators -----------------------------------------------------------------------------


def test_complete_includes_loops():
    dg = complete_digraph(2)
    assert dg.edges == frozenset([(1, 1), (1, 2), (2, 1), (2, 2)])


def test_cycle_generator_small_cases():
    assert cycle_digraph(1) == Digraph(1, [(1, 1)])
    assert cycle_digraph(2) == Digraph(2, [(1, 2), (2, 1)])


def test_random_generators_are_seed_deterministic():
    assert random_digraph(6, 0.3, 42) == random_digraph(6, 0.3, 42)
    assert random_digraph(6, 0.3, 42) != random_digraph(6, 0.3, 43)
    assert random_tournament(6, 7) == random_tournament(6, 7)
    for seed in range(20):
        assert random_tournament(5, seed).is_tournament()
    assert all(u != v for u, v in random_digraph(6, 0.5, 3, loops=False).edges)


# -- text format ------------------------------------------------------------------------------


def test_parse_and_format_round_trip():
    dg = Digraph(3, [(1, 2), (3, 3)])
    assert parse_digraph(format_digraph(dg)) == dg


def test_parse_with_comments_and_blanks():
    text = """
    # a triangle
    n 3
    1 2
    2 3  # wraps around next
    3 1
    """
    assert parse_digraph(text) == cycle_digraph(3)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("1 2\n", "line 1"),  # missing header
        ("n 2\n1 2\n1 2\n", "duplicate"),
        ("n 2\n1 3\n", "out of range"),
        ("n 2\n1 two\n", "integers"),
        ("n 2\n1 2 3\n", "expected"),
        ("", "missing"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ValueError) as err:
        parse_digraph(text)
    assert fragment in str(err.value)
