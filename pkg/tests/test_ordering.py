import random
from fractions import Fraction
from itertools import permutations

import pytest

from dynamos import (
    Ordering,
    build_graph,
    dynamo_from_ordering,
    expected_permutation_size,
    in_balance,
    in_balances,
    is_dynamo,
    permutation_dynamo,
    strict_majority,
    transmit_after,
    transmit_before,
)
from dynamos.errors import NotBeforeError, ZeroInDegreeError
from dynamos.gadgets import random_strongly_connected, two_regular_k5

TRIANGLE = [(0, 1), (1, 2), (2, 0)]
A, B, C, D = 0, 1, 2, 3


def seq_order(*seq):
    return Ordering.from_sequence(list(seq))


def test_ordering_round_trip():
    order = seq_order(2, 0, 1)
    assert order.ranks == (2, 3, 1)
    assert order.sequence() == (2, 0, 1)
    assert Ordering.identity(3).sequence() == (0, 1, 2)
    with pytest.raises(ValueError):
        Ordering(ranks=(1, 1, 2))


def test_balance_small_graphs():
    k5 = two_regular_k5()
    ident = Ordering.identity(5)
    assert in_balances(k5, ident) == [2, 0, -2, -2, -2]
    tri = build_graph(3, TRIANGLE)
    assert in_balances(tri, Ordering.identity(3)) == [1, -1, -1]


def test_balance_extreme_position():
    rng = random.Random(2)
    for _ in range(20):
        g = random_strongly_connected(6, rng.randint(0, 8), rng.randrange(1 << 20))
        v = rng.randrange(6)
        rest = [u for u in g.vertices() if u != v]
        order = Ordering.from_sequence([v] + rest)
        assert in_balance(g, order, v) == g.deg_in(v)


def test_balance_sum_is_backward_minus_forward():
    rng = random.Random(4)
    for _ in range(30):
        g = random_strongly_connected(7, rng.randint(0, 10), rng.randrange(1 << 20))
        seq = list(g.vertices())
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        backward = sum(1 for u, v in g.edges if order.ranks[u] > order.ranks[v])
        forward = g.m - backward
        assert sum(in_balances(g, order)) == backward - forward


def test_transmit_after_displayed_example():
    order = seq_order(A, B, C, D)
    assert transmit_after(order, A, C).sequence() == (B, C, A, D)
    assert transmit_after(seq_order(A, B), A, B).sequence() == (B, A)
    with pytest.raises(NotBeforeError):
        transmit_after(order, C, A)
    with pytest.raises(NotBeforeError):
        transmit_after(order, A, A)


def test_transmit_before_displayed_example():
    order = seq_order(A, B, C, D)
    assert transmit_before(order, B, D).sequence() == (A, D, B, C)
    assert transmit_before(seq_order(A, B), A, B).sequence() == (B, A)
    with pytest.raises(NotBeforeError):
        transmit_before(order, D, B)


def test_transmit_bijectivity_random():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(2, 9)
        seq = list(range(n))
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        u, v = rng.sample(range(n), 2)
        if order.ranks[u] > order.ranks[v]:
            u, v = v, u
        for moved in (transmit_after(order, u, v), transmit_before(order, u, v)):
            assert sorted(moved.ranks) == list(range(1, n + 1))


def test_transmit_inverse_via_successor():
    """Moving u after v and then back before u's old successor restores sigma."""
    for n in range(2, 6):
        for seq in permutations(range(n)):
            order = Ordering.from_sequence(seq)
            for i in range(n - 1):
                for j in range(i + 1, n):
                    u, v = seq[i], seq[j]
                    moved = transmit_after(order, u, v)
                    successor = seq[i + 1]
                    back = transmit_before(moved, successor, u)
                    assert back == order


def test_transmit_adjacent_pair_round_trip():
    order = seq_order(A, B, C, D)
    swapped = transmit_after(order, B, C)
    assert transmit_before(swapped, C, B) == order


def test_dynamo_from_ordering_small():
    k5 = two_regular_k5()
    assert dynamo_from_ordering(k5, Ordering.identity(5)) == {0, 1}
    tri = build_graph(3, TRIANGLE)
    assert dynamo_from_ordering(tri, Ordering.identity(3)) == {0}
    with pytest.raises(ZeroInDegreeError):
        dynamo_from_ordering(build_graph(2, [(0, 1)]), Ordering.identity(2))


def test_dynamo_from_ordering_always_valid():
    rng = random.Random(8)
    for _ in range(60):
        g = random_strongly_connected(7, rng.randint(0, 12), rng.randrange(1 << 20))
        seq = list(g.vertices())
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        seeds = dynamo_from_ordering(g, order)
        assert len(seeds) <= (g.n + 1) // 2
        assert is_dynamo(g, strict_majority(g), seeds)


def test_reversal_swaps_sign_classes():
    rng = random.Random(10)
    for _ in range(30):
        g = random_strongly_connected(6, rng.randint(0, 9), rng.randrange(1 << 20))
        seq = list(g.vertices())
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        bal = in_balances(g, order)
        rev = in_balances(g, order.reversed())
        assert all(rb == -b for rb, b in zip(rev, bal))


def test_permutation_dynamo_examples():
    k5 = two_regular_k5()
    tau = (2, 2, 2, 2, 2)
    assert permutation_dynamo(k5, tau, Ordering.identity(5)) == {0, 1}
    tri = build_graph(3, TRIANGLE)
    assert permutation_dynamo(tri, (1, 1, 1), seq_order(0, 1, 2)) == {0}
    # reversed cycle order: both of the first two vertices lack earlier
    # in-neighbors, so both are kept
    assert permutation_dynamo(tri, (1, 1, 1), seq_order(2, 1, 0)) == {1, 2}


def test_permutation_dynamo_counts_before():
    rng = random.Random(12)
    for _ in range(40):
        g = random_strongly_connected(6, rng.randint(0, 9), rng.randrange(1 << 20))
        tau = tuple(rng.randint(1, 3) for _ in g.vertices())
        seq = list(g.vertices())
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        seeds = permutation_dynamo(g, tau, order)
        for v in g.vertices():
            before = sum(1 for u in g.in_adj[v] if order.ranks[u] < order.ranks[v])
            assert (v in seeds) == (before < tau[v])
        assert is_dynamo(g, tau, seeds)


def test_forced_vertex_always_kept():
    g = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)])
    tau = (1, 1, 1, 3)  # vertex 3 needs more than its in-degree
    for seq in permutations(range(4)):
        assert 3 in permutation_dynamo(g, tau, Ordering.from_sequence(seq))


def test_strict_majority_matches_balance_rule():
    rng = random.Random(14)
    for _ in range(40):
        g = random_strongly_connected(7, rng.randint(0, 12), rng.randrange(1 << 20))
        seq = list(g.vertices())
        rng.shuffle(seq)
        order = Ordering.from_sequence(seq)
        bal = in_balances(g, order)
        keep = permutation_dynamo(g, strict_majority(g), order)
        assert keep == {v for v in g.vertices() if bal[v] >= 0}


def test_expected_size_closed_forms():
    tri = build_graph(3, TRIANGLE)
    assert expected_permutation_size(tri, strict_majority(tri)) == Fraction(3, 2)
    k5 = two_regular_k5()
    assert expected_permutation_size(k5, (2, 2, 2, 2, 2)) == Fraction(10, 3)
    tau_forced = tuple(k5.deg_in(v) + 1 for v in k5.vertices())
    assert expected_permutation_size(k5, tau_forced) == 5


def test_expected_size_is_exact_average():
    rng = random.Random(16)
    tri = build_graph(3, TRIANGLE)
    g5 = random_strongly_connected(5, 4, 99)
    for g, tau in [
        (tri, strict_majority(tri)),
        (g5, strict_majority(g5)),
        (g5, tuple(rng.randint(1, 3) for _ in g5.vertices())),
    ]:
        total = 0
        count = 0
        for seq in permutations(range(g.n)):
            total += len(permutation_dynamo(g, tau, Ordering.from_sequence(seq)))
            count += 1
        assert Fraction(total, count) == expected_permutation_size(g, tau)
