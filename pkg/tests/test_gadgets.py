import random
from itertools import combinations

import pytest

from conftest import (
    brute_min_dynamo,
    undirected_min_dynamo,
    undirected_strict_majority,
)

from dynamos import (
    build_undirected,
    forced_vertices,
    has_two_cycle,
    is_dynamo,
    is_strongly_connected,
    min_dynamo,
    strict_majority,
)
from dynamos.errors import IsolatedVertexError
from dynamos.gadgets import (
    bidirectional_complete,
    lower_bound_family,
    random_strongly_connected,
    reduce_constant_threshold,
    reduce_strict_majority,
    two_regular_k5,
)


def test_two_regular_k5_shape():
    g = two_regular_k5()
    assert g.n == 5 and g.m == 10
    assert all(g.deg_in(v) == 2 and g.deg_out(v) == 2 for v in g.vertices())
    assert has_two_cycle(g) is None
    assert is_strongly_connected(g)
    # a tournament: every unordered pair carries exactly one direction
    for u, v in combinations(range(5), 2):
        assert ((u, v) in g.edges) != ((v, u) in g.edges)


def test_lower_bound_family_shape():
    g1 = lower_bound_family(1)
    assert g1.n == 6 and g1.m == 11
    assert g1.deg_in(5) == 1
    g2 = lower_bound_family(2)
    assert g2.n == 11 and g2.deg_in(10) == 2
    assert has_two_cycle(g2) is None
    with pytest.raises(ValueError):
        lower_bound_family(0)


def test_lower_bound_family_minimum():
    g1 = lower_bound_family(1)
    size, witness = min_dynamo(g1, strict_majority(g1))
    assert size == 2
    assert is_dynamo(g1, strict_majority(g1), witness)


def test_bidirectional_complete():
    g = bidirectional_complete(3)
    assert g.m == 6
    assert has_two_cycle(g) is not None
    g5 = bidirectional_complete(5)
    assert all(g5.deg_in(v) == 4 for v in g5.vertices())
    with pytest.raises(ValueError):
        bidirectional_complete(1)


def test_bidirectional_minimum_is_majority():
    g = bidirectional_complete(5)
    size, _ = min_dynamo(g, strict_majority(g))
    assert size == 3


def test_constant_threshold_widget_shape():
    gu = build_undirected(2, [(0, 1)])
    h, tau = reduce_constant_threshold(gu)
    assert h.n == 5 and tau == (2, 2, 2, 2, 2)
    a, b, c = 2, 3, 4
    assert h.deg_in(b) == 1 and h.deg_in(c) == 1 and h.deg_in(a) == 2
    # the two original K2 endpoints keep degree one, so they are forced too
    assert forced_vertices(h, tau) == {0, 1, b, c}
    assert h.deg_in(0) == 1 and h.deg_in(1) == 1

    tri = build_undirected(3, [(0, 1), (1, 2), (0, 2)])
    h3, tau3 = reduce_constant_threshold(tri)
    assert h3.n == 3 + 9
    # all original degrees are 2 here, so exactly the widget b, c vertices
    # are forced: ids base+1 and base+2 of each widget
    assert forced_vertices(h3, tau3) == {4, 5, 7, 8, 10, 11}
    for w in range(3):
        assert h3.deg_in(w) == tri.degree(w)


def test_constant_threshold_identity_k2():
    gu = build_undirected(2, [(0, 1)])
    h, tau = reduce_constant_threshold(gu)
    d_g, _ = undirected_min_dynamo(gu, (2, 2))
    assert d_g == 2
    d_h, witness = min_dynamo(h, tau)
    assert d_h == d_g + 2 * gu.m == 4
    assert is_dynamo(h, tau, witness)


def test_strict_majority_widget_shape():
    gu = build_undirected(2, [(0, 1)])
    h = reduce_strict_majority(gu)
    assert h.n == 6
    l, a, r, x = 2, 3, 4, 5
    assert h.deg_in(l) == h.deg_in(a) == h.deg_in(r) == 1
    assert h.deg_in(x) == 2
    for w in range(2):
        assert h.deg_in(w) == gu.degree(w)

    path = build_undirected(3, [(0, 1), (1, 2)])
    hp = reduce_strict_majority(path)
    assert hp.n == 3 + 8

    with pytest.raises(IsolatedVertexError):
        reduce_strict_majority(build_undirected(3, [(0, 1)]))


def test_strict_majority_identity_k2_and_path():
    gu = build_undirected(2, [(0, 1)])
    h = reduce_strict_majority(gu)
    dyn_g, _ = undirected_min_dynamo(gu, undirected_strict_majority(gu))
    assert dyn_g == 1
    dyn_h, _ = min_dynamo(h, strict_majority(h))
    assert dyn_h == dyn_g + gu.m == 2

    path = build_undirected(3, [(0, 1), (1, 2)])
    hp = reduce_strict_majority(path)
    dyn_p, _ = undirected_min_dynamo(path, undirected_strict_majority(path))
    assert dyn_p == 1
    dyn_hp, _ = min_dynamo(hp, strict_majority(hp))
    assert dyn_hp == dyn_p + path.m == 3


def test_minimum_witnesses_hit_upper_triangle_once():
    gu = build_undirected(2, [(0, 1)])
    h = reduce_strict_majority(gu)
    tau = strict_majority(h)
    best, _ = brute_min_dynamo(h, tau)
    triangle = {2, 3, 4}
    for cand in combinations(range(h.n), best):
        if is_dynamo(h, tau, cand):
            assert len(triangle & set(cand)) == 1


def test_random_strongly_connected():
    g = random_strongly_connected(3, 0, 1)
    assert g.m == 3 and all(g.deg_in(v) == 1 for v in g.vertices())
    assert is_strongly_connected(g)

    g8 = random_strongly_connected(8, 10, 42)
    assert is_strongly_connected(g8) and has_two_cycle(g8) is None
    assert g8.m == 18

    assert random_strongly_connected(8, 10, 42).edges == g8.edges
    assert random_strongly_connected(8, 10, 43).edges != g8.edges

    with pytest.raises(ValueError):
        random_strongly_connected(2, 0, 1)
    with pytest.raises(ValueError):
        random_strongly_connected(5, 100, 1)


def test_pure_cycles_have_odd_in_degrees():
    rng = random.Random(0)
    for _ in range(5):
        g = random_strongly_connected(6, 0, rng.randrange(1 << 20))
        assert all(g.deg_in(v) == 1 for v in g.vertices())
