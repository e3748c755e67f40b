"""Instance generators: extremal families, hardness-reduction widgets, random graphs.

The two reductions rewrite each undirected edge into a constant-size directed
widget; fresh widget vertices are appended after the original ids, widget by
widget in input edge order, so outputs are stable for golden tests.
"""

from __future__ import annotations

import random

from .errors import IsolatedVertexError
from .graphs import DirectedGraph, Thresholds, UndirectedGraph, build_graph


def two_regular_k5() -> DirectedGraph:
    """Orientation of K5 with every in-degree 2: two edge-disjoint 5-cycles."""
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
    return build_graph(5, edges)


def lower_bound_family(k: int) -> DirectedGraph:
    """k disjoint 2-regular K5 blocks feeding one sink x (id 5k).

    Any strict-majority dynamo needs two vertices per block, so the minimum
    is 2k out of 5k+1 vertices; the ratio tends to 2/5 as k grows.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    edges: list[tuple[int, int]] = []
    for j in range(k):
        base = 5 * j
        edges += [(base + i, base + (i + 1) % 5) for i in range(5)]
        edges += [(base + i, base + (i + 2) % 5) for i in range(5)]
        edges.append((base, 5 * k))
    return build_graph(5 * k + 1, edges)


def bidirectional_complete(n: int) -> DirectedGraph:
    """All n(n-1) ordered pairs; every pair is an antiparallel 2-cycle."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return build_graph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def reduce_constant_threshold(
    gu: UndirectedGraph,
) -> tuple[DirectedGraph, Thresholds]:
    """Rewrite an undirected constant-2 instance into a directed one.

    Each undirected edge {u, v} becomes fresh vertices a, b, c wired as
    a->b, b->c, c->a, v->a, a->u, u->v, and every vertex of the output gets
    threshold 2.  b and c keep in-degree 1, so they are forced seeds; once
    they are seeded, a relays v's activation to u while the kept edge u->v
    covers the other direction, which reproduces the undirected dynamics.
    """
    if gu.n == 0:
        raise ValueError("input graph must have at least one vertex")
    n = gu.n
    edges: list[tuple[int, int]] = []
    nxt = n
    for u, v in sorted(gu.edges):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(a, b), (b, c), (c, a), (v, a), (a, u), (u, v)]
    h = build_graph(nxt, edges)
    assert h.n == gu.n + 3 * gu.m
    for w in range(gu.n):
        assert h.deg_in(w) == gu.degree(w)
    return h, tuple([2] * h.n)


def reduce_strict_majority(gu: UndirectedGraph) -> DirectedGraph:
    """Rewrite an undirected strict-majority instance into a directed one.

    Each undirected edge {u, v} becomes fresh vertices l, a, r, x: a directed
    triangle l->a->r->l, a bridge a->x, and a lower triangle u->v, v->x, x->u.
    Original vertices keep their undirected degree as in-degree, so the
    strict-majority thresholds transfer unchanged; each upper triangle costs
    any dynamo exactly one seed.
    """
    for v in range(gu.n):
        if gu.degree(v) == 0:
            raise IsolatedVertexError(v)
    n = gu.n
    edges: list[tuple[int, int]] = []
    nxt = n
    for u, v in sorted(gu.edges):
        l, a, r, x = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        edges += [(l, a), (a, r), (r, l), (a, x), (u, v), (v, x), (x, u)]
    h = build_graph(nxt, edges)
    assert h.n == gu.n + 4 * gu.m
    for w in range(gu.n):
        assert h.deg_in(w) == gu.degree(w)
    return h


def random_strongly_connected(n: int, extra_edges: int, seed: int) -> DirectedGraph:
    """Random Hamiltonian cycle plus ``extra_edges`` extra arcs, 2-cycle-free.

    Candidate extra arcs that would duplicate an edge, close an antiparallel
    pair, or loop are skipped, so the output is always simple and strongly
    connected.  Deterministic for a fixed seed.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    capacity = n * (n - 1) // 2 - n
    if extra_edges < 0 or extra_edges > capacity:
        raise ValueError(f"extra_edges must be between 0 and {capacity} for n={n}")
    rng = random.Random(seed)
    cycle = list(range(n))
    rng.shuffle(cycle)
    edges = {(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
    while len(edges) < n + extra_edges:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or (u, v) in edges or (v, u) in edges:
            continue
        edges.add((u, v))
    return build_graph(n, sorted(edges))
