"""Shared test helpers: naive reference oracles and instance generators.

Everything here is deliberately independent of the package's own search
code: the directed oracle is plain ascending-cardinality subset enumeration,
and the undirected oracle implements neighbor-count activation from scratch.
"""

from __future__ import annotations

import random
from itertools import combinations

from dynamos import DirectedGraph, build_graph, is_dynamo
from dynamos.graphs import UndirectedGraph


def brute_min_dynamo(g: DirectedGraph, tau) -> tuple[int, frozenset[int]]:
    """Reference oracle: try subsets by size, lexicographic within a size."""
    verts = list(g.vertices())
    for k in range(0, g.n + 1):
        for cand in combinations(verts, k):
            if is_dynamo(g, tau, cand):
                return k, frozenset(cand)
    raise AssertionError("the full vertex set is always a dynamo")


def undirected_activate(gu: UndirectedGraph, tau, seed) -> set[int]:
    active = set(seed)
    changed = True
    while changed:
        changed = False
        for v in range(gu.n):
            if v in active:
                continue
            if sum(1 for u in gu.adj[v] if u in active) >= tau[v]:
                active.add(v)
                changed = True
    return active


def undirected_min_dynamo(gu: UndirectedGraph, tau) -> tuple[int, frozenset[int]]:
    verts = list(range(gu.n))
    for k in range(0, gu.n + 1):
        for cand in combinations(verts, k):
            if len(undirected_activate(gu, tau, cand)) == gu.n:
                return k, frozenset(cand)
    raise AssertionError("unreachable")


def undirected_strict_majority(gu: UndirectedGraph) -> tuple[int, ...]:
    return tuple((gu.degree(v) + 2) // 2 for v in range(gu.n))


def enumerate_two_cycle_free(n: int):
    """All simple digraphs on n labelled vertices without antiparallel pairs.

    Every unordered pair independently carries no edge, a forward edge, or a
    backward edge: 3**C(n,2) graphs in total, yielded as edge lists.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    state = [0] * len(pairs)
    while True:
        edges = []
        for (u, v), s in zip(pairs, state):
            if s == 1:
                edges.append((u, v))
            elif s == 2:
                edges.append((v, u))
        yield edges
        i = 0
        while i < len(pairs) and state[i] == 2:
            state[i] = 0
            i += 1
        if i == len(pairs):
            return
        state[i] += 1


def quick_strongly_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    """Cheap connectivity filter for enumeration sweeps (no graph objects)."""
    if n == 0:
        return False
    out = [0] * n
    inc = [0] * n
    for u, v in edges:
        out[u] |= 1 << v
        inc[v] |= 1 << u
    for adj in (out, inc):
        seen = 1
        frontier = 1
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & ~seen
            seen |= new
            frontier |= new
        if seen != (1 << n) - 1:
            return False
    return True


def random_mixed_digraph(rng: random.Random, n_lo: int = 4, n_hi: int = 16) -> DirectedGraph:
    """Random 2-cycle-free digraph with positive minimum in-degree.

    Mixes strongly connected instances with multi-component ones built from
    cycle blocks joined by forward edges, plus occasional sink vertices.
    """
    from dynamos.gadgets import random_strongly_connected

    n = rng.randint(n_lo, n_hi)
    if rng.random() < 0.5:
        cap = n * (n - 1) // 2 - n
        return random_strongly_connected(n, rng.randint(0, min(cap, 2 * n)), rng.randrange(1 << 30))

    # Block sizes are 1 or >= 3 (a 2-cycle-free strong component cannot have
    # size 2); the first block must be a real component so every vertex in it
    # has an internal in-edge.
    sizes = [rng.randint(3, min(n, 8))]
    remaining = n - sizes[0]
    while remaining > 0:
        if remaining < 3 or rng.random() < 0.4:
            sizes.append(1)
            remaining -= 1
        else:
            s = rng.randint(3, min(remaining, 8))
            sizes.append(s)
            remaining -= s

    edges: set[tuple[int, int]] = set()
    blocks: list[list[int]] = []
    base = 0
    for s in sizes:
        blocks.append(list(range(base, base + s)))
        if s >= 3:
            sub = random_strongly_connected(
                s, rng.randint(0, s * (s - 1) // 2 - s), rng.randrange(1 << 30)
            )
            edges.update((base + u, base + v) for u, v in sub.edges)
        base += s
    # Cross edges run strictly from earlier to later blocks, so no
    # antiparallel pair can arise; singletons need one to gain in-degree.
    for i, block in enumerate(blocks[1:], start=1):
        for v in block:
            if len(block) == 1 or rng.random() < 0.3:
                u = rng.choice(blocks[rng.randrange(i)])
                edges.add((u, v))
    g = build_graph(n, sorted(edges))
    assert all(g.deg_in(v) >= 1 for v in g.vertices())
    return g


def random_even_indegree_strong(rng: random.Random, n: int) -> DirectedGraph:
    """Strongly connected graph whose in-degrees are all even.

    Either the union of two edge-disjoint Hamiltonian cycles (in-degree 2,
    found by rejection) or a circulant with shift set avoiding antiparallel
    pairs (in-degree 2 or 4).  Odd n plus even degrees is the shape that can
    land the pivot construction in its balanced hard case.
    """
    assert n >= 5
    if rng.random() < 0.5:
        while True:
            edges: set[tuple[int, int]] = set()
            ok = True
            for _ in range(2):
                cycle = list(range(n))
                rng.shuffle(cycle)
                for i in range(n):
                    u, v = cycle[i], cycle[(i + 1) % n]
                    if (u, v) in edges or (v, u) in edges:
                        ok = False
                        break
                    edges.add((u, v))
                if not ok:
                    break
            if ok:
                g = build_graph(n, sorted(edges))
                assert all(g.deg_in(v) == 2 for v in g.vertices())
                return g
    # circulant: i -> i+s (mod n) for each shift s; shifts s and n-s would
    # form antiparallel pairs, so pick at most one of each such couple
    want = 2 if n < 9 or rng.random() < 0.5 else 4
    couples = [(s, n - s) for s in range(1, (n + 1) // 2)]
    rng.shuffle(couples)
    shifts = [1]  # keeps the graph strongly connected
    for s, t in couples:
        if len(shifts) == want:
            break
        pick = s if rng.random() < 0.5 else t
        if pick not in shifts and (n - pick) not in shifts:
            shifts.append(pick)
    edges = [(i, (i + s) % n) for s in shifts for i in range(n)]
    g = build_graph(n, sorted(set(edges)))
    assert all(g.deg_in(v) == len(shifts) for v in g.vertices())
    if rng.random() < 0.5:
        return g
    # optionally push a subset to in-degree +2 with two extra disjoint cycles
    # over it, keeping all in-degrees even but no longer uniform
    k = rng.randint(3, max(3, n - 2))
    subset = rng.sample(range(n), k)
    eset = set(g.edges)
    added = 0
    for _ in range(60):
        if added == 2:
            break
        rng.shuffle(subset)
        extra = [(subset[i], subset[(i + 1) % k]) for i in range(k)]
        if all((u, v) not in eset and (v, u) not in eset for u, v in extra):
            eset.update(extra)
            added += 1
    if added != 2:
        return g
    g2 = build_graph(n, sorted(eset))
    assert all(g2.deg_in(v) % 2 == 0 for v in g2.vertices())
    return g2


def random_undirected(rng: random.Random, n_max: int = 5, m_max: int = 7, isolated_ok: bool = False) -> UndirectedGraph:
    from dynamos import build_undirected

    while True:
        n = rng.randint(2, n_max)
        all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(1, min(m_max, len(all_pairs)))
        edges = rng.sample(all_pairs, m)
        gu = build_undirected(n, edges)
        if isolated_ok or all(gu.degree(v) >= 1 for v in range(n)):
            return gu
