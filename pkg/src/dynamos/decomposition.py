"""Strongly connected components and the condensation DAG.

Components come back in a topological order of the condensation: every edge
runs from an earlier component to a later one.  Among all valid topological
orders we pick deterministically, preferring the component whose smallest
vertex id is lowest whenever there is a choice, so outputs are stable across
runs and platforms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .graphs import DirectedGraph


@dataclass(frozen=True)
class Condensation:
    """components[i] are vertex sets; dag_edges holds 0-based (i, j) with i < j."""

    components: tuple[frozenset[int], ...]
    dag_edges: frozenset[tuple[int, int]]

    def component_of(self) -> dict[int, int]:
        where: dict[int, int] = {}
        for i, comp in enumerate(self.components):
            for v in comp:
                where[v] = i
        return where


def _tarjan_components(verts: list[int], out_adj) -> list[list[int]]:
    """Iterative Tarjan restricted to ``verts``; order of components is raw."""
    vset = set(verts)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in verts:
        if root in index:
            continue
        work = [(root, iter(out_adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in vset:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(out_adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def components_of_subset(g: DirectedGraph, verts: Iterable[int]) -> list[frozenset[int]]:
    """Strongly connected components of the subgraph induced on ``verts``,
    in the deterministic topological order described above."""
    vlist = sorted(set(verts))
    raw = _tarjan_components(vlist, g.out_adj)
    if not raw:
        return []
    comp_id = {}
    for i, comp in enumerate(raw):
        for v in comp:
            comp_id[v] = i
    vset = set(vlist)
    succs: list[set[int]] = [set() for _ in raw]
    indeg = [0] * len(raw)
    for v in vlist:
        for w in g.out_adj[v]:
            if w in vset and comp_id[w] != comp_id[v]:
                if comp_id[w] not in succs[comp_id[v]]:
                    succs[comp_id[v]].add(comp_id[w])
                    indeg[comp_id[w]] += 1
    keys = [min(comp) for comp in raw]
    heap = [(keys[i], i) for i in range(len(raw)) if indeg[i] == 0]
    heapq.heapify(heap)
    ordered: list[frozenset[int]] = []
    while heap:
        _, i = heapq.heappop(heap)
        ordered.append(frozenset(raw[i]))
        for j in succs[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (keys[j], j))
    return ordered


def condensation(g: DirectedGraph) -> Condensation:
    comps = components_of_subset(g, g.vertices())
    where: dict[int, int] = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    dag: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if where[u] != where[v]:
            dag.add((where[u], where[v]))
    return Condensation(components=tuple(comps), dag_edges=frozenset(dag))


def is_strongly_connected(g: DirectedGraph) -> bool:
    if g.n == 0:
        return False
    return len(components_of_subset(g, g.vertices())) == 1
