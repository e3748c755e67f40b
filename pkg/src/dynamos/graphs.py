"""Immutable directed/undirected graph types and the small queries built on them.

Vertices are dense integer ids 0..n-1 so that inner loops can index arrays
directly; any external naming is resolved at the I/O layer.  Vertex sets are
plain ``frozenset``/``set`` objects and threshold assignments are tuples of
positive integers indexed by vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateEdgeError,
    EmptySetError,
    SelfLoopError,
    VertexOutOfRangeError,
    ZeroInDegreeError,
)

Thresholds = tuple[int, ...]


@dataclass(frozen=True)
class DirectedGraph:
    """A simple digraph: no self-loops, no parallel duplicates.

    Antiparallel pairs (u->v and v->u) are allowed here; algorithms whose
    guarantees need their absence validate that explicitly.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    in_adj: tuple[tuple[int, ...], ...]
    out_adj: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @cached_property
    def in_degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.in_adj)

    def deg_in(self, v: int) -> int:
        return len(self.in_adj[v])

    def deg_out(self, v: int) -> int:
        return len(self.out_adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DirectedGraph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> DirectedGraph:
    """Validate and build a :class:`DirectedGraph` from an ordered edge list."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    in_adj: list[list[int]] = [[] for _ in range(n)]
    out_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n)
        if u == v:
            raise SelfLoopError(u)
        if (u, v) in seen:
            raise DuplicateEdgeError(u, v)
        seen.add((u, v))
        out_adj[u].append(v)
        in_adj[v].append(u)
    return DirectedGraph(
        n=n,
        edges=frozenset(seen),
        in_adj=tuple(tuple(sorted(a)) for a in in_adj),
        out_adj=tuple(tuple(sorted(a)) for a in out_adj),
    )


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph; edges are stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)


def build_undirected(n: int, edge_list: Iterable[tuple[int, int]]) -> UndirectedGraph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n)
        if u == v:
            raise SelfLoopError(u)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(u, v)
        seen.add(key)
    return UndirectedGraph(n=n, edges=frozenset(seen))


def check_vertex_set(g: DirectedGraph, s: Iterable[int]) -> frozenset[int]:
    """Return ``s`` as a frozenset after range-checking every member."""
    out = frozenset(s)
    for v in out:
        if not (0 <= v < g.n):
            raise VertexOutOfRangeError(v, g.n)
    return out


def check_thresholds(g: DirectedGraph, tau: Iterable[int]) -> Thresholds:
    t = tuple(tau)
    if len(t) != g.n:
        raise ValueError(f"expected {g.n} thresholds, got {len(t)}")
    for v, val in enumerate(t):
        if not isinstance(val, int) or val < 1:
            raise ValueError(f"threshold of vertex {v} must be a positive integer")
    return t


def edge_count_between(g: DirectedGraph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges running from set ``a`` into set ``b`` (sets may overlap)."""
    bset = b if isinstance(b, (set, frozenset)) else set(b)
    total = 0
    for u in a:
        for w in g.out_adj[u]:
            if w in bset:
                total += 1
    return total


def strict_majority(g: DirectedGraph) -> Thresholds:
    """tau(v) = ceil((deg_in(v)+1)/2): strictly more than half the in-neighbors."""
    taus = []
    for v in g.vertices():
        d = g.deg_in(v)
        if d == 0:
            raise ZeroInDegreeError(v)
        taus.append((d + 2) // 2)
    return tuple(taus)


def simple_majority(g: DirectedGraph) -> Thresholds:
    """tau(v) = max(1, ceil(deg_in(v)/2)).

    Half of an odd in-degree is not an integer, so odd degrees round up; the
    floor at one keeps every threshold positive.
    """
    taus = []
    for v in g.vertices():
        d = g.deg_in(v)
        if d == 0:
            raise ZeroInDegreeError(v)
        taus.append(max(1, (d + 1) // 2))
    return tuple(taus)


def has_two_cycle(g: DirectedGraph) -> tuple[int, int] | None:
    """Some antiparallel pair (u, v) with both directions present, else None."""
    for u, v in sorted(g.edges):
        if u < v and (v, u) in g.edges:
            return (u, v)
    return None


class InducedSubgraph(NamedTuple):
    graph: DirectedGraph
    to_parent: tuple[int, ...]
    to_sub: dict[int, int]


def induced_subgraph(g: DirectedGraph, s: Iterable[int]) -> InducedSubgraph:
    """Subgraph on ``s`` plus the id mapping in both directions.

    Members of ``s`` are relabelled 0..len(s)-1 in increasing original id.
    """
    sset = check_vertex_set(g, s)
    if not sset:
        raise EmptySetError()
    order = sorted(sset)
    to_sub = {v: i for i, v in enumerate(order)}
    sub_edges = [
        (to_sub[u], to_sub[v]) for u, v in sorted(g.edges) if u in sset and v in sset
    ]
    return InducedSubgraph(
        graph=build_graph(len(order), sub_edges),
        to_parent=tuple(order),
        to_sub=to_sub,
    )
