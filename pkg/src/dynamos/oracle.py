"""Exact minimum-dynamo search, the ground truth the rest of the suite is
checked against.

The search leans on a duality of the monotone cascade.  Call a vertex set X
*inert* when every v in X sees fewer than tau(v) in-neighbors outside X;
even with all of V \\ X active, nothing inside X can ever activate.  A seed
set is a dynamo exactly when it intersects every inert set: a stalled
cascade leaves the inactive remainder as an inert set avoiding the seeds,
and conversely a cascade can never enter an untouched inert set.  Branching
on small inert sets therefore explores the same answer space as subset
enumeration while skipping almost all of it.

Candidates are explored in ascending vertex order, so the first witness
found at the minimum cardinality is the lexicographically least one.
"""

from __future__ import annotations

from . import _backend
from .errors import TooLargeError
from .graphs import DirectedGraph, Thresholds, check_thresholds

DEFAULT_LIMIT = 22


def forced_vertices(g: DirectedGraph, tau: Thresholds) -> frozenset[int]:
    """Vertices with tau above their in-degree: contained in every dynamo."""
    tau = check_thresholds(g, tau)
    return frozenset(v for v in g.vertices() if tau[v] > g.deg_in(v))


class _Search:
    def __init__(self, g: DirectedGraph, tau: Thresholds, backend):
        self.n = g.n
        self.full = (1 << g.n) - 1
        handle = _backend.graph_handle(g, backend)
        self.closure = backend.make_closure(handle, tau)
        # ge_mask[i]: all vertex ids >= i
        self.ge_mask = [(self.full >> i) << i for i in range(g.n + 1)]
        self.pool: list[int] = []
        self.disjoint: list[int] = []

    def core(self, y: int) -> int:
        """Largest inert subset of y (may be empty)."""
        return y & ~self.closure(self.full & ~y)

    def minimal_inert(self, x: int) -> int:
        """Shrink a nonempty inert set to an inclusion-minimal one.

        One ascending pass suffices: inert sets are closed under union, so
        ``core`` is monotone and a vertex that survives its own removal test
        would survive it at any later, smaller set as well.
        """
        probe = x
        while probe:
            bit = probe & -probe
            probe &= probe - 1
            if not (x & bit):
                continue
            smaller = self.core(x & ~bit)
            if smaller:
                x = smaller
        return x

    def build_packing(self) -> int:
        """Greedy family of pairwise disjoint minimal inert sets.

        Its size lower-bounds every dynamo (one seed per member), and the
        family doubles as the initial branching pool.
        """
        avail = self.full
        packs: list[int] = []
        while True:
            c = self.core(avail)
            if not c:
                break
            x = self.minimal_inert(c)
            packs.append(x)
            avail &= ~x
        self.disjoint = packs
        self.pool = list(packs)
        return len(packs)

    def lex_witness(self, k: int, forced_mask: int, forced_count: int):
        """Lexicographically least dynamo of size exactly k, or None.

        Seeds always include the forced vertices; the remaining picks are
        chosen in ascending id order, which makes the first completion the
        lexicographically least witness overall.
        """
        budget = k - forced_count
        if budget < 0:
            return None
        closure = self.closure
        full = self.full
        disjoint = self.disjoint
        pool = self.pool
        ge_mask = self.ge_mask
        chosen: list[int] = []

        def rec(s_mask: int, cl: int, next_min: int, r: int) -> bool:
            if cl == full:
                return True
            if r == 0:
                # Remember why this branch is dead if no pooled set explains it.
                if all(x & s_mask for x in pool):
                    pool.append(self.minimal_inert(full & ~cl))
                return False
            unhit = 0
            for x in disjoint:
                if not (x & s_mask):
                    unhit += 1
                    if unhit > r:
                        return False
            avail = ge_mask[next_min] & ~cl
            for x in pool:
                if not (x & s_mask) and not (x & avail):
                    return False
            if unhit == r:
                union = 0
                for x in disjoint:
                    if not (x & s_mask):
                        union |= x
                avail &= union
            m = avail
            while m:
                bit = m & -m
                m &= m - 1
                v = bit.bit_length() - 1
                chosen.append(v)
                if rec(s_mask | bit, closure(cl | bit), v + 1, r - 1):
                    return True
                chosen.pop()
            return False

        base_cl = closure(forced_mask)
        if rec(forced_mask, base_cl, 0, budget):
            forced_ids = [v for v in range(self.n) if (forced_mask >> v) & 1]
            witness = sorted(forced_ids + chosen)
            assert len(witness) == k
            return witness
        return None


def min_dynamo(
    g: DirectedGraph,
    tau: Thresholds,
    budget: int | None = None,
    limit: int = DEFAULT_LIMIT,
    backend=None,
) -> tuple[int, frozenset[int]] | None:
    """Smallest dynamo for (g, tau) with its lexicographically least witness.

    With no ``budget``, graphs above ``limit`` vertices are rejected with
    :class:`TooLargeError`.  With a budget the search is capped at that
    cardinality and returns None when the true minimum exceeds it.
    """
    tau = check_thresholds(g, tau)
    if g.n > limit and budget is None:
        raise TooLargeError(g.n, limit)
    if g.n == 0:
        return (0, frozenset())
    backend = backend or _backend.DEFAULT
    search = _Search(g, tau, backend)
    forced = forced_vertices(g, tau)
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    lo = max(search.build_packing(), len(forced), 1)
    hi = g.n if budget is None else min(budget, g.n)
    for k in range(lo, hi + 1):
        witness = search.lex_witness(k, forced_mask, len(forced))
        if witness is not None:
            return (k, frozenset(witness))
    if budget is not None:
        return None
    raise AssertionError("unreachable: the full vertex set is always a dynamo")
