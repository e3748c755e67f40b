"""Vertex orderings, in-neighbor balance values, and the two permutation rules.

For an ordering sigma and a vertex v, the balance of v is

    in_balance(v) = #(in-neighbors ranked after v) - #(in-neighbors ranked before v).

Vertices with negative balance have a strict majority of in-neighbors before
them, so under strict-majority thresholds the non-negative vertices form a
dynamo (the negative ones activate in rank order).  The same idea with a
general threshold gives ``permutation_dynamo``: keep exactly the vertices with
fewer than tau(v) in-neighbors before them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotBeforeError, ZeroInDegreeError
from .graphs import DirectedGraph, Thresholds, check_thresholds


@dataclass(frozen=True)
class Ordering:
    """A bijection between vertices and ranks 1..n."""

    ranks: tuple[int, ...]  # ranks[v] = rank of v, 1-based

    def __post_init__(self):
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValueError("ranks must be a permutation of 1..n")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Ordering":
        """Build from the vertices listed first to last."""
        ranks = [0] * len(seq)
        for pos, v in enumerate(seq, start=1):
            ranks[v] = pos
        return cls(ranks=tuple(ranks))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(ranks=tuple(range(1, n + 1)))

    def rank(self, v: int) -> int:
        return self.ranks[v]

    @property
    def n(self) -> int:
        return len(self.ranks)

    def sequence(self) -> tuple[int, ...]:
        """Vertices from rank 1 to rank n."""
        seq = [0] * self.n
        for v, r in enumerate(self.ranks):
            seq[r - 1] = v
        return tuple(seq)

    def reversed(self) -> "Ordering":
        n = self.n
        return Ordering(ranks=tuple(n + 1 - r for r in self.ranks))


def in_balance(g: DirectedGraph, sigma: Ordering, v: int) -> int:
    """(# in-neighbors ranked after v) - (# in-neighbors ranked before v)."""
    rv = sigma.ranks[v]
    bal = 0
    for u in g.in_adj[v]:
        bal += 1 if sigma.ranks[u] > rv else -1
    return bal


def in_balances(g: DirectedGraph, sigma: Ordering) -> list[int]:
    return [in_balance(g, sigma, v) for v in g.vertices()]


def transmit_after(sigma: Ordering, u: int, v: int) -> Ordering:
    """Move u to v's rank; everything strictly between shifts one rank down."""
    ru, rv = sigma.ranks[u], sigma.ranks[v]
    if ru >= rv:
        raise NotBeforeError(u, v)
    new = list(sigma.ranks)
    for x, rx in enumerate(new):
        if rx < ru or rx > rv:
            continue
        new[x] = rv if x == u else rx - 1
    return Ordering(ranks=tuple(new))


def transmit_before(sigma: Ordering, u: int, v: int) -> Ordering:
    """Move v to u's rank; ranks from u's up to v's shift one rank up."""
    ru, rv = sigma.ranks[u], sigma.ranks[v]
    if ru >= rv:
        raise NotBeforeError(u, v)
    new = list(sigma.ranks)
    for x, rx in enumerate(new):
        if rx < ru or rx > rv:
            continue
        new[x] = ru if x == v else rx + 1
    return Ordering(ranks=tuple(new))


def dynamo_from_ordering(g: DirectedGraph, sigma: Ordering) -> frozenset[int]:
    """Smaller of {balance >= 0} and {balance <= 0}; ties keep the former.

    The returned set is a strict-majority dynamo for every ordering.
    """
    for v in g.vertices():
        if g.deg_in(v) == 0:
            raise ZeroInDegreeError(v)
    bal = in_balances(g, sigma)
    non_neg = frozenset(v for v in g.vertices() if bal[v] >= 0)
    non_pos = frozenset(v for v in g.vertices() if bal[v] <= 0)
    return non_neg if len(non_neg) <= len(non_pos) else non_pos


def permutation_dynamo(
    g: DirectedGraph, tau: Thresholds, sigma: Ordering
) -> frozenset[int]:
    """{v : fewer than tau(v) in-neighbors are ranked before v}.

    A dynamo for any ordering: each excluded vertex already has tau(v)
    earlier in-neighbors, so the excluded vertices activate in rank order.
    """
    tau = check_thresholds(g, tau)
    out = []
    for v in g.vertices():
        rv = sigma.ranks[v]
        before = sum(1 for u in g.in_adj[v] if sigma.ranks[u] < rv)
        if before < tau[v]:
            out.append(v)
    return frozenset(out)


def expected_permutation_size(g: DirectedGraph, tau: Thresholds) -> Fraction:
    """Exact mean of |permutation_dynamo| over all orderings, uniformly.

    Vertex v lands among its d in-neighbors at a uniformly random relative
    position, so it is kept with probability min(tau(v), d+1)/(d+1); vertices
    with tau above their in-degree are kept always, hence the clamp.
    """
    tau = check_thresholds(g, tau)
    total = Fraction(0)
    for v in g.vertices():
        d1 = g.deg_in(v) + 1
        total += Fraction(min(tau[v], d1), d1)
    return total
