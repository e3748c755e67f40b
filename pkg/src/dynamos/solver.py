"""Top-level strict-majority solver and the two closed-form size bounds.

The solver decomposes the graph into strongly connected components, solves
each non-singleton component against its own induced thresholds, and unions
the pieces; components are activated in topological order, so vertices of a
singleton component are carried along by their upstream in-neighbors for
free.  The union is re-verified against the global thresholds before being
returned, turning the composition argument into a checked runtime guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .activation import is_dynamo
from .decomposition import condensation
from .errors import TwoCycleError, ZeroInDegreeError
from .graphs import (
    DirectedGraph,
    Thresholds,
    check_thresholds,
    has_two_cycle,
    induced_subgraph,
    strict_majority,
)
from .ordering import expected_permutation_size
from .strong_solver import half_dynamo_strong


@dataclass(frozen=True)
class BoundsReport:
    """Closed-form bounds plus their ingredients, all as exact rationals.

    ``upper`` is the mean dynamo size of the permutation rule (some ordering
    achieves at most its floor); ``lower`` holds for every dynamo and may be
    non-positive, in which case it is vacuous.
    """

    upper: Fraction
    lower: Fraction
    epsilon: Fraction
    t_bar: Fraction
    t_max: int


def strict_majority_dynamo(g: DirectedGraph) -> frozenset[int]:
    """A strict-majority dynamo of size at most floor(n/2).

    Requires positive minimum in-degree and no antiparallel pairs.
    """
    for v in g.vertices():
        if g.deg_in(v) == 0:
            raise ZeroInDegreeError(v)
    pair = has_two_cycle(g)
    if pair is not None:
        raise TwoCycleError(*pair)
    seeds: set[int] = set()
    for comp in condensation(g).components:
        if len(comp) == 1:
            continue
        sub, to_parent, _ = induced_subgraph(g, comp)
        for v in half_dynamo_strong(sub):
            seeds.add(to_parent[v])
    result = frozenset(seeds)
    assert len(result) <= g.n // 2, "seed set exceeded half the graph"
    assert is_dynamo(g, strict_majority(g), result), "composed seeds not a dynamo"
    return result


def density_lower_bound(g: DirectedGraph, tau: Thresholds) -> Fraction:
    """n * (1 - epsilon/t_bar) * (t_bar/t_max) with epsilon = |E|/n.

    Simplifies to (sum(tau) - |E|) / max(tau); non-positive values carry no
    information.
    """
    tau = check_thresholds(g, tau)
    if g.n == 0:
        return Fraction(0)
    return Fraction(sum(tau) - g.m, max(tau))


def bounds_report(g: DirectedGraph, tau: Thresholds) -> BoundsReport:
    tau = check_thresholds(g, tau)
    if g.n == 0:
        return BoundsReport(Fraction(0), Fraction(0), Fraction(0), Fraction(0), 0)
    return BoundsReport(
        upper=expected_permutation_size(g, tau),
        lower=density_lower_bound(g, tau),
        epsilon=Fraction(g.m, g.n),
        t_bar=Fraction(sum(tau), g.n),
        t_max=max(tau),
    )
