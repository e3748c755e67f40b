"""The irreversible activation process and dynamo verification.

A seed set is a dynamo when iterating the rule "an inactive vertex activates
once at least tau(v) of its in-neighbors are active" reaches every vertex.
Rounds are synchronous: all eligible vertices of a round activate together,
which makes traces deterministic.  The process is monotone and irreversible,
so the final active set does not depend on scheduling; only the layering does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _backend
from .graphs import DirectedGraph, Thresholds, check_thresholds, check_vertex_set


@dataclass(frozen=True)
class ActivationTrace:
    """Layer partition of one run: layers[0] is the seed, layers[i] round i."""

    layers: tuple[frozenset[int], ...]
    active: frozenset[int]
    complete: bool

    def __len__(self) -> int:
        return len(self.layers)


def activate(
    g: DirectedGraph,
    tau: Thresholds,
    seed: Iterable[int],
    backend=None,
) -> ActivationTrace:
    """Run the synchronous process from ``seed`` until a round activates nothing."""
    tau = check_thresholds(g, tau)
    seed_set = check_vertex_set(g, seed)
    kernel = backend or _backend.DEFAULT
    handle = _backend.graph_handle(g, kernel)
    raw_layers = kernel.activate_layers(handle, tau, sorted(seed_set))
    layers = tuple(frozenset(layer) for layer in raw_layers)
    active = frozenset().union(*layers) if layers else frozenset()
    return ActivationTrace(layers=layers, active=active, complete=len(active) == g.n)


def is_dynamo(
    g: DirectedGraph,
    tau: Thresholds,
    seed: Iterable[int],
    backend=None,
) -> bool:
    tau = check_thresholds(g, tau)
    seed_set = check_vertex_set(g, seed)
    kernel = backend or _backend.DEFAULT
    handle = _backend.graph_handle(g, kernel)
    return kernel.reaches_all(handle, tau, sorted(seed_set))
