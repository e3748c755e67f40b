"""Pure-Python activation kernels.

These are the reference implementations of the hot loops; ``_kernel.pyx``
provides drop-in compiled equivalents and ``_backend`` picks whichever is
importable.  Both must stay observationally identical (the backend parity
tests compare them directly).
"""

from __future__ import annotations

BACKEND_NAME = "pure"


class GraphHandle:
    """Preprocessed adjacency for one graph, reused across many runs."""

    __slots__ = ("n", "out_adj", "in_masks")

    def __init__(self, n, out_adj, in_masks):
        self.n = n
        self.out_adj = out_adj
        self.in_masks = in_masks


def prepare(n, in_adj, out_adj):
    in_masks = [0] * n
    for v in range(n):
        m = 0
        for u in in_adj[v]:
            m |= 1 << u
        in_masks[v] = m
    return GraphHandle(n, [tuple(a) for a in out_adj], in_masks)


def activate_layers(handle, tau, seed):
    """Synchronous rounds: per-vertex counters, O(n + edges) total work."""
    n = handle.n
    out_adj = handle.out_adj
    active = bytearray(n)
    count = [0] * n
    layer = sorted(set(seed))
    for v in layer:
        active[v] = 1
    layers = [layer]
    while layer:
        nxt = []
        for u in layer:
            for w in out_adj[u]:
                if not active[w]:
                    count[w] += 1
                    if count[w] == tau[w]:
                        nxt.append(w)
        for w in nxt:
            active[w] = 1
        layer = sorted(nxt)
        if layer:
            layers.append(layer)
    return layers


def reaches_all(handle, tau, seed):
    """True when the cascade seeded by ``seed`` activates every vertex."""
    n = handle.n
    out_adj = handle.out_adj
    active = bytearray(n)
    count = [0] * n
    frontier = []
    for v in set(seed):
        active[v] = 1
        frontier.append(v)
    reached = len(frontier)
    while frontier:
        nxt = []
        for u in frontier:
            for w in out_adj[u]:
                if not active[w]:
                    count[w] += 1
                    if count[w] == tau[w]:
                        active[w] = 1
                        nxt.append(w)
        reached += len(nxt)
        frontier = nxt
    return reached == n


def make_closure(handle, tau):
    """Bind ``tau`` and return ``fn(seed_mask) -> active_mask``.

    Works on integer bitmasks of any width; cascades one pass at a time until
    a fixpoint (order inside a pass does not matter for the final set).
    """
    n = handle.n
    in_masks = handle.in_masks
    tau = tuple(tau)

    def closure(seed_mask: int) -> int:
        active = seed_mask
        pending = [v for v in range(n) if not (seed_mask >> v) & 1]
        progressed = True
        while progressed and pending:
            progressed = False
            rest = []
            for v in pending:
                if (in_masks[v] & active).bit_count() >= tau[v]:
                    active |= 1 << v
                    progressed = True
                else:
                    rest.append(v)
            pending = rest
        return active

    return closure
