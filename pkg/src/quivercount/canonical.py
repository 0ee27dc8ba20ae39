"""Canonical labeling of exchange quivers.

Deduplication during class enumeration needs an isomorphism invariant with
no collisions, so the key encodes a complete canonical relabeling of the
exchange matrix rather than a hash.  The labeling is found by color
refinement (iterated in/out multiplicity signatures) followed by a
backtracking search over refinement-compatible orderings for the labeling
whose lower matrix triangle, read row by row, is lexicographically least.
The signed entries act directly as edge colors, so directed multiple arrows
need no gadget expansion.  Vertices with identical matrix rows are
interchangeable by an automorphism and are collapsed to one search branch,
which keeps degenerate highly symmetric inputs from exploding.
"""

from __future__ import annotations

from typing import Sequence

from quivercount.quiver import ExchangeQuiver


def _refine(b: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Stable coloring refining ``colors`` by neighbor (color, entry) multisets.

    The returned color values are ranks of sorted signatures, hence equal
    for corresponding vertices of isomorphic quivers.
    """
    n = len(b)
    ncell = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = b[v]
            adj = sorted((colors[u], row[u]) for u in range(n) if row[u])
            sigs.append((colors[v], tuple(adj)))
        rank = {s: c for c, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncell:
            return colors
        ncell = len(rank)


def _min_labeling(b, colors):
    """Least relabeled matrix over orderings listing color classes in order.

    Returns ``(flat, slots)`` where ``flat`` is the lower triangle of the
    minimal matrix read row by row and ``slots`` the color of each position.
    """
    n = len(b)
    slots = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)

    best: list[int] | None = None
    placed: list[int] = []
    used = [False] * n
    flat: list[int] = []

    def rec(tight: bool) -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or flat < best:
                best = flat.copy()
            return
        reps: dict[tuple[int, ...], int] = {}
        for v in by_color[slots[p]]:
            if not used[v]:
                reps.setdefault(b[v], v)  # identical rows commute
        scored = sorted(
            ([b[v][u] for u in placed], v) for v in reps.values()
        )
        base = len(flat)
        for seg, v in scored:
            t = tight
            if t and best is not None:
                ref = best[base : base + p]
                if seg > ref:
                    break  # scored ascending: the rest is worse too
                if seg < ref:
                    t = False
            flat.extend(seg)
            used[v] = True
            placed.append(v)
            rec(t)
            placed.pop()
            used[v] = False
            del flat[base:]

    rec(True)
    assert best is not None
    return best, slots


def canonical_key(q: ExchangeQuiver, colors: Sequence[int] | None = None) -> bytes:
    """Byte key equal exactly for quivers isomorphic to ``q``.

    Keys are deterministic, totally ordered as byte strings, and collision
    free: equal keys imply an actual vertex bijection matching the matrices
    entry by entry.  Optional ``colors`` restricts admissible relabelings to
    those preserving the given vertex classes; rooted subquivers pass the
    root as a separate color.
    """
    n = q.n
    if colors is None:
        init = [0] * n
    else:
        init = [int(c) for c in colors]
        if len(init) != n:
            raise ValueError("colors must assign one class per vertex")
    if n == 0:
        return b"0||"
    refined = _refine(q.b, init)
    flat, slots = _min_labeling(q.b, refined)
    return "{}|{}|{}".format(
        n, ",".join(map(str, slots)), ",".join(map(str, flat))
    ).encode("ascii")


def are_isomorphic(q1: ExchangeQuiver, q2: ExchangeQuiver) -> bool:
    """True iff the two quivers are isomorphic as directed multigraphs."""
    if q1.n != q2.n:
        return False
    return canonical_key(q1) == canonical_key(q2)
