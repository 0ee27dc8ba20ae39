"""Breadth-first enumeration of mutation classes up to isomorphism.

This is the brute-force oracle the closed-form counts are checked against:
close a seed quiver under mutation at every vertex, deduplicating by
canonical key.  The targeted classes (type A, D and the annular type built
on a non-oriented cycle) are finite with arrow multiplicities at most 2, so
the walk terminates; anything that drives a multiplicity above the cap
aborts loudly instead of silently corrupting the count.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass

from quivercount.canonical import canonical_key
from quivercount.quiver import (
    ExchangeQuiver,
    max_multiplicity,
    mutate,
    underlying_graph_connected,
    write_quiver,
)


class CapExceeded(RuntimeError):
    """A quiver in the walk exceeded the arrow multiplicity cap.

    Signals a seed outside the finite-multiplicity families this tool
    targets, or a cap set too low.
    """

    def __init__(self, multiplicity: int, cap: int):
        super().__init__(
            f"arrow multiplicity {multiplicity} exceeds the cap {cap}"
        )
        self.multiplicity = multiplicity
        self.cap = cap


@dataclass
class MutationClass:
    """A mutation class: canonical keys with first-discovered representatives."""

    seed: ExchangeQuiver
    members: dict[bytes, ExchangeQuiver]
    depths: dict[bytes, int]

    @property
    def size(self) -> int:
        return len(self.members)

    def keys(self) -> list[bytes]:
        return sorted(self.members)

    def representatives(self) -> list[ExchangeQuiver]:
        """Stored representatives in canonical key order."""
        return [self.members[k] for k in self.keys()]

    def __contains__(self, q: ExchangeQuiver) -> bool:
        return canonical_key(q) in self.members


def enumerate_class(
    seed: ExchangeQuiver, multiplicity_cap: int = 2
) -> MutationClass:
    """Enumerate the full mutation class of ``seed`` up to isomorphism.

    The walk is breadth first with mutation vertices tried in order
    0..n-1, so the stored representative of each isomorphism class is
    deterministic.  Raises :class:`CapExceeded` as soon as any quiver,
    including the seed, carries an arrow multiplicity above the cap.
    """
    if multiplicity_cap < 2:
        raise ValueError("multiplicity_cap must be at least 2")
    if not underlying_graph_connected(seed):
        raise ValueError("seed quiver must be connected")
    m0 = max_multiplicity(seed)
    if m0 > multiplicity_cap:
        raise CapExceeded(m0, multiplicity_cap)
    key0 = canonical_key(seed)
    members = {key0: seed}
    depths = {key0: 0}
    queue: deque[tuple[ExchangeQuiver, int]] = deque([(seed, 0)])
    while queue:
        q, d = queue.popleft()
        for k in range(q.n):
            q2 = mutate(q, k)
            m = max_multiplicity(q2)
            if m > multiplicity_cap:
                raise CapExceeded(m, multiplicity_cap)
            key = canonical_key(q2)
            if key not in members:
                members[key] = q2
                depths[key] = d + 1
                queue.append((q2, d + 1))
    return MutationClass(seed, members, depths)


def seed_cycle(r: int, s: int) -> ExchangeQuiver:
    """Cycle on r+s vertices with r arrows one way round and s the other.

    ``r = s = 1`` is the double arrow on two vertices; ``r = 0`` gives the
    oriented cycle, whose mutation class is the type D class of the same
    rank.  ``(r, s) = (0, 2)`` is rejected because an oriented 2-cycle has
    no exchange-matrix encoding.
    """
    if r < 0 or s < 0 or r + s < 2:
        raise ValueError("need r, s >= 0 with r + s >= 2")
    if (r, s) in ((0, 2), (2, 0)):
        raise ValueError("an oriented 2-cycle cannot be encoded")
    n = r + s
    arrows = []
    for i in range(n):
        j = (i + 1) % n
        arrows.append((i, j) if i < r else (j, i))
    return ExchangeQuiver.from_arrows(n, arrows)


def seed_dynkin_d(n: int) -> ExchangeQuiver:
    """Quiver on the type D diagram: a path with a fork at one end.

    Any orientation of a tree is mutation equivalent to any other, so a
    fixed one is used: both fork tips point into the branch vertex and the
    path is oriented away from it.
    """
    if n < 4:
        raise ValueError("type D needs at least 4 vertices")
    arrows = [(0, 2), (1, 2)]
    arrows += [(i, i + 1) for i in range(2, n - 1)]
    return ExchangeQuiver.from_arrows(n, arrows)


def class_to_json(mc: MutationClass) -> list[dict]:
    """JSON-ready member list: key, matrix and BFS discovery depth, key-sorted."""
    return [
        {
            "key": k.hex(),
            "matrix": [list(row) for row in mc.members[k].b],
            "depth": mc.depths[k],
        }
        for k in mc.keys()
    ]


def write_class_json(mc: MutationClass, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(class_to_json(mc), fh, indent=1)
        fh.write("\n")


def write_class_dir(mc: MutationClass, path) -> None:
    """One quiver file per member, numbered in canonical key order."""
    os.makedirs(path, exist_ok=True)
    for idx, key in enumerate(mc.keys()):
        header = f"key {key.hex()}\ndepth {mc.depths[key]}"
        write_quiver(
            mc.members[key],
            os.path.join(path, f"member-{idx:05d}.quiver"),
            header=header,
        )
