"""Quivers as skew-symmetric integer exchange matrices, and their mutation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class QuiverFormatError(ValueError):
    """Raised when a quiver text file cannot be parsed."""


@dataclass(frozen=True)
class ExchangeQuiver:
    """A finite quiver without loops or oriented 2-cycles.

    Entry ``b[i][j]`` is the number of arrows ``i -> j`` minus the number of
    arrows ``j -> i``.  Because oriented 2-cycles are excluded, at most one
    of the two counts is nonzero, so the signed matrix encodes the quiver
    losslessly.  Instances are immutable and hashable; connectivity is not
    enforced here and is checked by callers that need it.
    """

    b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.b)
        for i, row in enumerate(self.b):
            if len(row) != n:
                raise ValueError("exchange matrix must be square")
            if row[i] != 0:
                raise ValueError("diagonal entries must be zero (no loops)")
            for j in range(i + 1, n):
                if row[j] != -self.b[j][i]:
                    raise ValueError("exchange matrix must be skew-symmetric")

    @property
    def n(self) -> int:
        """Number of vertices (labelled 0..n-1)."""
        return len(self.b)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "ExchangeQuiver":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_arrows(
        cls, n: int, arrows: Iterable[Sequence[int]]
    ) -> "ExchangeQuiver":
        """Build a quiver from ``(tail, head)`` or ``(tail, head, mult)`` entries.

        Contributions are summed with sign, so listing both ``i -> j`` and
        ``j -> i`` cancels arrows instead of producing an oriented 2-cycle.
        """
        b = [[0] * n for _ in range(n)]
        for arrow in arrows:
            i, j = arrow[0], arrow[1]
            m = arrow[2] if len(arrow) > 2 else 1
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex out of range in arrow {(i, j)}")
            if m < 0:
                raise ValueError("arrow multiplicity must be nonnegative")
            b[i][j] += m
            b[j][i] -= m
        return cls.from_matrix(b)

    def arrows(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(tail, head, multiplicity)`` for every arrow bundle."""
        for i in range(self.n):
            row = self.b[i]
            for j in range(self.n):
                if row[j] > 0:
                    yield i, j, row[j]


def mutate(q: ExchangeQuiver, k: int) -> ExchangeQuiver:
    """Mutate ``q`` at vertex ``k`` and return the new quiver.

    Entries in row or column ``k`` flip sign; any other entry picks up the
    signed two-path contribution through ``k``.  At a sink or source this
    reduces to reversing the incident arrows, and applying the same mutation
    twice gives back the original quiver.  The input is not modified.
    """
    n = q.n
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range for a quiver on {n} vertices")
    b = q.b
    bk = b[k]
    rows = []
    for i in range(n):
        bi = b[i]
        if i == k:
            rows.append(tuple(-x for x in bi))
            continue
        bik = bi[k]
        row = list(bi)
        row[k] = -bik
        if bik:
            abik = abs(bik)
            for j in range(n):
                if j == k:
                    continue
                bkj = bk[j]
                if bkj:
                    row[j] = bi[j] + (abik * bkj + bik * abs(bkj)) // 2
        rows.append(tuple(row))
    return ExchangeQuiver(tuple(rows))


def relabel(q: ExchangeQuiver, perm: Sequence[int]) -> ExchangeQuiver:
    """Rename vertices: old vertex ``i`` becomes ``perm[i]``."""
    n = q.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        row = q.b[i]
        pi = perm[i]
        for j in range(n):
            b[pi][perm[j]] = row[j]
    return ExchangeQuiver.from_matrix(b)


def underlying_graph_connected(q: ExchangeQuiver) -> bool:
    """True iff the underlying undirected graph is connected."""
    n = q.n
    if n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        row = q.b[v]
        for u in range(n):
            if row[u] and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def max_multiplicity(q: ExchangeQuiver) -> int:
    """Largest arrow multiplicity, 0 for an arrowless quiver."""
    m = 0
    for i in range(q.n):
        row = q.b[i]
        for j in range(i + 1, q.n):
            a = abs(row[j])
            if a > m:
                m = a
    return m


# --- text format -----------------------------------------------------------
#
# One quiver per file.  First value line holds the vertex count n, then one
# line per arrow bundle: "i j m" meaning m arrows i -> j.  '#' starts a
# comment, whitespace separates fields.  The writer emits bundles sorted
# lexicographically by (i, j).


def dumps(q: ExchangeQuiver) -> str:
    lines = [str(q.n)]
    for i, j, m in sorted(q.arrows()):
        lines.append(f"{i} {j} {m}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> ExchangeQuiver:
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise QuiverFormatError("empty quiver file")
    if len(rows[0]) != 1:
        raise QuiverFormatError("first line must hold the vertex count only")
    try:
        n = int(rows[0][0])
    except ValueError as exc:
        raise QuiverFormatError(f"bad vertex count {rows[0][0]!r}") from exc
    if n < 0:
        raise QuiverFormatError("vertex count must be nonnegative")
    b = [[0] * n for _ in range(n)]
    for fields in rows[1:]:
        if len(fields) != 3:
            raise QuiverFormatError(f"expected 'i j m', got {' '.join(fields)!r}")
        try:
            i, j, m = (int(f) for f in fields)
        except ValueError as exc:
            raise QuiverFormatError(f"non-integer field in {' '.join(fields)!r}") from exc
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise QuiverFormatError(f"bad arrow {i} -> {j} for n={n}")
        if m < 1:
            raise QuiverFormatError("arrow multiplicity must be at least 1")
        if b[i][j] != 0 or b[j][i] != 0:
            raise QuiverFormatError(f"duplicate or opposing arrows between {i} and {j}")
        b[i][j] = m
        b[j][i] = -m
    return ExchangeQuiver.from_matrix(b)


def write_quiver(q: ExchangeQuiver, path, header: str | None = None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        fh.write(dumps(q))


def read_quiver(path) -> ExchangeQuiver:
    with open(path, "r", encoding="ascii") as fh:
        return loads(fh.read())
