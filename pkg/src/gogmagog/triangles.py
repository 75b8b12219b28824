"""Gelfand-Tsetlin triangles and the Gog / Magog / GOGAm families.

A Gelfand-Tsetlin triangle of size n is a triangular array of positive
integers x[i,j], n >= i >= j >= 1, weakly increasing along both the
NW-SE and SW-NE diagonals:

    x[i+1,j] <= x[i,j] <= x[i+1,j+1]   whenever all three are defined.

Row n is the long top row, row 1 is the single bottom entry.  A Gog
triangle has strictly increasing rows and top row pinned to 1..n (these
are in bijection with alternating sign matrices); a Magog triangle has
x[i,i] <= i (in bijection with totally symmetric self-complementary
plane partitions); trapezoids pin everything far from the right edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple


class ShapeError(ValueError):
    """Raised when row data does not form a triangular array."""


class Family(Enum):
    GT = "gt"
    GOG = "gog"
    MAGOG = "magog"
    GOGAM = "gogam"


@dataclass(frozen=True)
class Violation:
    """A single broken constraint, located at the 1-based cell (i, j)."""

    i: int
    j: int
    message: str

    def __str__(self) -> str:
        return f"({self.i},{self.j}): {self.message}"


@dataclass(frozen=True)
class GtTriangle:
    """Triangular integer array; ``rows`` are stored top-down.

    ``rows[0]`` is row n (n entries), ``rows[-1]`` is row 1 (one entry).
    Entry access is 1-based through ``t[i, j]`` so that indices match the
    usual mathematical labelling; the 0-based layout is internal.
    The constructor only enforces the triangular shape.  Value-level
    constraints (positivity, interlacing) are checked by `validate_gt`.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ShapeError("triangle must have at least one row")
        for idx, row in enumerate(rows):
            want = n - idx
            if len(row) != want:
                raise ShapeError(
                    f"row {want} of a size-{n} triangle must have {want} "
                    f"entries, got {len(row)}"
                )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= j <= i <= self.n):
            raise IndexError(f"no cell ({i},{j}) in a size-{self.n} triangle")
        return self.rows[self.n - i][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """Row i (1-based, row n is the top row)."""
        if not (1 <= i <= self.n):
            raise IndexError(f"no row {i} in a size-{self.n} triangle")
        return self.rows[self.n - i]

    def rows_top_down(self) -> tuple[tuple[int, ...], ...]:
        return self.rows

    def replace_row(self, i: int, entries: Iterable[int]) -> "GtTriangle":
        new = tuple(int(x) for x in entries)
        if len(new) != i:
            raise ShapeError(f"row {i} must have {i} entries, got {len(new)}")
        rows = list(self.rows)
        rows[self.n - i] = new
        return GtTriangle(tuple(rows))


class Inversion(NamedTuple):
    """Cell (i, j) whose entry equals the one directly above-left of it."""

    i: int
    j: int


def validate_gt(t: GtTriangle) -> list[Violation]:
    """All positivity and interlacing violations of ``t`` (empty = valid).

    Every broken inequality is reported, attributed to the lower-row cell
    of the offending pair, so enumeration failures stay diagnosable.
    """
    bad = []
    n = t.n
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            x = t[i, j]
            if x < 1:
                bad.append(Violation(i, j, f"entry {x} is not positive"))
    for i in range(1, n):
        for j in range(1, i + 1):
            x = t[i, j]
            lo = t[i + 1, j]
            hi = t[i + 1, j + 1]
            if x < lo:
                bad.append(
                    Violation(i, j, f"{x} < {lo} breaks x[{i+1},{j}] <= x[{i},{j}]")
                )
            if x > hi:
                bad.append(
                    Violation(i, j, f"{x} > {hi} breaks x[{i},{j}] <= x[{i+1},{j+1}]")
                )
    return bad


def is_valid_gt(t: GtTriangle) -> bool:
    return not validate_gt(t)


def is_gog(t: GtTriangle) -> bool:
    """Strictly increasing rows below the top, top row pinned to 1..n."""
    if validate_gt(t):
        return False
    n = t.n
    if any(t[n, j] != j for j in range(1, n + 1)):
        return False
    for i in range(2, n):
        row = t.row(i)
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    return True


def is_magog(t: GtTriangle) -> bool:
    """Diagonal bound x[i,i] <= i for every i."""
    if validate_gt(t):
        return False
    return all(t[i, i] <= i for i in range(1, t.n + 1))


def is_trapezoid(t: GtTriangle, family: Family, k: int) -> bool:
    """Fixed-entry trapezoid condition for cells with i - j >= k.

    Gog trapezoids pin those cells to j, Magog and GOGAm trapezoids pin
    them to 1.  Family membership itself is not re-checked here.
    """
    if k < 1:
        raise ValueError(f"trapezoid width must be >= 1, got {k}")
    if family is Family.GOG:
        pin = lambda i, j: j
    elif family in (Family.MAGOG, Family.GOGAM):
        pin = lambda i, j: 1
    else:
        raise ValueError(f"no trapezoid condition for family {family}")
    n = t.n
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if i - j >= k and t[i, j] != pin(i, j):
                return False
    return True


def is_gog_trapezoid_n2k(t: GtTriangle, k: int) -> bool:
    """(n,2,k) refinement of a (n,2) Gog trapezoid.

    Requires x[j,j] = n for j >= k and x[j,j-1] = max(x[k,k-1], j-1) for
    j >= k.  For k = 1 the reference entry x[k,k-1] does not exist; the
    subdiagonal condition is then read with the reference dropped, i.e.
    x[j,j-1] = j-1 for j >= 2.
    """
    n = t.n
    if not (1 <= k <= n):
        raise ValueError(f"k must be in 1..{n}, got {k}")
    for j in range(k, n + 1):
        if t[j, j] != n:
            return False
    ref = t[k, k - 1] if k >= 2 else None
    for j in range(max(k, 2), n + 1):
        want = j - 1 if ref is None else max(ref, j - 1)
        if t[j, j - 1] != want:
            return False
    return True


def is_magog_trapezoid_n2k(t: GtTriangle, k: int) -> bool:
    """(n,2,k) refinement of a (n,2) Magog trapezoid.

    Requires x[j,j] = 1 for j <= n-k together with x[j,j] = j for some
    j > n-k.  This is the class the trapezoid bijection pairs with the
    (n,2,k) Gog class, verified exhaustively through n = 6.
    """
    n = t.n
    if not (1 <= k <= n):
        raise ValueError(f"k must be in 1..{n}, got {k}")
    if any(t[j, j] != 1 for j in range(1, n - k + 1)):
        return False
    return any(t[j, j] == j for j in range(n - k + 1, n + 1))


def inversions(t: GtTriangle) -> list[Inversion]:
    """All pairs (i, j) with x[i,j] = x[i+1,j], in lexicographic order."""
    out = []
    for i in range(1, t.n):
        for j in range(1, i + 1):
            if t[i, j] == t[i + 1, j]:
                out.append(Inversion(i, j))
    return out


def covered_cells(inv: Inversion, n: int) -> list[tuple[int, int]]:
    """Cells (i+p, j+p), 1 <= p <= n-i, lying SE of the inversion."""
    i, j = inv
    return [(i + p, j + p) for p in range(1, n - i + 1)]


def covering_count(t: GtTriangle, i: int, j: int) -> int:
    """Number of inversions of ``t`` covering the cell (i, j)."""
    t[i, j]  # bounds check
    invs = set(inversions(t))
    count = 0
    p = 1
    while j - p >= 1:
        if (i - p, j - p) in invs:
            count += 1
        p += 1
    return count


# --- text / JSON formats ---------------------------------------------------
#
# Text: line 1 is n, then rows top-down (row n first), space-separated.
# JSON: {"n": int, "rows_top_down": [[...], ...]}.


def format_triangle(t: GtTriangle) -> str:
    lines = [str(t.n)]
    lines += [" ".join(str(x) for x in row) for row in t.rows]
    return "\n".join(lines) + "\n"


def parse_triangle(text: str) -> GtTriangle:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ShapeError("empty triangle file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ShapeError(f"first line must be the size, got {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise ShapeError(f"expected {n} rows after the size line, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            rows.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise ShapeError(f"non-integer entry in row {ln!r}") from None
    return GtTriangle(tuple(rows))


def triangle_to_json(t: GtTriangle) -> str:
    return json.dumps({"n": t.n, "rows_top_down": [list(r) for r in t.rows]})


def triangle_from_json(text: str) -> GtTriangle:
    data = json.loads(text)
    t = GtTriangle(tuple(tuple(r) for r in data["rows_top_down"]))
    if t.n != data.get("n", t.n):
        raise ShapeError("size field does not match the row data")
    return t
