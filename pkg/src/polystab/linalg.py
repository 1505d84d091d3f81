"""Exact integer linear algebra: matrices, Smith normal form, ranks over Q and F_p.

All arithmetic is arbitrary-precision; nothing here rounds.  Matrices are
dense semantically (every entry addressable); the elimination routines accept
plain row lists so callers holding sparse data can feed only what they need.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .rings import Q, Ring


class IntMatrix:
    """A rows x cols matrix of exact integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: list[list[int]]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows:
            raise ValueError(f"expected {rows} rows, got {len(entries)}")
        for r in entries:
            if len(r) != cols:
                raise ValueError(f"expected {cols} columns, got a row of length {len(r)}")
            for v in r:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError(f"matrix entries must be integers, got {v!r}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, entries: list[list[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(rows, cols, [list(r) for r in entries])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} times {other.shape}")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            acc = out[i]
            for k, v in enumerate(row):
                if v:
                    orow = other.entries[k]
                    for j, w in enumerate(orow):
                        if w:
                            acc[j] += v * w
        return IntMatrix(self.rows, other.cols, out)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [row[:] for row in self.entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of an integer matrix; rank is their count."""

    invariant_factors: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank != len(self.invariant_factors):
            raise ValueError("rank must equal the number of invariant factors")
        prev = None
        for d in self.invariant_factors:
            if d <= 0:
                raise ValueError("invariant factors must be positive")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d


def _find_pivot(a: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    best = None
    best_abs = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = row[j]
            if v:
                av = abs(v)
                if best is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def _clear_pivot_cross(a: list[list[int]], t: int, rows: int, cols: int) -> None:
    """Zero out row t and column t except the pivot, by gcd-driven elimination."""
    while True:
        # Column sweep: remainders smaller than the pivot replace it.
        swapped = False
        for i in range(t + 1, rows):
            v = a[i][t]
            if v:
                q = v // a[t][t]
                if q:
                    piv_row = a[t]
                    a[i] = [x - q * y for x, y in zip(a[i], piv_row)]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    swapped = True
        if swapped:
            continue
        # Row sweep via column operations.
        swapped = False
        for j in range(t + 1, cols):
            v = a[t][j]
            if v:
                q = v // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    swapped = True
        if not swapped:
            return
        # Column operations may have re-dirtied column t below the pivot.


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Invariant factors of an integer matrix (pure; transforms are not kept).

    Pivots are chosen with minimal absolute value to limit entry growth, and
    each accepted pivot is forced to divide the remaining submatrix so the
    factors come out in divisibility order.
    """
    a = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while True:
        piv = _find_pivot(a, t, rows, cols)
        if piv is None:
            break
        i, j = piv
        if i != t:
            a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            _clear_pivot_cross(a, t, rows, cols)
            d = a[t][t]
            offender = None
            for i in range(t + 1, rows):
                row = a[i]
                for j in range(t + 1, cols):
                    if row[j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # Fold the offending row into the pivot row and re-clear; the
            # pivot strictly shrinks toward the running gcd, so this ends.
            piv_row = a[t]
            off_row = a[offender]
            a[t] = [x + y for x, y in zip(piv_row, off_row)]
        factors.append(abs(a[t][t]))
        t += 1
        if t >= min(rows, cols):
            break
    return SmithForm(tuple(factors), len(factors))


def rank_int_rows(rows: list[list[int]]) -> int:
    """Rank over Q of integer rows, by fraction-free elimination."""
    work = [row[:] for row in rows if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_idx = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_idx = i
                break
        if pivot_idx is None:
            continue
        work[rank], work[pivot_idx] = work[pivot_idx], work[rank]
        pivot_row = work[rank]
        pv = pivot_row[col]
        for i in range(rank + 1, len(work)):
            v = work[i][col]
            if v:
                g = gcd(pv, v)
                alpha, beta = pv // g, v // g
                newrow = [alpha * x - beta * y for x, y in zip(work[i], pivot_row)]
                rg = 0
                for x in newrow:
                    rg = gcd(rg, x)
                    if rg == 1:
                        break
                if rg > 1:
                    newrow = [x // rg for x in newrow]
                work[i] = newrow
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_mod_p_rows(rows: list[list[int]], p: int) -> int:
    """Rank over F_p of integer rows."""
    if p == 2:
        bits = []
        for row in rows:
            b = 0
            for j, v in enumerate(row):
                if v & 1:
                    b |= 1 << j
            bits.append(b)
        return rank_mod2_bitrows(bits)
    work = []
    for row in rows:
        r = [v % p for v in row]
        if any(r):
            work.append(r)
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_idx = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_idx = i
                break
        if pivot_idx is None:
            continue
        work[rank], work[pivot_idx] = work[pivot_idx], work[rank]
        pivot_row = work[rank]
        inv = pow(pivot_row[col], -1, p)
        for i in range(rank + 1, len(work)):
            v = work[i][col]
            if v:
                factor = (v * inv) % p
                work[i] = [(x - factor * y) % p for x, y in zip(work[i], pivot_row)]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_mod2_bitrows(bitrows: list[int]) -> int:
    """Rank over F_2 of rows packed as integer bitmasks."""
    pivots: list[tuple[int, int]] = []
    rank = 0
    for row in bitrows:
        for bit, prow in pivots:
            if row & bit:
                row ^= prow
        if row:
            pivots.append((row & -row, row))
            rank += 1
    return rank


def rank_over_field(m: IntMatrix, ring: Ring) -> int:
    """Exact rank of an integer matrix over Q or F_p."""
    if not ring.is_field:
        raise ValueError("rank_over_field needs Q or a prime field")
    if ring == Q:
        return rank_int_rows(m.entries)
    return rank_mod_p_rows(m.entries, ring.p)
