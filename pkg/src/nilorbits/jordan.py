"""Brute-force verification of the orbit-partition formulas.

Builds the simple-root-vector representative of a subset J as an explicit
integer matrix and reads its Jordan type off exact ranks of powers.  All
rank computations use fraction-free elimination over the integers.
"""

from __future__ import annotations

from .core import (
    DataIntegrityError,
    InputError,
    LieType,
    Partition,
    SubsetJ,
    UnsupportedFamilyError,
    check_subset_range,
)


class IntMatrix:
    """Square matrix of arbitrary-precision integers."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        dim = len(rows)
        for row in rows:
            if len(row) != dim:
                raise InputError("matrix must be square")
        self.dim = dim
        self.rows = rows

    @classmethod
    def zero(cls, dim: int) -> "IntMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int], int]) -> "IntMatrix":
        """Build from 1-indexed (row, col) -> value assignments."""
        grid = [[0] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise InputError("entry position (%d, %d) outside dimension %d" % (i, j, dim))
            grid[i - 1][j - 1] = v
        return cls(grid)

    def entry(self, i: int, j: int) -> int:
        """1-indexed entry access."""
        return self.rows[i - 1][j - 1]

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.dim != other.dim:
            raise InputError("dimension mismatch in matrix product")
        n = self.dim
        a, b = self.rows, other.rows
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            arow = a[i]
            orow = out[i]
            for k in range(n):
                v = arow[k]
                if v == 0:
                    continue
                brow = b[k]
                for j in range(n):
                    if brow[j]:
                        orow[j] += v * brow[j]
        return IntMatrix(out)

    __matmul__ = matmul

    def power(self, k: int) -> "IntMatrix":
        if k < 1:
            raise InputError("power must be >= 1")
        result = self
        for _ in range(k - 1):
            result = result.matmul(self)
        return result

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def is_strictly_upper(self) -> bool:
        return all(
            self.rows[i][j] == 0 for i in range(self.dim) for j in range(i + 1)
        )

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero entries as sorted 1-indexed (row, col, value) triples."""
        return [
            (i + 1, j + 1, v)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v
        ]

    def term_string(self) -> str:
        """Render as a signed sum of elementary matrices, e.g. E_{1,2} + E_{3,4}."""
        terms = self.terms()
        if not terms:
            return "0"
        pieces = []
        for i, j, v in terms:
            unit = "E_{%d,%d}" % (i, j)
            if abs(v) != 1:
                unit = "%d*%s" % (abs(v), unit)
            if not pieces:
                pieces.append(unit if v > 0 else "-" + unit)
            else:
                pieces.append(("+ " if v > 0 else "- ") + unit)
        return " ".join(pieces)

    def rank(self) -> int:
        """Exact rank by fraction-free (Bareiss) elimination.

        Divisions are checked: a nonzero remainder would mean lost
        exactness and raises instead of silently truncating.
        """
        m = [list(row) for row in self.rows]
        n = self.dim
        rank = 0
        prev = 1
        for col in range(n):
            pivot = None
            for r in range(rank, n):
                if m[r][col] != 0:
                    pivot = r
                    break
            if pivot is None:
                continue
            if pivot != rank:
                m[rank], m[pivot] = m[pivot], m[rank]
            lead = m[rank][col]
            for r in range(rank + 1, n):
                factor = m[r][col]
                row_r = m[r]
                row_p = m[rank]
                for c in range(col + 1, n):
                    q, rem = divmod(lead * row_r[c] - factor * row_p[c], prev)
                    if rem:
                        raise DataIntegrityError("fraction-free elimination lost exactness")
                    row_r[c] = q
                row_r[col] = 0
            prev = lead
            rank += 1
        return rank

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "IntMatrix(%r)" % (list(list(r) for r in self.rows),)


def _simple_root_entries(family: str, n: int, i: int) -> dict[tuple[int, int], int]:
    """Matrix entries of the i-th simple root vector in the defining model."""
    if family == "A":
        return {(i, i + 1): 1}
    if family == "B":
        if i <= n - 1:
            return {(i + 1, i + 2): 1, (n + i + 2, n + i + 1): -1}
        return {(1, 2 * n + 1): 1, (n + 1, 1): -1}
    if family == "C":
        if i <= n - 1:
            return {(i, i + 1): 1, (n + i + 1, n + i): -1}
        return {(n, 2 * n): 1}
    if family == "D":
        if i <= n - 1:
            return {(i, i + 1): 1, (n + i + 1, n + i): -1}
        return {(n - 1, 2 * n): 1, (n, 2 * n - 1): -1}
    raise UnsupportedFamilyError("no root-vector model for family %s" % family)


def representative_matrix(t: LieType, j: SubsetJ) -> IntMatrix:
    """Sum of the simple root vectors whose indices are *not* in J."""
    if not t.is_classical:
        raise UnsupportedFamilyError(
            "representative matrices exist only for classical families, not %s" % t.family
        )
    check_subset_range(t, j)
    n = t.rank
    entries: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        if i in j:
            continue
        entries.update(_simple_root_entries(t.family, n, i))
    return IntMatrix.from_entries(t.matrix_dimension, entries)


def rank_sequence(m: IntMatrix) -> list[int]:
    """Ranks of successive powers, starting at rank(m^0) = dim, ending at 0.

    Raises if the matrix is not nilpotent (no power up to the dimension
    vanishes).
    """
    dim = m.dim
    ranks = [dim]
    power = m
    for _ in range(1, dim + 1):
        r = power.rank()
        ranks.append(r)
        if r == 0:
            return ranks
        power = power.matmul(m)
    raise InputError(
        "matrix is not nilpotent: rank of the %d-th power is %d" % (dim, ranks[-1])
    )


def jordan_partition(m: IntMatrix) -> Partition:
    """Jordan type of a nilpotent integer matrix from exact ranks of powers.

    With r_k = rank(m^k), the count of Jordan blocks of size >= k is
    r_{k-1} - r_k; the block sizes assemble into a partition of the
    dimension.
    """
    ranks = rank_sequence(m)
    counts = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for size in range(len(counts), 0, -1):
        larger = counts[size] if size < len(counts) else 0
        parts.extend([size] * (counts[size - 1] - larger))
    return Partition(tuple(parts))
