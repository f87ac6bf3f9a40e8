"""Dense GF(2) matrices packed one row per Python int.

Bit ``c`` of a packed row is the entry in column ``c``. All operations are
pure and return new matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapacityError, DimensionError

MAX_DIM = 64

Vector = tuple[int, ...]


def pack(bits: Sequence[int]) -> int:
    """Pack a 0/1 sequence into an int, element ``c`` at bit ``c``."""
    word = 0
    for c, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"non-binary entry {b!r} at position {c}")
        if b:
            word |= 1 << c
    return word


def unpack(word: int, n: int) -> Vector:
    return tuple((word >> c) & 1 for c in range(n))


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int
    nrows: int = field(init=False)

    def __post_init__(self) -> None:
        nrows = len(self.rows)
        if not (1 <= nrows <= MAX_DIM and 1 <= self.ncols <= MAX_DIM):
            raise CapacityError(
                f"{nrows}x{self.ncols} outside supported range 1..{MAX_DIM}"
            )
        mask = (1 << self.ncols) - 1
        for r, word in enumerate(self.rows):
            if word < 0 or word & ~mask:
                raise ValueError(f"row {r} has bits beyond column {self.ncols - 1}")
        object.__setattr__(self, "nrows", nrows)

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]]) -> "BitMatrix":
        """Build from row strings like ``"1011"`` or 0/1 sequences."""
        packed = []
        width = None
        for row in rows:
            bits = [int(ch) for ch in row] if isinstance(row, str) else list(row)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise DimensionError("ragged rows")
            packed.append(pack(bits))
        if width is None:
            raise DimensionError("empty matrix")
        return cls(tuple(packed), width)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        r, c = idx
        if not (0 <= c < self.ncols):
            raise IndexError(c)
        return (self.rows[r] >> c) & 1

    def row(self, r: int) -> Vector:
        return unpack(self.rows[r], self.ncols)

    def column(self, c: int) -> int:
        """Column ``c`` packed with row ``r`` at bit ``r``."""
        word = 0
        for r, bits in enumerate(self.rows):
            word |= ((bits >> c) & 1) << r
        return word

    def columns(self) -> list[int]:
        return [self.column(c) for c in range(self.ncols)]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(r)) for r in range(self.nrows)]

    def to_strings(self) -> list[str]:
        return ["".join(map(str, self.row(r))) for r in range(self.nrows)]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of ``a @ x = y``: ``particular + span(nullspace_basis)``."""

    particular: Vector | None
    nullspace_basis: tuple[Vector, ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(tuple(m.columns()), m.nrows)


def _rank_words(words: list[int]) -> int:
    # eliminate on the lowest set bit of each pivot
    basis: dict[int, int] = {}
    for v in words:
        while v:
            low = v & -v
            if low in basis:
                v ^= basis[low]
            else:
                basis[low] = v
                break
    return len(basis)


def rank(m: BitMatrix) -> int:
    return _rank_words(list(m.rows))


def is_nonsingular(m: BitMatrix) -> bool:
    return m.is_square and rank(m) == m.nrows


def in_span(vectors: Iterable[int], target: int) -> bool:
    """True if ``target`` is an XOR-combination of ``vectors``."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            low = v & -v
            if low in basis:
                v ^= basis[low]
            else:
                basis[low] = v
                break
    while target:
        low = target & -target
        if low not in basis:
            return False
        target ^= basis[low]
    return True


def solve(a: BitMatrix, y: Sequence[int]) -> SolutionSet:
    """Solve ``a @ x = y`` over GF(2) by reduced row echelon form.

    Pivots are taken at the lowest-index column, lowest-index row, so the
    output is deterministic. Free variables are zero in the particular
    solution; each null-space vector sets exactly one free variable.
    """
    if len(y) != a.nrows:
        raise DimensionError(f"rhs length {len(y)} != {a.nrows} rows")
    n = a.ncols
    rhs_bit = 1 << n
    yw = pack(y)
    work = [row | (rhs_bit if (yw >> r) & 1 else 0) for r, row in enumerate(a.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        bit = 1 << c
        p = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break

    consistent = all(w != rhs_bit for w in work[r:])
    particular = None
    if consistent:
        x = 0
        for i, c in enumerate(pivots):
            if work[i] & rhs_bit:
                x |= 1 << c
        particular = unpack(x, n)

    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = 1 << f
        for i, c in enumerate(pivots):
            if (work[i] >> f) & 1:
                x |= 1 << c
        basis.append(unpack(x, n))
    return SolutionSet(particular, tuple(basis))


def matvec(a: BitMatrix, x: Sequence[int]) -> Vector:
    if len(x) != a.ncols:
        raise DimensionError(f"vector length {len(x)} != {a.ncols} columns")
    xw = pack(x)
    return tuple((row & xw).bit_count() & 1 for row in a.rows)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product; block ``(i, j)`` is ``b`` when ``a[i, j] == 1``."""
    nrows, ncols = a.nrows * b.nrows, a.ncols * b.ncols
    if nrows > MAX_DIM or ncols > MAX_DIM:
        raise CapacityError(f"kron result {nrows}x{ncols} exceeds {MAX_DIM}")
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            word = 0
            for j in range(a.ncols):
                if (ra >> j) & 1:
                    word |= rb << (j * b.ncols)
            rows.append(word)
    return BitMatrix(tuple(rows), ncols)


def submatrix_rows(m: BitMatrix, start: int) -> BitMatrix:
    """Rows ``start .. nrows-1`` in order."""
    if not (0 <= start < m.nrows):
        raise IndexError(f"row {start} out of range for {m.nrows} rows")
    return BitMatrix(m.rows[start:], m.ncols)


def select_columns(m: BitMatrix, cols: Sequence[int]) -> BitMatrix:
    """Keep the listed columns, in the listed order."""
    rows = []
    for word in m.rows:
        out = 0
        for k, c in enumerate(cols):
            out |= ((word >> c) & 1) << k
        rows.append(out)
    return BitMatrix(tuple(rows), len(cols))


def delete_row_col(m: BitMatrix, r: int, c: int) -> BitMatrix:
    if m.nrows < 2 or m.ncols < 2:
        raise DimensionError("need at least 2 rows and 2 columns")
    if not (0 <= r < m.nrows):
        raise IndexError(f"row {r} out of range")
    if not (0 <= c < m.ncols):
        raise IndexError(f"column {c} out of range")
    low = (1 << c) - 1
    rows = tuple(
        (word & low) | ((word >> (c + 1)) << c)
        for i, word in enumerate(m.rows)
        if i != r
    )
    return BitMatrix(rows, m.ncols - 1)


__all__ = [
    "MAX_DIM",
    "BitMatrix",
    "SolutionSet",
    "delete_row_col",
    "in_span",
    "is_nonsingular",
    "kron",
    "matvec",
    "pack",
    "rank",
    "select_columns",
    "solve",
    "submatrix_rows",
    "transpose",
    "unpack",
]
