"""Kernels: parsing, polarizing-property flags, counting and products."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import gf2
from .errors import CapacityError, KernelParseError
from .gf2 import BitMatrix

ENUMERATION_LIMIT = 4


def _lowest_row(column: int) -> int:
    """Index of the bottom-most 1 in a packed column, -1 for a zero column."""
    return column.bit_length() - 1


def is_triangularizable(m: BitMatrix) -> bool:
    """True iff some column permutation makes ``m`` upper triangular.

    A column can sit at position ``j`` only if its bottom-most 1 is in row
    ``<= j``. Placing columns in ascending order of that row is optimal, so
    one sort decides the question.
    """
    if not m.is_square:
        raise ValueError("triangularizability is defined for square matrices")
    lows = sorted(_lowest_row(col) for col in m.columns())
    return all(low <= j for j, low in enumerate(lows))


def is_triangularizable_bruteforce(m: BitMatrix) -> bool:
    """Reference check scanning every column permutation (small ``l`` only)."""
    l = m.nrows
    cols = m.columns()
    for perm in itertools.permutations(range(l)):
        if all(_lowest_row(cols[c]) <= j for j, c in enumerate(perm)):
            return True
    return False


@dataclass(frozen=True)
class Kernel:
    matrix: BitMatrix
    nonsingular: bool = field(init=False)
    triangularizable: bool = field(init=False)
    polarizing: bool = field(init=False)

    def __post_init__(self) -> None:
        if not self.matrix.is_square:
            raise ValueError(f"kernel must be square, got {self.matrix.shape}")
        nonsingular = gf2.is_nonsingular(self.matrix)
        tri = is_triangularizable(self.matrix)
        object.__setattr__(self, "nonsingular", nonsingular)
        object.__setattr__(self, "triangularizable", tri)
        object.__setattr__(self, "polarizing", nonsingular and not tri)

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]]) -> "Kernel":
        return cls(BitMatrix.from_rows(rows))

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def reason(self) -> str | None:
        """Why the kernel is not polarizing, or None if it is."""
        if not self.nonsingular:
            return "singular"
        if self.triangularizable:
            return "triangularizable"
        return None

    def __str__(self) -> str:
        return serialize_kernel(self)


def parse_kernel(text: str) -> Kernel:
    """Parse the kernel file format.

    Lines starting with ``#`` are comments, blank lines are skipped, and
    whitespace inside a row is ignored. Every row must have as many 0/1
    characters as there are rows.
    """
    rows: list[str] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = "".join(stripped.split())
        bad = next((ch for ch in row if ch not in "01"), None)
        if bad is not None:
            raise KernelParseError(f"non-binary character {bad!r}", lineno)
        rows.append(row)
        lines.append(lineno)
    if not rows:
        raise KernelParseError("no kernel rows found")
    l = len(rows)
    for row, lineno in zip(rows, lines):
        if len(row) != l:
            raise KernelParseError(
                f"row has {len(row)} entries, expected {l} (square kernel)", lineno
            )
    if l > gf2.MAX_DIM:
        raise KernelParseError(f"kernel size {l} exceeds {gf2.MAX_DIM}")
    return Kernel.from_rows(rows)


def serialize_kernel(k: Kernel, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.extend(k.matrix.to_strings())
    return "\n".join(lines)


def count_nonsingular(l: int) -> int:
    return 2 ** (l * (l - 1) // 2) * math.prod(2**i - 1 for i in range(1, l + 1))


def count_polarizing(l: int) -> int:
    """Number of polarizing ``l x l`` binary kernels (exact)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return 2 ** (l * (l - 1) // 2) * (
        math.prod(2**i - 1 for i in range(1, l + 1)) - math.factorial(l)
    )


def count_polarizing_product(sizes: Sequence[int]) -> int:
    """Number of ordered tuples of polarizing components of the given sizes.

    This is the product of per-size counts. It is not the number of
    polarizing matrices that factor as a Kronecker product: a product with a
    non-polarizing factor can still polarize (``T_2 (x) I_2`` does).
    """
    if not sizes:
        raise ValueError("need at least one component size")
    return math.prod(count_polarizing(l) for l in sizes)


def all_matrices(l: int) -> Iterable[BitMatrix]:
    """Every ``l x l`` binary matrix, ordered lexicographically by row strings."""
    n = l * l
    for code in range(1 << n):
        bits = format(code, f"0{n}b")
        yield BitMatrix.from_rows(bits[r * l:(r + 1) * l] for r in range(l))


def enumerate_polarizing(l: int) -> list[Kernel]:
    if l > ENUMERATION_LIMIT:
        raise CapacityError(f"enumeration limited to l <= {ENUMERATION_LIMIT}")
    if l < 1:
        raise ValueError("l must be >= 1")
    out = []
    for m in all_matrices(l):
        k = Kernel(m)
        if k.polarizing:
            out.append(k)
    return out


def product_kernel(components: Sequence[Kernel]) -> Kernel:
    """Kronecker product of the components, left to right."""
    if not components:
        raise ValueError("need at least one component")
    m = components[0].matrix
    for k in components[1:]:
        m = gf2.kron(m, k.matrix)
    return Kernel(m)


ARIKAN = Kernel.from_rows(["10", "11"])


__all__ = [
    "ARIKAN",
    "Kernel",
    "all_matrices",
    "count_nonsingular",
    "count_polarizing",
    "count_polarizing_product",
    "enumerate_polarizing",
    "is_triangularizable",
    "is_triangularizable_bruteforce",
    "parse_kernel",
    "product_kernel",
    "serialize_kernel",
]
