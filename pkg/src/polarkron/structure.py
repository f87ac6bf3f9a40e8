"""Partial distances, kernel codes and self-duality.

Storage is 0-based: row ``i`` of the kernel is ``g_(i+1)`` in 1-based
notation and ``kernel_code(k, i)`` spans rows ``i..l-1``. JSON output uses
1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np

from . import gf2
from .errors import CapacityError, IntegrityError
from .etable import ETable
from .gf2 import BitMatrix
from .kernel import Kernel

PARTIAL_DISTANCE_LIMIT = 24


def kernel_code(k: Kernel, i: int) -> BitMatrix | None:
    """Generator of the code spanned by rows ``i..l-1``; None for the zero code (``i == l``)."""
    l = k.size
    if not 0 <= i <= l:
        raise IndexError(f"code index {i} outside 0..{l}")
    if i == l:
        return None
    return gf2.submatrix_rows(k.matrix, i)


def code_dimension(k: Kernel, i: int) -> int:
    gen = kernel_code(k, i)
    return 0 if gen is None else gf2.rank(gen)


def _coset_min_weight(g: int, gens: tuple[int, ...]) -> int:
    # Gray-code walk over all 2^len(gens) combinations
    best = g.bit_count()
    v = g
    for step in range(1, 1 << len(gens)):
        v ^= gens[(step & -step).bit_length() - 1]
        w = v.bit_count()
        if w < best:
            best = w
    return best


@dataclass(frozen=True)
class PartialDistanceProfile:
    l: int
    d: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "l": self.l,
            "partial_distances": list(self.d),
            "labels": [f"d_{i + 1}" for i in range(self.l)],
        }


def partial_distances(k: Kernel) -> PartialDistanceProfile:
    """``d[i]``: Hamming distance from row ``i`` to the span of rows ``i+1..l-1``."""
    l = k.size
    if l > PARTIAL_DISTANCE_LIMIT:
        raise CapacityError(f"coset scan limited to l <= {PARTIAL_DISTANCE_LIMIT}")
    rows = k.matrix.rows
    return PartialDistanceProfile(
        l, tuple(_coset_min_weight(rows[i], rows[i + 1:]) for i in range(l))
    )


@dataclass(frozen=True)
class SelfDualReport:
    is_self_dual: bool
    dims: tuple[int, ...]
    failing_index: int | None = None
    witness: tuple[int, int] | None = None
    reason: str | None = None

    def to_dict(self, l: int | None = None) -> dict[str, Any]:
        doc: dict[str, Any] = {"self_dual": self.is_self_dual, "dims": list(self.dims)}
        if l is not None:
            doc = {"l": l, **doc}
        if self.witness is not None:
            a, b = self.witness
            doc["witness"] = {
                "i": self.failing_index,
                "rows": [a + 1, b + 1],
                "reason": self.reason,
            }
        elif self.reason is not None:
            doc["witness"] = {"i": self.failing_index, "rows": None, "reason": self.reason}
        return doc


def is_self_dual(k: Kernel) -> SelfDualReport:
    """Check ``C_i == dual(C_(l-i))`` for every ``0 <= i <= l``.

    Equality follows from ``C_i`` being orthogonal to ``C_(l-i)`` together
    with ``dim C_i + dim C_(l-i) == l``. The first failing ``i`` is reported
    with a pair of non-orthogonal rows (0-based) or a dimension reason.
    """
    l = k.size
    rows = k.matrix.rows
    dims = tuple(code_dimension(k, i) for i in range(l + 1))
    for i in range(l + 1):
        if dims[i] + dims[l - i] != l:
            return SelfDualReport(
                False, dims, i, None,
                f"dim C_{i} + dim C_{l - i} = {dims[i] + dims[l - i]} != {l}",
            )
        for a in range(i, l):
            for b in range(l - i, l):
                if (rows[a] & rows[b]).bit_count() & 1:
                    return SelfDualReport(
                        False, dims, i, (a, b), f"row {a + 1} . row {b + 1} = 1"
                    )
    return SelfDualReport(True, dims)


def min_kill_weights(t: ETable) -> list[int]:
    """Smallest erasure weight that kills each channel."""
    out = []
    for i, row in enumerate(t.entries):
        w = next((w for w, e in enumerate(row) if e > 0), None)
        if w is None:
            raise IntegrityError(f"channel {i} has an all-zero row")
        out.append(w)
    return out


def duality_symmetry_check(
    t: ETable, kernel: Kernel | None = None, grid: int = 201, tol: float = 1e-12
) -> bool | None:
    """Symmetry laws of self-dual kernels, on a table.

    Checks ``E[i][w] + E[l-1-i][l-w] <= C(l, w)`` for all cells and
    ``p_(l-1-i)(z) == 1 - p_i(1-z)`` on a uniform z-grid. Returns None when
    the kernel (given, or recorded on the table) is not self-dual, since the
    laws do not apply there.
    """
    if kernel is None and t.kernel is not None:
        kernel = Kernel.from_rows(t.kernel)
    if kernel is not None and not is_self_dual(kernel).is_self_dual:
        return None
    l = t.l
    E = t.entries
    for i in range(l):
        for w in range(l + 1):
            if E[i][w] + E[l - 1 - i][l - w] > comb(l, w):
                return False
    z = np.linspace(0.0, 1.0, grid)
    w = np.arange(l + 1)
    basis = z[:, None] ** w * (1.0 - z[:, None]) ** (l - w)
    flipped = basis[::-1]
    for i in range(l):
        lhs = basis @ np.asarray(E[l - 1 - i], dtype=float)
        rhs = 1.0 - flipped @ np.asarray(E[i], dtype=float)
        if np.max(np.abs(lhs - rhs)) > tol:
            return False
    return True


__all__ = [
    "PartialDistanceProfile",
    "SelfDualReport",
    "code_dimension",
    "duality_symmetry_check",
    "is_self_dual",
    "kernel_code",
    "min_kill_weights",
    "partial_distances",
]
