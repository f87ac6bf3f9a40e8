"""Polarization behaviour of kernels over the binary erasure channel.

Channels and weights are 0-based. An erasure pattern kills channel ``i``
when the unit vector ``(1, 0, ..., 0)`` of length ``l - i`` is not a sum of
non-erased columns of rows ``i..l-1``.

Two independent routes to ``E`` tables of ``T_2 (x) T_l`` live here: the
closed forms driven by a component table (:func:`pb_product_upper_eq6`,
:func:`pb_product_lower_eq7`) and ground truth (:func:`pb_bruteforce`,
:func:`pb_product_truth`, :func:`pb_compose`).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb, sqrt
from typing import Sequence

import numpy as np

from . import gf2
from .errors import CapacityError, DimensionError
from .etable import ETable, PolyPB, as_poly, etable_from_poly, poly_compose
from .gf2 import BitMatrix
from .kernel import ARIKAN, Kernel

BRUTEFORCE_LIMIT = 20


@dataclass(frozen=True)
class ErasurePattern:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("erasure pattern entries must be 0 or 1")

    @classmethod
    def from_mask(cls, mask: int, l: int) -> "ErasurePattern":
        return cls(gf2.unpack(mask, l))

    @property
    def mask(self) -> int:
        return gf2.pack(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)


def _as_pattern(e: ErasurePattern | Sequence[int]) -> ErasurePattern:
    return e if isinstance(e, ErasurePattern) else ErasurePattern(tuple(e))


def kills(k: Kernel, i: int, e: ErasurePattern | Sequence[int]) -> bool:
    """Whether erasure pattern ``e`` kills bit channel ``i`` of kernel ``k``."""
    e = _as_pattern(e)
    l = k.size
    if len(e) != l:
        raise DimensionError(f"pattern length {len(e)} != kernel size {l}")
    if not 0 <= i < l:
        raise IndexError(f"channel {i} out of range")
    kept = [c for c, b in enumerate(e.bits) if not b]
    if not kept:
        return True
    sub = gf2.select_columns(gf2.submatrix_rows(k.matrix, i), kept)
    target = (1,) + (0,) * (l - i - 1)
    return gf2.solve(sub, target).particular is None


def _kill_counts_resolve(columns: list[int], l: int) -> list[list[int]]:
    E = [[0] * (l + 1) for _ in range(l)]
    for mask in range(1 << l):
        w = mask.bit_count()
        kept = [col for c, col in enumerate(columns) if not (mask >> c) & 1]
        for i in range(l):
            if not gf2.in_span((col >> i for col in kept), 1):
                E[i][w] += 1
    return E


def _killed_channels(columns: list[int], mask: int) -> int:
    # Channel i survives iff some vector in the span of the kept columns has
    # its bottom-most 1 in row i; those rows are the pivots of an echelon
    # basis keyed on the highest set bit.
    pivots = 0
    basis: dict[int, int] = {}
    for c, v in enumerate(columns):
        if (mask >> c) & 1:
            continue
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                pivots |= 1 << h
                break
    return pivots


def _kill_counts_pivot(columns: list[int], l: int) -> list[list[int]]:
    E = [[0] * (l + 1) for _ in range(l)]
    full = (1 << l) - 1
    for mask in range(1 << l):
        w = mask.bit_count()
        killed = full & ~_killed_channels(columns, mask)
        while killed:
            low = killed & -killed
            E[low.bit_length() - 1][w] += 1
            killed ^= low
    return E


def pb_bruteforce(k: Kernel, strategy: str = "resolve") -> ETable:
    """Exact ``E`` table by enumerating all ``2^l`` erasure patterns.

    ``strategy="resolve"`` re-solves the span question for every (channel,
    pattern) pair. ``strategy="pivot"`` runs one elimination per pattern and
    reads all channels off its pivot rows; both give identical tables.
    """
    l = k.size
    if l > BRUTEFORCE_LIMIT:
        raise CapacityError(f"brute force limited to l <= {BRUTEFORCE_LIMIT}, got {l}")
    if not k.polarizing:
        warnings.warn(f"kernel is not polarizing ({k.reason()})", stacklevel=2)
    columns = k.matrix.columns()
    if strategy == "pivot":
        E = _kill_counts_pivot(columns, l)
    elif strategy == "resolve":
        E = _kill_counts_resolve(columns, l)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return ETable.from_rows(E, "brute-force", kernel=tuple(k.matrix.to_strings()))


def pb_product_upper_eq6(base: ETable, clamp: bool = True) -> list[list[int]]:
    """Upper-half rows of ``T_2 (x) T_l`` from the component counts.

    With ``N_w = C(l, w) - E[i][w]`` (non-killing patterns),
    ``X_j = N_(l-j) - N_(l-j+1)`` and
    ``E'[i][w] = C(2l, 2l-w) - sum_{j=1}^{floor((2l-w)/2)} X_j C(2l-2j, 2l-w-2j)``.

    ``X_j`` is kept signed; the plain formula can go negative, and with
    ``clamp=True`` such counts are floored at zero.
    """
    l = base.l
    if l < 2:
        raise ValueError("component size must be >= 2")
    L = 2 * l

    def nonkilling(row: Sequence[int], w: int) -> int:
        return comb(l, w) - row[w] if 0 <= w <= l else 0

    out = []
    for row in base.entries:
        X = [0] + [nonkilling(row, l - j) - nonkilling(row, l - j + 1) for j in range(1, l + 1)]
        new = []
        for w in range(L + 1):
            v = comb(L, L - w) - sum(
                X[j] * comb(L - 2 * j, L - w - 2 * j) for j in range(1, (L - w) // 2 + 1)
            )
            new.append(max(0, v) if clamp else v)
        out.append(new)
    return out


def pb_product_lower_eq7(base: ETable) -> list[list[int]]:
    """Lower-half rows ``l..2l-1`` of ``T_2 (x) T_l``.

    Lower channel ``l + i`` is killed exactly when the positionwise AND of
    the two halves kills channel ``i`` of ``T_l``. A killing component
    pattern of weight ``w0`` extends to weight ``w`` by picking ``w - 2 w0``
    of its ``l - w0`` non-erased positions to be erased on one side (either
    side), giving ``E[i][w0] C(l-w0, w-2w0) 2^(w-2w0)`` for
    ``max(0, w-l) <= w0 <= w // 2``.
    """
    l = base.l
    if l < 2:
        raise ValueError("component size must be >= 2")
    out = []
    for row in base.entries:
        out.append([
            sum(
                row[w0] * comb(l - w0, w - 2 * w0) * 2 ** (w - 2 * w0)
                for w0 in range(max(0, w - l), w // 2 + 1)
            )
            for w in range(2 * l + 1)
        ])
    return out


def pb_product_closed_form(base: ETable) -> ETable:
    """Full ``2l`` table from the closed forms (upper clamped, lower with corrected bounds)."""
    rows = pb_product_upper_eq6(base) + pb_product_lower_eq7(base)
    return ETable.from_rows(rows, "paper-method")


def _upper_truth(base: ETable) -> list[list[int]]:
    # upper channels see the positionwise OR of the two halves
    l = base.l
    out = []
    for row in base.entries:
        out.append([
            sum(
                row[w0] * comb(w0, 2 * w0 - w) * 2 ** (2 * w0 - w)
                for w0 in range((w + 1) // 2, min(w, l) + 1)
            )
            for w in range(2 * l + 1)
        ])
    return out


def pb_product_truth(base: ETable) -> ETable:
    """Ground-truth table of ``T_2 (x) T_l`` from the table of ``T_l``."""
    rows = _upper_truth(base) + pb_product_lower_eq7(base)
    return ETable.from_rows(rows, "product-truth")


def pb_compose(outer: ETable | PolyPB, inner: ETable | PolyPB) -> PolyPB:
    """Polarization behaviour of ``outer (x) inner``.

    Channel ``j * l_inner + k`` is ``g_k(f_j(z))`` with ``f`` the outer and
    ``g`` the inner channel polynomials.
    """
    f, g = as_poly(outer), as_poly(inner)
    coeffs = []
    for fj in f.coeffs:
        for gk in g.coeffs:
            coeffs.append(tuple(poly_compose(gk, fj)))
    return PolyPB(f.l * g.l, tuple(coeffs))


def pb_product_composition(outer: ETable | PolyPB, inner: ETable | PolyPB) -> ETable:
    return etable_from_poly(pb_compose(outer, inner), "composition")


ARIKAN_TABLE = ETable.from_rows([[0, 2, 1], [0, 0, 1]], "brute-force", kernel=("10", "11"))


def t2_factor(k: Kernel) -> Kernel | None:
    """Return ``T_l`` if ``k == T_2 (x) T_l``, else None."""
    L = k.size
    if L % 2:
        return None
    l = L // 2
    mask = (1 << l) - 1
    upper = [row & mask for row in k.matrix.rows[:l]]
    if any(row >> l for row in k.matrix.rows[:l]):
        return None
    for r in range(l):
        lower = k.matrix.rows[l + r]
        if lower & mask != upper[r] or lower >> l != upper[r]:
            return None
    return Kernel(BitMatrix(tuple(upper), l))


@dataclass(frozen=True)
class MonteCarloResult:
    z: float
    samples: int
    seed: int
    rng: str
    estimates: tuple[float, ...]
    stderr: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "z": self.z,
            "samples": self.samples,
            "seed": self.seed,
            "rng": self.rng,
            "estimates": list(self.estimates),
            "stderr": list(self.stderr),
        }


def monte_carlo_pb(k: Kernel, z: float, samples: int, seed: int) -> MonteCarloResult:
    """Estimate every ``p_i(z)`` by sampling i.i.d. erasure patterns.

    Each distinct sampled pattern is checked once with :func:`kills`.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"z={z} outside [0, 1]")
    l = k.size
    rng = np.random.Generator(np.random.Philox(seed))
    erased = rng.random((samples, l)) < z
    masks = erased.astype(np.int64) @ (np.int64(1) << np.arange(l, dtype=np.int64))
    uniq, counts = np.unique(masks, return_counts=True)
    hits = [0] * l
    for mask, n in zip(uniq.tolist(), counts.tolist()):
        e = ErasurePattern.from_mask(mask, l)
        for i in range(l):
            if kills(k, i, e):
                hits[i] += n
    est = tuple(h / samples for h in hits)
    se = tuple(sqrt(p * (1.0 - p) / samples) for p in est)
    return MonteCarloResult(z, samples, seed, "numpy.Philox", est, se)


__all__ = [
    "ARIKAN",
    "ARIKAN_TABLE",
    "BRUTEFORCE_LIMIT",
    "ErasurePattern",
    "MonteCarloResult",
    "kills",
    "monte_carlo_pb",
    "pb_bruteforce",
    "pb_compose",
    "pb_product_composition",
    "pb_product_lower_eq7",
    "pb_product_closed_form",
    "pb_product_truth",
    "pb_product_upper_eq6",
    "t2_factor",
]
