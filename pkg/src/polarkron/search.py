"""Kernel design by row/column deletion, and product-kernel pipelines."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import gf2
from .errors import NoPolarizationError
from .etable import ComparisonReport, ETable, compare_tables, eval_pb
from .kernel import ARIKAN, Kernel, product_kernel
from .polarization import (
    BRUTEFORCE_LIMIT,
    pb_bruteforce,
    pb_product_composition,
    pb_product_closed_form,
    pb_product_truth,
)
from .scaling import MuEstimate, SolverConfig, mu

PB_METHODS = ("brute-force", "paper-eq6eq7")


def rank_rows_by_polarization(t: ETable) -> list[int]:
    """Channels ordered by ``|p_i(1/2) - 1/2|``, largest first.

    The least polarized channels, the usual deletion candidates, come last.
    Ties keep channel order.
    """
    score = [abs(eval_pb(t, i, 0.5) - 0.5) for i in range(t.l)]
    return sorted(range(t.l), key=lambda i: -score[i])


@dataclass(frozen=True)
class Candidate:
    col: int
    kernel: Kernel
    valid: bool
    estimate: MuEstimate | None = None
    error: str | None = None

    @property
    def mu(self) -> float | None:
        if self.estimate is None or not self.estimate.converged:
            return None
        return self.estimate.mu


@dataclass(frozen=True)
class SearchResult:
    base: Kernel
    deleted_row: int
    method: str
    candidates: tuple[Candidate, ...]
    best: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": self.base.matrix.to_strings(),
            "row": self.deleted_row,
            "method": self.method,
            "candidates": [
                {
                    "col": c.col,
                    "valid": c.valid,
                    "mu": c.mu,
                    **({"error": c.error} if c.error else {}),
                }
                for c in self.candidates
            ],
            "best": self.best,
        }


def _candidate_mu(k: Kernel, method: str, cfg: SolverConfig) -> MuEstimate:
    table = pb_bruteforce(k)
    if method == "paper-eq6eq7":
        table = pb_product_closed_form(table)
    return mu(table, cfg)


def delete_search(
    base: Kernel,
    row: int,
    pb_method: str = "brute-force",
    cfg: SolverConfig | None = None,
) -> SearchResult:
    """Delete ``row`` and each column in turn; rank polarizing results by exponent.

    With ``pb_method="brute-force"`` each candidate is scored by its own
    exponent. With ``"paper-eq6eq7"`` the score is the exponent of
    ``T_2 (x) candidate`` from the closed-form product tables.
    """
    if pb_method not in PB_METHODS:
        raise ValueError(f"pb_method must be one of {PB_METHODS}")
    if base.size < 3:
        raise ValueError("base kernel must have size >= 3")
    if not base.polarizing:
        raise ValueError(f"base kernel is not polarizing ({base.reason()})")
    if not 0 <= row < base.size:
        raise IndexError(f"row {row} out of range")
    cfg = cfg or SolverConfig()
    candidates = []
    for col in range(base.size):
        k = Kernel(gf2.delete_row_col(base.matrix, row, col))
        if not k.polarizing:
            candidates.append(Candidate(col, k, False))
            continue
        try:
            est = _candidate_mu(k, pb_method, cfg)
            candidates.append(Candidate(col, k, True, est))
        except NoPolarizationError as exc:
            candidates.append(Candidate(col, k, True, None, str(exc)))
    scored = [c for c in candidates if c.mu is not None]
    best = min(scored, key=lambda c: (c.mu, c.col)).col if scored else None
    return SearchResult(base, row, pb_method, tuple(candidates), best)


@dataclass
class ProductBundle:
    kernel: Kernel
    tables: dict[str, ETable] = field(default_factory=dict)
    estimates: dict[str, MuEstimate] = field(default_factory=dict)
    comparisons: dict[str, ComparisonReport] = field(default_factory=dict)

    def mu_values(self) -> dict[str, float | None]:
        return {
            k: (e.mu if e.converged and math.isfinite(e.mu) else None)
            for k, e in self.estimates.items()
        }

    def to_dict(self) -> dict[str, Any]:
        from .etable import etable_to_dict

        return {
            "kernel": self.kernel.matrix.to_strings(),
            "polarizing": self.kernel.polarizing,
            "tables": {k: etable_to_dict(t) for k, t in self.tables.items()},
            "mu": {k: e.to_dict() for k, e in self.estimates.items()},
            "comparisons": {k: c.to_dict() for k, c in self.comparisons.items()},
        }


def evaluate_product(
    outer: Kernel,
    inner: Kernel,
    methods: Sequence[str] = ("brute-force", "product-truth", "composition", "paper-method"),
    cfg: SolverConfig | None = None,
    inner_table: ETable | None = None,
) -> ProductBundle:
    """Tables and exponents of ``outer (x) inner`` along each requested path.

    ``inner_table`` seeds the table-driven paths (defaults to brute force on
    ``inner``). ``paper-method`` and ``product-truth`` need ``outer == T_2``.
    Comparisons are emitted against ``brute-force`` when it was computed,
    otherwise against ``product-truth``.
    """
    cfg = cfg or SolverConfig()
    k = product_kernel([outer, inner])
    if not k.polarizing:
        raise ValueError(f"product kernel is not polarizing ({k.reason()})")
    bundle = ProductBundle(k)
    base = inner_table if inner_table is not None else pb_bruteforce(inner)
    is_t2 = outer.matrix == ARIKAN.matrix
    for m in methods:
        if m == "brute-force":
            if k.size > BRUTEFORCE_LIMIT:
                continue
            t = pb_bruteforce(k)
        elif m == "product-truth":
            if not is_t2:
                raise ValueError("product-truth path needs outer kernel T_2")
            t = pb_product_truth(base)
        elif m == "paper-method":
            if not is_t2:
                raise ValueError("paper-method path needs outer kernel T_2")
            t = pb_product_closed_form(base)
        elif m == "composition":
            t = pb_product_composition(pb_bruteforce(outer), base)
        else:
            raise ValueError(f"unknown method {m!r}")
        bundle.tables[m] = t
        bundle.estimates[m] = mu(t, cfg)
    ref_name = "brute-force" if "brute-force" in bundle.tables else "product-truth"
    ref = bundle.tables.get(ref_name)
    if ref is not None:
        for name, t in bundle.tables.items():
            if name != ref_name:
                bundle.comparisons[f"{name}~{ref_name}"] = compare_tables(t, ref)
    return bundle


__all__ = [
    "Candidate",
    "PB_METHODS",
    "ProductBundle",
    "SearchResult",
    "delete_search",
    "evaluate_product",
    "rank_rows_by_polarization",
]
