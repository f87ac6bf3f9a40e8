"""Scaling exponent of a polarization behaviour over the BEC.

The fraction of unpolarized channels obeys
``f_(n+1)(z) = mean_i f_n(p_i(z))``. Asymptotically ``f_(n+1) ~ lambda f_n``
with ``lambda = l^(-1/mu)``, so ``mu`` follows from the dominant
eigenvalue of the averaging operator. We run a normalized power iteration
on a uniform z-grid: ``p_i`` is evaluated exactly at the grid nodes and
``f_n`` is sampled at ``p_i(z)`` by linear interpolation. The contraction
per step is the ratio of integrals ``int f_(n+1) / int f_n``; iterates are
rescaled to sup norm 1 so they stay in ``[0, 1]``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from .errors import NoPolarizationError
from .etable import ETable, PolyPB

STALL_TOL = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    grid_points: int = 16385
    mu_tol: float = 1e-6
    sup_tol: float = 1e-8
    max_iters: int = 200
    a: float = 0.0
    b: float = 1.0
    stall_iters: int = 5

    def __post_init__(self) -> None:
        if self.grid_points < 3:
            raise ValueError("grid_points must be >= 3")
        if not 0.0 <= self.a < self.b <= 1.0:
            raise ValueError("thresholds must satisfy 0 <= a < b <= 1")
        if self.mu_tol <= 0 or self.sup_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "interpolation": "linear"}


@dataclass(frozen=True)
class MuEstimate:
    mu: float
    iterations: int
    converged: bool
    final_ratio: float
    history: tuple[tuple[float, float], ...] = field(repr=False)
    l: int = 0

    def mu_at(self, n: int) -> float:
        """Exponent implied by the contraction measured at iteration ``n`` (1-based)."""
        lam = self.history[n - 1][0]
        return -math.log(self.l) / math.log(lam) if lam < 1.0 else math.inf

    def to_dict(self, cfg: SolverConfig | None = None) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "mu": self.mu if math.isfinite(self.mu) else None,
            "iterations": self.iterations,
            "converged": self.converged,
            "lambda": self.final_ratio,
        }
        if cfg is not None:
            doc["config"] = cfg.to_dict()
        return doc


def channel_values(pb: ETable | PolyPB, z: np.ndarray) -> np.ndarray:
    """``p_i(z)`` for every channel on the points ``z``; shape ``(l, len(z))``."""
    if isinstance(pb, ETable):
        l = pb.l
        for i, row in enumerate(pb.entries):
            if row[0] != 0 or row[l] != 1:
                raise ValueError(f"channel {i}: need p(0)=0 and p(1)=1")
        w = np.arange(l + 1)
        basis = z[:, None] ** w * (1.0 - z[:, None]) ** (l - w)
        P = np.asarray(pb.entries, dtype=float) @ basis.T
    else:
        l = pb.l
        for i, c in enumerate(pb.coeffs):
            if c[0] != 0 or sum(c) != 1:
                raise ValueError(f"channel {i}: need p(0)=0 and p(1)=1")
        P = np.stack([np.polynomial.polynomial.polyval(z, c) for c in pb.coeffs])
    if l < 2:
        raise ValueError("need at least two channels")
    P = np.clip(P, 0.0, 1.0)
    P[:, 0] = 0.0
    P[:, -1] = 1.0
    return P


def iterates(
    pb: ETable | PolyPB, cfg: SolverConfig | None = None
) -> Iterator[tuple[float, float, np.ndarray]]:
    """Yield ``(lambda_n, sup_change_n, f_n)`` for ``n = 1, 2, ...`` (unbounded).

    ``f_n`` is the rescaled iterate on the grid. Raises
    :class:`NoPolarizationError` if an iterate vanishes.
    """
    cfg = cfg or SolverConfig()
    z = np.linspace(0.0, 1.0, cfg.grid_points)
    P = channel_values(pb, z)
    l = P.shape[0]
    f = ((z > cfg.a) & (z < cfg.b)).astype(float)
    if cfg.a == 0.0:
        f[0] = 0.0
    if cfg.b == 1.0:
        f[-1] = 0.0
    while True:
        g = np.zeros_like(f)
        for i in range(l):
            g += np.interp(P[i], z, f)
        g /= l
        top = float(g.max())
        if top <= 0.0:
            raise NoPolarizationError("iterate vanished on the grid")
        # endpoints are 0, so on a uniform grid the integral ratio is a sum ratio
        lam = min(float(g.sum() / f.sum()), 1.0)
        g /= top
        change = float(np.max(np.abs(g - f)))
        f = g
        yield lam, change, f


def mu(pb: ETable | PolyPB, cfg: SolverConfig | None = None) -> MuEstimate:
    """Scaling exponent of a polarization behaviour.

    Converged when successive exponent estimates agree within ``mu_tol``
    and the normalized iterate moves by at most ``sup_tol`` in sup norm.
    Raises :class:`NoPolarizationError` if the iterate is a fixed point
    with contraction 1 for ``stall_iters`` consecutive steps. Returns an
    estimate with ``converged=False`` if ``max_iters`` runs out.
    """
    cfg = cfg or SolverConfig()
    l = pb.l
    history: list[tuple[float, float]] = []
    prev = math.inf
    cur = math.inf
    lam = 1.0
    stall = 0
    steps = iterates(pb, cfg)
    for n in range(1, cfg.max_iters + 1):
        lam, change, _ = next(steps)
        history.append((lam, change))
        if lam >= 1.0 - STALL_TOL:
            stall += 1
            if stall >= cfg.stall_iters and change <= cfg.sup_tol:
                raise NoPolarizationError(
                    f"contraction factor stayed at 1 for {stall} iterations"
                )
            prev = cur = math.inf
            continue
        stall = 0
        cur = -math.log(l) / math.log(lam)
        if abs(cur - prev) <= cfg.mu_tol and change <= cfg.sup_tol:
            return MuEstimate(cur, n, True, lam, tuple(history), l)
        prev = cur
    return MuEstimate(cur, cfg.max_iters, False, lam, tuple(history), l)


@dataclass(frozen=True)
class SweepRow:
    L: int
    mu: float | None
    source: str
    converged: bool = False
    error: str | None = None


def mu_sweep(
    items: Iterable[tuple[str, ETable | PolyPB]], cfg: SolverConfig | None = None
) -> list[SweepRow]:
    """Solve every labelled behaviour; failures become rows with ``mu=None``."""
    rows = []
    for label, pb in items:
        L = pb.l
        try:
            est = mu(pb, cfg)
        except (NoPolarizationError, ValueError) as exc:
            rows.append(SweepRow(L, None, label, False, str(exc)))
            continue
        rows.append(SweepRow(L, est.mu if math.isfinite(est.mu) else None, label, est.converged))
    rows.sort(key=lambda r: r.L)
    return rows


def sweep_to_csv(rows: Sequence[SweepRow], passthrough: Sequence[SweepRow] = ()) -> str:
    """CSV with header ``L,mu,source``; passthrough rows are merged in by ``L``."""
    merged = sorted([*rows, *passthrough], key=lambda r: r.L)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["L", "mu", "source"])
    for r in merged:
        writer.writerow([r.L, "" if r.mu is None else f"{r.mu:.6f}", r.source])
    return buf.getvalue()


__all__ = [
    "MuEstimate",
    "SolverConfig",
    "SweepRow",
    "channel_values",
    "iterates",
    "mu",
    "mu_sweep",
    "sweep_to_csv",
]
