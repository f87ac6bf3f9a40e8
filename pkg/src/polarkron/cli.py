"""Command-line interface.

Exit codes: 0 success, 1 domain-invalid input, 2 numerical non-convergence,
3 parse or I/O error.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path
from typing import Any, Callable

import click
import jsonschema

from . import paperdata
from .errors import (
    CapacityError,
    DimensionError,
    IntegrityError,
    KernelParseError,
    NoPolarizationError,
)
from .etable import (
    ETable,
    compare_tables,
    etable_from_csv,
    etable_from_json,
    etable_to_csv,
    etable_to_dict,
)
from .kernel import ARIKAN, Kernel, parse_kernel
from .polarization import (
    ARIKAN_TABLE,
    monte_carlo_pb,
    pb_bruteforce,
    pb_product_composition,
    pb_product_closed_form,
    pb_product_truth,
    t2_factor,
)
from .scaling import SolverConfig, mu as solve_mu
from .search import delete_search, evaluate_product
from .structure import is_self_dual, partial_distances

EXIT_OK, EXIT_INVALID, EXIT_NONCONVERGED, EXIT_PARSE = 0, 1, 2, 3


class CliExit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(doc: Any) -> None:
    click.echo(json.dumps(doc, indent=2))


def handle_errors(fn: Callable) -> Callable:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CliExit as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(exc.code)
        except (KernelParseError, OSError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
            msg = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
            click.echo(f"error: {msg}", err=True)
            sys.exit(EXIT_PARSE)
        except NoPolarizationError as exc:
            click.echo(f"error: no polarization: {exc}", err=True)
            sys.exit(EXIT_NONCONVERGED)
        except (IntegrityError, DimensionError, CapacityError, ValueError, IndexError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)

    return wrapper


def load_kernel(path: str) -> Kernel:
    return parse_kernel(Path(path).read_text(encoding="utf-8"))


def load_table(ref: str) -> ETable:
    """A table JSON/CSV file, or the name of an embedded table (``table2``, ``tableIII``...)."""
    p = Path(ref)
    if p.exists():
        text = p.read_text(encoding="utf-8")
        if p.suffix.lower() == ".csv":
            return etable_from_csv(text)
        return etable_from_json(text)
    table = paperdata.lookup_table(ref)
    if table is None:
        raise CliExit(EXIT_PARSE, f"no such table file or embedded table: {ref}")
    return table


def load_table_or_kernel(ref: str) -> ETable:
    p = Path(ref)
    if p.exists() and p.suffix.lower() not in (".json", ".csv"):
        return pb_bruteforce(load_kernel(ref))
    return load_table(ref)


def _config(grid: int | None, max_iters: int | None) -> SolverConfig:
    kw: dict[str, Any] = {}
    if grid is not None:
        kw["grid_points"] = grid
    if max_iters is not None:
        kw["max_iters"] = max_iters
    return SolverConfig(**kw)


@click.group()
@click.version_option(package_name="artifact")
def cli() -> None:
    """Polarization behaviour and scaling exponents of binary kernels over the BEC."""


@cli.group()
def kernel() -> None:
    """Kernel file utilities."""


@kernel.command("validate")
@click.argument("file")
@handle_errors
def kernel_validate(file: str) -> None:
    """Check that FILE holds a polarizing kernel."""
    k = load_kernel(file)
    _emit({
        "l": k.size,
        "nonsingular": k.nonsingular,
        "triangularizable": k.triangularizable,
        "polarizing": k.polarizing,
        "reason": k.reason(),
    })
    if not k.polarizing:
        sys.exit(EXIT_INVALID)


@cli.group()
def pb() -> None:
    """Polarization behaviour tables."""


@pb.command("compute")
@click.argument("file", required=False)
@click.option("--method", type=click.Choice(["bruteforce", "paper", "truth", "composition"]),
              default="bruteforce", show_default=True)
@click.option("--inner", help="Component T_l for product methods: kernel file, table file, or embedded table name.")
@click.option("--out", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--strategy", type=click.Choice(["resolve", "pivot"]), default="resolve", show_default=True)
@handle_errors
def pb_compute(file: str | None, method: str, inner: str | None, fmt: str, strategy: str) -> None:
    """Compute the E table of FILE (or of T_2 x INNER) by METHOD."""
    if method == "bruteforce":
        if file is None:
            raise CliExit(EXIT_INVALID, "bruteforce needs a kernel FILE")
        table = pb_bruteforce(load_kernel(file), strategy=strategy)
    else:
        if inner is not None:
            base = load_table_or_kernel(inner)
        elif file is not None:
            comp = t2_factor(load_kernel(file))
            if comp is None:
                raise CliExit(EXIT_INVALID, f"{file} is not of the form T_2 x T_l; pass --inner")
            base = pb_bruteforce(comp, strategy=strategy)
        else:
            raise CliExit(EXIT_INVALID, f"method {method} needs a T_2 x T_l kernel FILE or --inner")
        if method == "paper":
            table = pb_product_closed_form(base)
        elif method == "truth":
            table = pb_product_truth(base)
        else:
            table = pb_product_composition(ARIKAN_TABLE, base)
    if fmt == "csv":
        click.echo(etable_to_csv(table), nl=False)
        doc = etable_to_dict(table)
        click.echo(f"source={doc['source']} conservation={doc['conservation']}", err=True)
    else:
        _emit(etable_to_dict(table))


@cli.command("mu")
@click.option("--pb", "pb_ref", required=True, help="Table JSON/CSV file or embedded table name.")
@click.option("--grid", type=int, help="Grid points on [0, 1].")
@click.option("--max-iters", type=int)
@handle_errors
def mu_cmd(pb_ref: str, grid: int | None, max_iters: int | None) -> None:
    """Scaling exponent of a polarization behaviour."""
    cfg = _config(grid, max_iters)
    est = solve_mu(load_table(pb_ref), cfg)
    _emit(est.to_dict(cfg))
    if not est.converged:
        sys.exit(EXIT_NONCONVERGED)


@cli.command("pd")
@click.argument("file")
@handle_errors
def pd_cmd(file: str) -> None:
    """Partial distances of a kernel (1-based labels)."""
    _emit(partial_distances(load_kernel(file)).to_dict())


@cli.command("selfdual")
@click.argument("file")
@handle_errors
def selfdual_cmd(file: str) -> None:
    """Self-duality check with a witness on failure."""
    k = load_kernel(file)
    _emit(is_self_dual(k).to_dict(k.size))


@cli.command("product")
@click.option("--outer", required=True, help="Outer kernel file, or 'T2'.")
@click.option("--inner", required=True, help="Inner kernel file.")
@click.option("--inner-table", help="Seed table for the table-driven paths (file or embedded name).")
@click.option("--method", "methods", multiple=True,
              type=click.Choice(["brute-force", "product-truth", "composition", "paper-method"]))
@click.option("--grid", type=int)
@handle_errors
def product_cmd(outer: str, inner: str, inner_table: str | None, methods: tuple[str, ...], grid: int | None) -> None:
    """Evaluate outer x inner along every table path and compare."""
    outer_k = ARIKAN if outer.upper() in ("T2", "T_2") else load_kernel(outer)
    seed = load_table(inner_table) if inner_table else None
    kw: dict[str, Any] = {"cfg": _config(grid, None), "inner_table": seed}
    if methods:
        kw["methods"] = methods
    bundle = evaluate_product(outer_k, load_kernel(inner), **kw)
    _emit(bundle.to_dict())


@cli.group()
def search() -> None:
    """Kernel design heuristics."""


@search.command("delete")
@click.option("--base", required=True, help="Base kernel file.")
@click.option("--row", required=True, type=int, help="0-based row to delete.")
@click.option("--method", type=click.Choice(["brute-force", "paper-eq6eq7"]), default="brute-force")
@click.option("--grid", type=int)
@handle_errors
def search_delete(base: str, row: int, method: str, grid: int | None) -> None:
    """Delete ROW and each column in turn; rank valid kernels by exponent."""
    result = delete_search(load_kernel(base), row, method, _config(grid, None))
    _emit(result.to_dict())


@cli.command("compare")
@click.argument("a")
@click.argument("b")
@handle_errors
def compare_cmd(a: str, b: str) -> None:
    """Cell-by-cell comparison of two tables (files or embedded names)."""
    _emit(compare_tables(load_table(a), load_table(b)).to_dict())


@cli.command("mc")
@click.option("--kernel", "kernel_file", required=True)
@click.option("--z", type=float, required=True)
@click.option("--samples", type=int, default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@handle_errors
def mc_cmd(kernel_file: str, z: float, samples: int, seed: int) -> None:
    """Monte Carlo estimate of every channel's erasure probability."""
    _emit(monte_carlo_pb(load_kernel(kernel_file), z, samples, seed).to_dict())


@cli.command("reproduce-paper")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="reproduction", show_default=True)
@click.option("--literature", type=click.Path(exists=True, dir_okay=False),
              help="CSV (L,mu,source) of cited values to pass through into fig3.csv.")
@click.option("--grid", type=int)
@handle_errors
def reproduce_cmd(out_dir: str, literature: str | None, grid: int | None) -> None:
    """Regenerate tables, exponents, discrepancy ledger and plot data."""
    from .report import read_literature, reproduce, write_report

    lit = read_literature(Path(literature).read_text(encoding="utf-8")) if literature else []
    rep = reproduce(_config(grid, None), lit)
    write_report(rep, Path(out_dir))
    for c in rep.checks:
        click.echo(c.line())
    failures = rep.failures()
    if failures:
        click.echo(f"{len(failures)} check(s) failed; see {out_dir}/discrepancies.json", err=True)
        sys.exit(EXIT_INVALID)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
