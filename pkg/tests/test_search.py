from __future__ import annotations

import math
import os
from pathlib import Path

import pytest

from polarkron import paperdata as pd
from polarkron.kernel import ARIKAN, Kernel, parse_kernel
from polarkron.polarization import pb_bruteforce, pb_product_closed_form
from polarkron.scaling import SolverConfig
from polarkron.search import delete_search, evaluate_product, rank_rows_by_polarization

FAST = SolverConfig(grid_points=4097)


def test_rank_rows():
    order = rank_rows_by_polarization(pd.TABLE_I)
    assert sorted(order) == list(range(5))
    # channel 2 sits closest to 1/2 at z = 1/2 and is ranked last
    assert order[-1] == 2


def test_delete_search_t5():
    res = delete_search(pd.T5, 2, cfg=FAST)
    assert len(res.candidates) == 5
    for c in res.candidates:
        assert c.valid == c.kernel.polarizing
        if c.valid:
            assert c.mu is not None and math.isfinite(c.mu)
        else:
            assert c.mu is None
    assert [c.col for c in res.candidates if c.valid] == [2, 4]
    assert res.best in (2, 4)
    doc = res.to_dict()
    assert set(doc) >= {"base", "row", "candidates", "best"}


def test_delete_search_deterministic():
    a = delete_search(pd.T7, 3, cfg=FAST).to_dict()
    b = delete_search(pd.T7, 3, cfg=FAST).to_dict()
    assert a == b


def test_delete_search_closed_form_method():
    res = delete_search(pd.T7, 3, "paper-eq6eq7", FAST)
    assert res.method == "paper-eq6eq7"
    assert all(c.mu is not None for c in res.candidates if c.valid)


def test_delete_search_guards():
    with pytest.raises(ValueError):
        delete_search(ARIKAN, 0)
    with pytest.raises(ValueError):
        delete_search(Kernel.from_rows(["100", "010", "001"]), 0)
    with pytest.raises(IndexError):
        delete_search(pd.T5, 5)
    with pytest.raises(ValueError):
        delete_search(pd.T5, 0, "magic")


def test_evaluate_product_ground_truth(t2):
    bundle = evaluate_product(t2, t2, cfg=FAST)
    assert bundle.tables["brute-force"].rows() == [
        [0, 4, 6, 4, 1], [0, 0, 4, 4, 1], [0, 0, 2, 4, 1], [0, 0, 0, 0, 1],
    ]
    assert bundle.comparisons["product-truth~brute-force"].identical
    assert bundle.comparisons["composition~brute-force"].identical
    assert all(v is not None for v in bundle.mu_values().values())


def test_evaluate_product_lower_halves_agree(t5):
    bundle = evaluate_product(ARIKAN, t5, methods=("brute-force", "paper-method"), cfg=FAST)
    assert bundle.tables["paper-method"].rows()[5:] == bundle.tables["brute-force"].rows()[5:]


def test_evaluate_product_seeded_by_printed_table(t5):
    bundle = evaluate_product(
        ARIKAN, t5, methods=("paper-method",), cfg=FAST, inner_table=pd.TABLE_I
    )
    assert bundle.tables["paper-method"] == pb_product_closed_form(pd.TABLE_I)
    assert bundle.comparisons == {}


def test_evaluate_product_guards(t3, t5):
    with pytest.raises(ValueError):
        evaluate_product(t3, t5, methods=("paper-method",), cfg=FAST)
    with pytest.raises(ValueError):
        evaluate_product(ARIKAN, Kernel.from_rows(["11", "11"]), cfg=FAST)


def test_evaluate_product_general_outer(t3):
    bundle = evaluate_product(t3, ARIKAN, methods=("brute-force", "composition"), cfg=FAST)
    assert bundle.comparisons["composition~brute-force"].identical


BASE8 = os.environ.get("POLARKRON_BASE8")


@pytest.mark.skipif(not BASE8, reason="set POLARKRON_BASE8 to an 8x8 kernel file")
def test_deletion_sweep_fixture():
    base = parse_kernel(Path(BASE8).read_text())
    res = delete_search(base, 3, "brute-force")
    assert not res.candidates[0].valid
    got = [c.mu for c in res.candidates[1:]]
    assert got == pytest.approx(list(pd.DELETION_SWEEP), abs=0.015)
