from __future__ import annotations

import json

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarkron import paperdata as pd
from polarkron.errors import DimensionError, IntegrityError
from polarkron.etable import (
    ETABLE_SCHEMA,
    ETable,
    PolyPB,
    compare_tables,
    conservation_check,
    conservation_violations,
    etable_from_csv,
    etable_from_dict,
    etable_from_json,
    etable_from_poly,
    etable_to_csv,
    etable_to_dict,
    etable_to_json,
    etable_to_poly,
    poly_compose,
)
from polarkron.kernel import enumerate_polarizing
from polarkron.polarization import pb_bruteforce, pb_product_truth


def test_shape_and_bounds_validation():
    with pytest.raises(DimensionError):
        ETable.from_rows([[0, 1, 1]], "brute-force")
    with pytest.raises(IntegrityError):
        ETable.from_rows([[0, 3, 1], [0, 0, 1]], "brute-force")


def test_conservation_examples():
    assert conservation_check(pd.TABLE_I)
    assert sum(pd.TABLE_I[i, 2] for i in range(5)) == 20
    assert not conservation_check(pd.TABLE_III)
    assert (1, 6, 7) in conservation_violations(pd.TABLE_III)


def test_compare_identical():
    rep = compare_tables(pd.TABLE_I, pd.TABLE_I)
    assert rep.identical and rep.compared == 30


def test_compare_table_two_lower_half():
    truth = pb_product_truth(pd.TABLE_I)
    rep = compare_tables(pd.TABLE_II, truth, rows=range(5, 10))
    got = {(m.i, m.w): (m.a, m.b) for m in rep.mismatches}
    for cell, vals in {(5, 4): (90, 81), (6, 4): (66, 57), (7, 5): (24, 12), (7, 6): (44, 32)}.items():
        assert got[cell] == vals
    # the printed table also disagrees at (6,7), which breaks the w=7 column sum
    assert got[(6, 7)] == (106, 112)
    assert set(got) == {(5, 4), (6, 4), (7, 5), (7, 6), (6, 7)}


def test_compare_table_three(t7):
    rep = compare_tables(pd.TABLE_III, pb_bruteforce(t7))
    got = {(m.i, m.w): (m.a, m.b) for m in rep.mismatches}
    assert got[(2, 1)] == (0, 1)
    assert not rep.conservation_a and rep.conservation_b


def test_compare_size_mismatch():
    with pytest.raises(DimensionError):
        compare_tables(pd.TABLE_I, pd.TABLE_III)


def test_json_roundtrip_and_schema(t5):
    t = pb_bruteforce(t5)
    doc = json.loads(etable_to_json(t))
    jsonschema.validate(doc, ETABLE_SCHEMA)
    assert doc["conservation"] is True and doc["kernel"][0] == "10000"
    assert etable_from_json(etable_to_json(t)) == t


def test_json_rejects_bad_documents():
    with pytest.raises(jsonschema.ValidationError):
        etable_from_dict({"l": 2, "source": "x"})
    with pytest.raises(jsonschema.ValidationError):
        etable_from_dict({"l": 2, "source": "x", "E": [[0, -1, 1], [0, 0, 1]]})


def test_csv_roundtrip():
    text = etable_to_csv(pd.TABLE_IV)
    assert text.splitlines()[0] == "i,w,E"
    assert etable_from_csv(text).entries == pd.TABLE_IV.entries


def test_csv_bad_header():
    with pytest.raises(ValueError):
        etable_from_csv("a,b,c\n0,0,0\n")


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(enumerate_polarizing(3)))
def test_poly_roundtrip(k):
    t = pb_bruteforce(k)
    back = etable_from_poly(etable_to_poly(t), "brute-force")
    assert back.entries == t.entries
    assert etable_to_dict(etable_from_dict(etable_to_dict(t))) == etable_to_dict(t)


def test_from_poly_integrity_names_channel():
    with pytest.raises(IntegrityError, match="channel 1"):
        etable_from_poly(PolyPB(2, ((0, 2, -1), (0, -1, 0))))


def test_poly_compose():
    # (1 - z)^2 composed with z^2
    assert poly_compose([1, -2, 1], [0, 0, 1]) == [1, 0, -2, 0, 1]


def test_permuted_and_relabel():
    t = pd.TABLE_I.permuted([4, 3, 2, 1, 0])
    assert t.row(0) == pd.TABLE_I.row(4)
    assert pd.TABLE_I.relabel("brute-force").source == "brute-force"
