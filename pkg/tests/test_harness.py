import csv
import io
import json
from fractions import Fraction

import pytest

from circlepi.errors import DomainError
from circlepi.exactnum import evaluate
from circlepi.harness import (
    CATALOG_FIELDS,
    Tradition,
    catalog_csv,
    catalog_json,
    percent,
    pi_catalog,
    scan_csv,
    segment_error_scan,
    sine_error_scan,
    sqrt2_catalog,
    sulva_round_trip,
)


@pytest.fixture(scope="module")
def catalog():
    return pi_catalog(15)


def by_id(rows):
    return {r.method_id: r for r in rows}


def test_catalog_rows(catalog):
    ids = set(by_id(catalog))
    assert {
        "vedic", "manava_circumference", "baudhayana_circling", "manava_circling",
        "maitrayaniya_circling", "baudhayana_squaring", "jaina_sqrt10", "virasena",
        "aryabhata", "madhava", "madhava_corrected_50",
    } <= ids
    external = {r.method_id for r in catalog if r.tradition is Tradition.EXTERNAL}
    assert external == {"ptolemy", "egyptian", "zu_chongzhi"}
    assert len(catalog) - len(external) >= 11


def test_catalog_sorted_by_error_magnitude(catalog):
    keys = [(-abs(r.rel_error.center), r.method_id) for r in catalog]
    # rounded errors may tie; the row order was fixed at full precision
    assert [k[0] for k in keys] == sorted(k[0] for k in keys)
    assert catalog[0].method_id == "vedic"
    ties = [r.method_id for r in catalog if r.exact_form == Fraction(256, 81)]
    assert ties == ["egyptian", "maitrayaniya_circling"]


def test_catalog_values(catalog):
    rows = by_id(catalog)
    assert percent(rows["jaina_sqrt10"].rel_error) == "+0.6584%"
    assert percent(rows["vedic"].rel_error) == "-4.5070%"
    assert rows["madhava"].digits_correct == 11
    assert rows["virasena"].digits_correct == 6
    assert str(rows["aryabhata"].value) == "3.141600000000000"
    assert rows["baudhayana_circling"].exact_text() == "54-36*sqrt(2)"
    assert rows["baudhayana_circling"].exact_text(unicode=True) == "54-36√2"


def test_values_survive_re_evaluation(catalog):
    for r in catalog:
        finer = evaluate(r.exact_form, 40)
        assert finer.certified_round(15) == r.value.mantissa
        assert r.value == evaluate(r.exact_form, 15)


def test_low_precision_still_sorted():
    rows = pi_catalog(1)
    assert rows[0].method_id == "vedic"
    assert rows[-1].method_id in ("madhava", "madhava_corrected_50")
    assert {str(r.value) for r in rows} <= {"3.0", "3.1", "3.2"}


def test_digit_cap():
    with pytest.raises(DomainError):
        pi_catalog(51)
    with pytest.raises(DomainError):
        pi_catalog(0)


def test_csv_and_json(catalog):
    text = catalog_csv(catalog)
    assert text.startswith(",".join(CATALOG_FIELDS) + "\n")
    assert "\r" not in text and "√" not in text
    assert text == catalog_csv(pi_catalog(15))
    rows = list(csv.DictReader(io.StringIO(text)))
    data = json.loads(catalog_json(catalog))
    assert [list(d) for d in data] == [list(CATALOG_FIELDS)] * len(catalog)
    assert [d["method_id"] for d in data] == [r["method_id"] for r in rows]
    assert [str(d["digits_correct"]) for d in data] == [r["digits_correct"] for r in rows]


def test_sqrt2_catalog():
    rows = by_id(sqrt2_catalog(7))
    assert str(rows["sulva_sqrt2"].value) == "1.4142157"
    assert str(rows["babylonian_sqrt2"].value) == "1.4142130"
    assert rows["babylonian_sqrt2"].tradition is Tradition.EXTERNAL
    assert rows["babylonian_sqrt2"].rel_error.mantissa < 0 < rows["sulva_sqrt2"].rel_error.mantissa


def test_round_trip_errors_opposite():
    circling, squaring = sulva_round_trip()
    assert circling.mantissa > 0 > squaring.mantissa
    assert abs(abs(circling.center) - abs(squaring.center)) < Fraction(1, 1000)


def test_segment_scan_values():
    mahavira = {r.theta: r for r in segment_error_scan("mahavira_area", [90, 180])}
    assert percent(mahavira[180].rel_error, 3) == "+0.658%"
    assert abs(mahavira[90].rel_error.center - Fraction(147, 1000)) < Fraction(2, 1000)
    sridhara = segment_error_scan("sridhara_area", [90])[0]
    assert abs(sridhara.rel_error.center + Fraction(77, 1000)) < Fraction(2, 1000)
    b2 = segment_error_scan("bhaskara2_arc", [60, 180])
    assert all(r.rel_error.mantissa == 0 for r in b2)


def test_jaina_arc_improves_for_small_arcs():
    rows = segment_error_scan("jaina_arc", [1, 10, 45, 90, 135])
    errors = [abs(r.rel_error.center) for r in rows]
    assert errors == sorted(errors)


def test_scan_argument_checks():
    with pytest.raises(DomainError):
        segment_error_scan("jaina_arc", [])
    with pytest.raises(DomainError):
        segment_error_scan("jaina_arc", [0])
    with pytest.raises(DomainError):
        segment_error_scan("jaina_arc", [181])
    with pytest.raises(ValueError):
        segment_error_scan("archimedes", [10])
    with pytest.raises(DomainError):
        sine_error_scan([])


def test_scan_csv_deterministic():
    a = scan_csv(segment_error_scan("sridhara_area", range(10, 181, 10)))
    b = scan_csv(segment_error_scan("sridhara_area", range(10, 181, 10)))
    assert a == b and a.startswith("theta,value,oracle,rel_error\n")


def test_sine_scan():
    scan = sine_error_scan(range(0, 181))
    rows = {r.theta: r for r in scan.rows}
    assert rows[90].bhaskara_error.mantissa == 0 and rows[90].table_error.mantissa == 0
    assert rows[0].bhaskara_error is None and rows[180].table is None
    assert abs(rows[5].bhaskara_error.center - Fraction(135, 10**4)) < Fraction(1, 10**4)
    inner = sine_error_scan(range(10, 171))
    assert abs(inner.max_bhaskara_error.center) < Fraction(1, 100)
    summary = scan.summary_record()
    assert summary["theta"] == "max"
    assert scan.to_csv().splitlines()[-1].startswith("max,")
