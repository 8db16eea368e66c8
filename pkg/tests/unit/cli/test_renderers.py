"""Unit tests for report rendering."""

import csv
import io
import json

import pytest

from cipnet.cli.renderers import (
    RECORD_COLUMNS,
    SUMMARY_COLUMNS,
    render_centrality,
    render_records,
    render_report,
)

pytestmark = pytest.mark.unit


class TestRenderReport:
    def test_json(self, example_result):
        payload = json.loads(render_report(example_result.report, "json"))
        assert payload["n"] == 10
        assert payload["m"] == 16
        assert payload["tuple"] == [0.3, 0.2, 0.5]
        assert payload["classification"] == "Peripheral-heavy"
        assert len(payload["records"]) == 10
        assert list(payload["records"][0]) == list(RECORD_COLUMNS)
        assert payload["records"][0]["rank"] == 1

    def test_json_rounds_for_display(self, example_result):
        payload = json.loads(render_report(example_result.report, "json", decimals=2))
        for record in payload["records"]:
            assert record["evc"] == round(record["evc"], 2)

    def test_full_precision(self, example_result):
        payload = json.loads(render_report(example_result.report, "json", None))
        first = example_result.report.records[0]
        assert payload["records"][0]["cip_deg"] == first.angle_deg

    def test_csv_sections(self, example_result):
        text = render_report(example_result.report, "csv")
        network, records = text.split("# records\n")
        assert network.startswith("# network\n")
        summary = list(csv.DictReader(io.StringIO(network.split("\n", 1)[1])))
        assert list(summary[0]) == list(SUMMARY_COLUMNS)
        assert summary[0]["classification"] == "Peripheral-heavy"
        assert summary[0]["single_factor"] == "false"
        rows = list(csv.DictReader(io.StringIO(records)))
        assert len(rows) == 10
        assert {row["class"] for row in rows} == {"Core", "Intermediate", "Peripheral"}

    def test_table(self, example_result):
        text = render_report(example_result.report, "table")
        assert "classification: Peripheral-heavy" in text
        header = next(line for line in text.splitlines() if "cip_deg" in line)
        assert header.split() == list(RECORD_COLUMNS)


class TestRenderRecords:
    def test_csv_rank_order(self, example_result):
        text = render_records(example_result.report.records, "csv")
        ranks = [row["rank"] for row in csv.DictReader(io.StringIO(text))]
        assert ranks == [str(i) for i in range(1, 11)]


class TestRenderCentrality:
    def test_json(self, example_result):
        payload = json.loads(render_centrality(example_result.table, "json"))
        degrees = dict(zip(payload["labels"], payload["DEG"]))
        in_label_order = [degrees[str(i)] for i in range(1, 11)]
        assert in_label_order == [5, 3, 3, 3, 4, 3, 4, 3, 2, 2]
        assert payload["BWC"][:2] == [21.0, 20.0]

    def test_table_has_one_row_per_metric(self, example_result):
        lines = render_centrality(example_result.table, "table").splitlines()
        assert [line.split()[0] for line in lines[2:]] == ["DEG", "EVC", "BWC", "CLC"]

    def test_csv(self, example_result):
        text = render_centrality(example_result.table, "csv")
        assert text.splitlines()[0] == "metric,1,2,3,5,6,9,7,4,8,10"
