"""Unit tests for the centrality CSV export."""

import csv
import io

import pytest

from cipnet.centrality import centrality_table, centrality_table_to_csv
from cipnet.centrality.exporters import format_value

pytestmark = pytest.mark.unit


class TestCentralityCsv:
    def test_header_and_metric_rows(self, example_graph):
        text = centrality_table_to_csv(centrality_table(example_graph))
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["metric", *example_graph.labels]
        assert [row[0] for row in rows[1:]] == ["DEG", "EVC", "BWC", "CLC"]

    def test_degree_row_is_integral_and_bwc_rounded(self, example_graph):
        text = centrality_table_to_csv(centrality_table(example_graph))
        rows = {row[0]: row[1:] for row in csv.reader(io.StringIO(text))}
        assert rows["DEG"][0] == "5"
        assert rows["BWC"][example_graph.index_of("7")] == "9.5000"
        assert rows["CLC"][0] == "0.0667"

    def test_full_precision(self, example_graph):
        text = centrality_table_to_csv(centrality_table(example_graph), decimals=None)
        rows = {row[0]: row[1:] for row in csv.reader(io.StringIO(text))}
        assert float(rows["CLC"][0]) == pytest.approx(1 / 15, abs=1e-15)


class TestFormatValue:
    def test_rounds_to_decimals(self):
        assert format_value(0.123456, 4) == "0.1235"

    def test_none_keeps_repr(self):
        assert format_value(0.1, None) == "0.1"
