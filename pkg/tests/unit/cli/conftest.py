import pytest

from cipnet.cip import AnalysisResult, CipAnalysisService


@pytest.fixture()
def example_result(example_graph) -> AnalysisResult:
    return CipAnalysisService().analyze(example_graph)
