"""CIP analysis service.

Composes the whole pipeline for one graph:

1. Optionally restrict to the largest connected component.
2. Spectral radius ratio ``lambda_sp``.
3. Centrality table (DEG, EVC, BWC, CLC).
4. Two-factor extraction: correlation, eigenpairs, varimax, orientation.
5. Per-node CIP angle, bin and class, plus k-core and coreness.
6. Bins-fraction tuple, network label, ranking, k-core comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import structlog

from cipnet.centrality.models import CentralityTable
from cipnet.centrality.services import centrality_table
from cipnet.cip.comparison import compare_with_kcore
from cipnet.cip.dtos import CipRecord, NetworkReport
from cipnet.cip.indexing import bin_of, cip_index, classify_node, is_quadrant_reflected
from cipnet.cip.kcore import coreness, k_core
from cipnet.cip.summary import bins_fraction_tuple, classify_network, rank_nodes
from cipnet.config import settings
from cipnet.factor.models import FactorSolution
from cipnet.factor.services import extract_factors
from cipnet.graphs.models import Graph
from cipnet.graphs.spectral import spectral_radius_ratio
from cipnet.graphs.traversal import largest_component as extract_largest_component

logger = structlog.get_logger(__name__)


@dataclass(frozen=True, eq=False)
class AnalysisResult:
    graph: Graph
    table: CentralityTable
    factors: FactorSolution
    report: NetworkReport


def build_records(
    g: Graph, table: CentralityTable, factors: FactorSolution
) -> list[CipRecord]:
    """One unranked record per node, in graph order.

    Raises:
        ZeroLoadings: a node has zero oriented loadings.
    """
    cores = k_core(g)
    core_sums = coreness(g, cores)
    records = []
    for v, label in enumerate(g.labels):
        p_load, c_load = (float(x) for x in factors.oriented.values[v])
        angle = cip_index(p_load, c_load)
        bin_label = bin_of(angle)
        records.append(
            CipRecord(
                node=label,
                deg=int(table.deg[v]),
                evc=float(table.evc[v]),
                bwc=float(table.bwc[v]),
                clc=float(table.clc[v]),
                k_core=int(cores[v]),
                coreness=int(core_sums[v]),
                p_load=p_load,
                c_load=c_load,
                angle_deg=angle,
                bin=bin_label,
                node_class=classify_node(bin_label),
                quadrant_reflected=is_quadrant_reflected(p_load, c_load),
            )
        )
    return records


class CipAnalysisService:
    """Runs the CIP pipeline with a fixed set of numeric options."""

    def __init__(
        self,
        tol: float = settings.POWER_ITERATION_TOL,
        max_iter: int = settings.POWER_ITERATION_MAX_ITER,
        kaiser: bool = settings.KAISER_NORMALIZATION,
        solver: str = settings.EIGEN_SOLVER,
        workers: int = settings.BETWEENNESS_WORKERS,
        largest_component: bool = False,
    ) -> None:
        self._tol = tol
        self._max_iter = max_iter
        self._kaiser = kaiser
        self._solver = solver
        self._workers = workers
        self._largest_component = largest_component

    def prepare(self, g: Graph) -> Graph:
        return extract_largest_component(g) if self._largest_component else g

    def metrics(self, g: Graph) -> CentralityTable:
        return centrality_table(
            self.prepare(g),
            tol=self._tol,
            max_iter=self._max_iter,
            workers=self._workers,
        )

    def analyze(self, g: Graph) -> AnalysisResult:
        """Raises:
        DisconnectedGraph: ``g`` is disconnected and no component was chosen.
        TooFewNodes, DegenerateColumn, ZeroLoadings: domain violations.
        SpectralRadiusNotConverged, EigenvectorNotConverged,
        EigensolverNotConverged: iterative kernels did not settle.
        AmbiguousOrientation, DegenerateSecondFactor: axes not identifiable.
        """
        g = self.prepare(g)
        log = logger.bind(n=g.n, m=g.m)
        lambda_sp = spectral_radius_ratio(g, tol=self._tol, max_iter=self._max_iter)
        table = centrality_table(
            g, tol=self._tol, max_iter=self._max_iter, workers=self._workers
        )
        factors = extract_factors(table, kaiser=self._kaiser, solver=self._solver)
        records = build_records(g, table, factors)
        fractions = bins_fraction_tuple(records)
        classification = classify_network(fractions)
        report = NetworkReport(
            n=g.n,
            m=g.m,
            lambda_sp=lambda_sp,
            fractions=fractions,
            classification=classification,
            records=rank_nodes(records),
            quadrant_reflected_count=sum(r.quadrant_reflected for r in records),
            single_factor=factors.single_factor,
            kaiser=self._kaiser,
            kcore=compare_with_kcore(records),
        )
        log.info(
            "cip.report_built",
            lambda_sp=lambda_sp,
            tuple=fractions.as_list(),
            classification=classification,
            quadrant_reflected=report.quadrant_reflected_count,
        )
        return AnalysisResult(graph=g, table=table, factors=factors, report=report)
