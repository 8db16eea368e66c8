"""Audit dump of a factor extraction as sectioned CSV.

Sections: correlation matrix, eigenvalues, initial / rotated / oriented
loadings and the composed 2 x 2 rotation.
"""

from __future__ import annotations

import csv
import io

from cipnet.factor.models import FactorSolution


def factor_audit_csv(solution: FactorSolution) -> str:
    labels = solution.correlation.labels
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    writer.writerow(["# correlation"])
    writer.writerow(["node", *labels])
    for label, row in zip(labels, solution.correlation.values):
        writer.writerow([label, *(repr(float(x)) for x in row)])

    writer.writerow(["# eigenvalues"])
    writer.writerow(["lambda1", "lambda2", "single_factor"])
    writer.writerow(
        [*(repr(float(x)) for x in solution.eigenvalues), solution.single_factor]
    )

    for stage in (solution.initial, solution.rotated, solution.oriented):
        writer.writerow([f"# {stage.stage} loadings"])
        writer.writerow(["node", "axis0", "axis1"])
        for label, (a, b) in zip(labels, stage.values):
            writer.writerow([label, repr(float(a)), repr(float(b))])

    writer.writerow(["# rotation"])
    for row in solution.oriented.rotation:
        writer.writerow([repr(float(x)) for x in row])
    return buffer.getvalue()
