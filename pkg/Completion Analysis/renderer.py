import json
import logging
import os
from abc import ABC, abstractmethod

logger = logging.getLogger(__name__)


class JSONRenderer(ABC):

    def __init__(self, subject):
        self.subject = subject

    @abstractmethod
    def render(self):
        pass

    def render_text(self):
        return json.dumps(self.render(), indent=2)


def _field_json(field):
    return field.to_json()


def _hom_json(factors):
    return [factor.to_json() for factor in factors]


class PolyMatrixJSONRenderer(JSONRenderer):

    def render(self):
        matrix = self.subject
        return {
            "field": _field_json(matrix.field),
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": [[entry.to_json() for entry in row] for row in matrix.entries],
        }


class EigenstructureJSONRenderer(JSONRenderer):

    def render(self):
        structure = self.subject
        m, n = structure.dims
        return {
            "field": _field_json(structure.field),
            "rows": m,
            "cols": n,
            "degree": structure.degree,
            "rank": structure.rank,
            "hom_factors": _hom_json(structure.hom_factors),
            "col_indices": list(structure.col_indices),
            "row_indices": list(structure.row_indices),
        }


class CompletionTargetJSONRenderer(JSONRenderer):
    """Prescribed fields only."""

    def render(self):
        target = self.subject
        output = {"z": target.z, "rank": target.rank}
        if target.field is not None:
            output["field"] = _field_json(target.field)
        if target.hom_factors is not None:
            output["hom_factors"] = _hom_json(target.hom_factors)
        if target.finite_factors is not None:
            output["finite_factors"] = [beta.to_json() for beta in target.finite_factors]
        if target.infinite_multiplicities is not None:
            output["infinite_multiplicities"] = list(target.infinite_multiplicities)
        if target.col_indices is not None:
            output["col_indices"] = list(target.col_indices)
        if target.row_indices is not None:
            output["row_indices"] = list(target.row_indices)
        return output


class FeasibilityReportJSONRenderer(JSONRenderer):

    def render(self):
        report = self.subject
        return {
            "theorem": report.theorem,
            "feasible": report.feasible,
            "violations": list(report.violations),
            "evaluated": list(report.evaluated),
            "z": report.z,
            "x": report.x,
            "witness": {key: _witness_value(value) for key, value in sorted(report.witness.items())},
        }


def _witness_value(value):
    return list(value) if isinstance(value, tuple) else value


class SearchResultJSONRenderer(JSONRenderer):
    """{"status": ..., "matrix": ...} for realize runs."""

    def __init__(self, subject, status, violations=()):
        super(SearchResultJSONRenderer, self).__init__(subject)
        self.status = status
        self.violations = violations

    def render(self):
        output = {"status": self.status}
        if self.subject is not None:
            output["matrix"] = PolyMatrixJSONRenderer(self.subject).render()
        if self.violations:
            output["violations"] = list(self.violations)
        return output


class OracleReportJSONRenderer(JSONRenderer):

    def __init__(self, subject, max_mismatches):
        super(OracleReportJSONRenderer, self).__init__(subject)
        self.max_mismatches = max_mismatches

    def render(self):
        report = self.subject
        mismatches = report.mismatches().head(self.max_mismatches)
        return {
            "grid": str(report.grid),
            "matrices": report.matrix_count,
            "instances": len(report.table),
            "mismatch_count": report.mismatch_count,
            "per_theorem": {theorem: int(count) for theorem, count in report.per_theorem().items()},
            "achieved_infeasible": report.achieved_infeasible,
            "mismatches": [
                {"matrix": json.loads(row.matrix), "theorem": row.theorem, "target": json.loads(row.target),
                 "expected": bool(row.expected), "verdict": bool(row.verdict)}
                for row in mismatches.itertuples()
            ],
        }


class OracleCSVRenderer:

    def __init__(self, report, output_directory, file_name):
        self.report = report
        self.output_file_path = "{output_directory}/{output_file_name}".format(
            output_directory=output_directory,
            output_file_name=file_name
        )
        os.makedirs(os.path.dirname(self.output_file_path), exist_ok=True)

    def render(self):
        logger.info("     Render Result: %s", self.output_file_path)
        self.report.table.to_csv(self.output_file_path, index=False, encoding="utf-8")
        return self.output_file_path
