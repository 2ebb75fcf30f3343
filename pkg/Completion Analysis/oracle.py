"""Checker verdicts against exhaustive completion search over small finite fields."""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import pandas as pd
import regex as re

from algebra import FieldTag, Poly
from errors import ParseError
from feasibility import CompletionTarget, check_existence, run_checker
from polymatrix import PolyMatrix, companion_transform, degree_of, eigenstructure
from realize import SearchBudget, enumerate_completions, enumerate_targets, pencil_completion_structures
from renderer import CompletionTargetJSONRenderer, PolyMatrixJSONRenderer

logger = logging.getLogger(__name__)

_GRID_PATTERN = re.compile(
    r"^\s*(?P<field>\S+)(?:\s+(?P<key>[mnzd])\s*=\s*(?P<value>\d+))+\s*$"
)

ORACLE_THEOREMS = ("full", "pencil", "hom+cols", "hom+rows", "hom", "finite", "infinite")
TABLE_COLUMNS = ["matrix", "theorem", "target", "expected", "verdict", "mismatch"]


@dataclass(frozen=True)
class GridSpec:
    field: FieldTag
    m: int
    n: int
    z: int
    d: int

    @classmethod
    def parse(cls, text):
        match = _GRID_PATTERN.match(text)
        if match is None:
            raise ParseError("malformed grid spec {!r}, expected e.g. 'gf2 m=1 n=1 z=1 d=1'".format(text))
        values = {}
        for key, value in zip(match.captures("key"), match.captures("value")):
            if key in values:
                raise ParseError("grid spec repeats '{}'".format(key))
            values[key] = int(value)
        missing = [key for key in "mnzd" if key not in values]
        if missing:
            raise ParseError("grid spec is missing {}".format(", ".join(missing)))
        field = FieldTag.parse(match.group("field"))
        if field.is_rational:
            raise ParseError("oracle grids need a finite field, got {}".format(field))
        if values["m"] < 1 or values["n"] < 1 or values["d"] < 1:
            raise ParseError("grid needs m, n, d >= 1")
        return cls(field, values["m"], values["n"], values["z"], values["d"])

    def matrix_count(self):
        p, cells = self.field.characteristic, self.m * self.n
        return p ** (cells * (self.d + 1)) - p ** (cells * self.d)

    def completion_count(self):
        return self.field.characteristic ** (self.z * self.n * (self.d + 1))

    def pencil_count(self):
        return self.field.characteristic ** (self.z * self.d * self.n * 2)

    def matrices(self):
        """Every m x n matrix of exact degree d, in lexicographic coefficient order."""
        width = self.d + 1
        for vector in product(list(self.field.elements()), repeat=self.m * self.n * width):
            P = PolyMatrix.from_rows(
                [[Poly(tuple(vector[(i * self.n + j) * width:(i * self.n + j + 1) * width]), self.field)
                  for j in range(self.n)] for i in range(self.m)],
                self.field, cols=self.n)
            if not P.is_zero and degree_of(P) == self.d:
                yield P

    def __str__(self):
        return "{} m={} n={} z={} d={}".format(self.field, self.m, self.n, self.z, self.d)


@dataclass
class OracleReport:
    grid: GridSpec
    table: pd.DataFrame
    matrix_count: int
    achieved_infeasible: int
    linearization_mismatches: int

    def mismatches(self):
        return self.table[self.table["mismatch"]]

    def per_theorem(self):
        return self.table.groupby("theorem")["mismatch"].sum()

    @property
    def mismatch_count(self):
        return int(self.table["mismatch"].sum()) + self.linearization_mismatches + self.achieved_infeasible


def theorems_for(d):
    return tuple(theorem for theorem in ORACLE_THEOREMS if theorem != "pencil" or d == 1)


def linearization_agrees(P, z, budget):
    """Completions of P and pencil completions of its companion form reach matching eigenstructures."""
    achieved = frozenset(companion_transform(E) for E in enumerate_completions(P, z, degree_of(P), budget))
    return achieved == pencil_completion_structures(P, z, budget)


@dataclass(frozen=True)
class _MatrixTask:
    P: PolyMatrix
    grid: GridSpec
    candidates: tuple
    linearization: bool


def _matrix_outcome(task):
    P, grid = task.P, task.grid
    budget = SearchBudget(grid.field, max(grid.completion_count(), grid.pencil_count()))
    p_inv = eigenstructure(P)
    achieved = enumerate_completions(P, grid.z, grid.d, budget)
    achieved_targets = [CompletionTarget.from_eigenstructure(E, grid.z) for E in achieved]
    achieved_infeasible = sum(1 for E in achieved if not check_existence(E).feasible)
    matrix_text = PolyMatrixJSONRenderer(P).render_text()
    rows = []
    for theorem in theorems_for(grid.d):
        reachable = {target.project(theorem) for target in achieved_targets}
        projections = {}
        for E in task.candidates:
            projected = CompletionTarget.from_eigenstructure(E, grid.z).project(theorem)
            projections.setdefault(projected, None)
        for projected in projections:
            expected = projected in reachable
            verdict = run_checker(theorem, p_inv, projected).feasible
            rows.append((matrix_text, theorem, CompletionTargetJSONRenderer(projected).render_text(),
                         expected, verdict, expected != verdict))
    linearization_failed = task.linearization and not linearization_agrees(P, grid.z, budget)
    return rows, achieved_infeasible, int(linearization_failed)


def run_oracle(grid, max_candidates, jobs=1, linearization=True):
    """Compare every checker with the exhaustive search on every matrix of the grid."""
    budget = SearchBudget(grid.field, max_candidates, jobs)
    per_matrix = grid.completion_count() + (grid.pencil_count() if linearization else 0)
    budget.require(grid.matrix_count() * per_matrix)
    logger.info("Run Oracle: '%s' (%d matrices)", grid, grid.matrix_count())
    candidates = tuple(enumerate_targets(grid.m + grid.z, grid.n, grid.d, grid.field))
    tasks = [_MatrixTask(P, grid, candidates, linearization) for P in grid.matrices()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_matrix_outcome, tasks))
    else:
        outcomes = [_matrix_outcome(task) for task in tasks]
    table = pd.DataFrame([row for rows, _, _ in outcomes for row in rows], columns=TABLE_COLUMNS)
    table = table.astype({"expected": bool, "verdict": bool, "mismatch": bool})
    report = OracleReport(
        grid=grid,
        table=table,
        matrix_count=len(tasks),
        achieved_infeasible=sum(count for _, count, _ in outcomes),
        linearization_mismatches=sum(count for _, _, count in outcomes),
    )
    logger.info("     %d instances, %d mismatches", len(table), report.mismatch_count)
    return report
