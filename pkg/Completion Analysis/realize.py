"""Kronecker blocks, low degree realization and the exhaustive search over GF(p)."""
import logging
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from algebra import HomogPoly, Poly
from errors import BudgetExceededError, DomainError, InconsistentTargetError, InternalInconsistencyError, ZeroMatrixError
from feasibility import check_existence
from polymatrix import (
    Eigenstructure,
    PolyMatrix,
    block_diagonal,
    companion_form,
    degree_of,
    eigenstructure,
    stack_rows,
)
from sequences import partitions

logger = logging.getLogger(__name__)


#------------------------------ Kronecker Blocks ----------------------------------

class KroneckerBlock(ABC):

    @abstractmethod
    def matrix(self, field):
        pass


@dataclass(frozen=True)
class CompanionBlock(KroneckerBlock):
    alpha: Poly

    def __post_init__(self):
        if not self.alpha.is_monic or self.alpha.degree < 1:
            raise InconsistentTargetError("companion block needs a monic polynomial of degree >= 1, got {}".format(
                self.alpha))

    def matrix(self, field):
        return companion_form(PolyMatrix.from_rows([[self.alpha]], field))


@dataclass(frozen=True)
class InfinityBlock(KroneckerBlock):
    """k x k, 1 on the diagonal and s on the superdiagonal."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InconsistentTargetError("infinity block needs k >= 1, got {}".format(self.k))

    def matrix(self, field):
        s = Poly.monomial(1, field)
        return PolyMatrix.from_rows(
            [[1 if j == i else (s if j == i + 1 else 0) for j in range(self.k)] for i in range(self.k)],
            field, cols=self.k)


@dataclass(frozen=True)
class ColumnSingularBlock(KroneckerBlock):
    """k x (k+1), s on the diagonal and 1 on the superdiagonal."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InconsistentTargetError("singular block needs k >= 0, got {}".format(self.k))

    def matrix(self, field):
        s = Poly.monomial(1, field)
        return PolyMatrix.from_rows(
            [[s if j == i else (1 if j == i + 1 else 0) for j in range(self.k + 1)] for i in range(self.k)],
            field, cols=self.k + 1)


@dataclass(frozen=True)
class RowSingularBlock(KroneckerBlock):
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InconsistentTargetError("singular block needs k >= 0, got {}".format(self.k))

    def matrix(self, field):
        return ColumnSingularBlock(self.k).matrix(field).transpose()


def kronecker_block(kind, field):
    return kind.matrix(field)


#------------------------------ Low Degree Realization ----------------------------------

def realization_blocks(target):
    """Blocks of diag(C, N, L, R) for a degree one target."""
    companions = [CompanionBlock(h.alpha) for h in target.hom_factors if h.alpha.degree >= 1]
    infinities = [InfinityBlock(h.e) for h in target.hom_factors if h.e >= 1]
    columns = [ColumnSingularBlock(k) for k in target.col_indices]
    rows = [RowSingularBlock(k) for k in target.row_indices]
    return companions + infinities + columns + rows


def realize_low_degree(target):
    if target.degree > 1:
        raise DomainError("low degree realization needs degree 0 or 1, got {}".format(target.degree))
    report = check_existence(target)
    if not report.feasible:
        raise DomainError("target is not the eigenstructure of any matrix: {}".format(", ".join(report.violations)))
    m, n = target.dims
    field = target.field
    if target.degree == 0:
        result = block_diagonal([PolyMatrix.identity(target.rank, field)], m, n, field)
    else:
        blocks = [kronecker_block(kind, field) for kind in realization_blocks(target)]
        result = block_diagonal(blocks, m, n, field)
        if degree_of(result) != 1:
            raise InternalInconsistencyError("blocks for {} did not produce a pencil".format(target))
    achieved = eigenstructure(result)
    if achieved != target:
        raise InternalInconsistencyError("realized {} but the target was {}".format(achieved, target))
    return result


#------------------------------ Search ----------------------------------

@dataclass(frozen=True)
class SearchBudget:
    field: object
    max_candidates: int
    jobs: int = 1

    def __post_init__(self):
        if self.field.is_rational:
            raise DomainError("exhaustive search needs a finite field, got {}".format(self.field))
        if self.max_candidates < 1 or self.jobs < 1:
            raise DomainError("budget and worker count must be positive")

    def candidate_count(self, rows, cols, max_deg):
        return self.field.characteristic ** (rows * cols * (max_deg + 1))

    def require(self, count):
        if count > self.max_candidates:
            raise BudgetExceededError(count, self.max_candidates)


@dataclass(frozen=True)
class StructureEquals:
    target: Eigenstructure

    def __call__(self, structure):
        return structure == self.target


@dataclass(frozen=True)
class TargetMatches:
    """Accepts structures agreeing with every prescribed field of a completion target."""

    target: object

    def __call__(self, structure):
        target = self.target
        checks = (
            (target.hom_factors, structure.hom_factors),
            (target.finite_factors, structure.alphas),
            (target.infinite_multiplicities, structure.es),
            (target.col_indices, structure.col_indices),
            (target.row_indices, structure.row_indices),
        )
        return structure.rank == target.rank and all(
            tuple(wanted) == tuple(got) for wanted, got in checks if wanted is not None)


def _matrix_from_vector(vector, rows, cols, max_deg, field):
    width = max_deg + 1
    return PolyMatrix.from_rows(
        [[Poly(tuple(vector[(i * cols + j) * width:(i * cols + j + 1) * width]), field) for j in range(cols)]
         for i in range(rows)],
        field, cols=cols)


@dataclass(frozen=True)
class _ScanTask:
    P: PolyMatrix
    z: int
    max_deg: int
    predicate: object
    leading: object
    first_only: bool


def _scan(task):
    """(index, W, structure) for matching candidates, in enumeration order."""
    P, z, max_deg = task.P, task.z, task.max_deg
    field = P.field
    elements = list(field.elements())
    length = z * P.cols * (max_deg + 1)
    if task.leading is None:
        vectors, offset = product(elements, repeat=length), 0
    else:
        vectors = (((task.leading,) + rest) for rest in product(elements, repeat=length - 1))
        offset = elements.index(task.leading) * len(elements) ** (length - 1)
    found = []
    seen = set()
    for index, vector in enumerate(vectors, start=offset):
        W = _matrix_from_vector(vector, z, P.cols, max_deg, field)
        try:
            structure = eigenstructure(stack_rows(P, W))
        except ZeroMatrixError:
            continue
        if task.predicate is not None and not task.predicate(structure):
            continue
        if task.first_only:
            return [(index, W, structure)]
        if structure not in seen:
            seen.add(structure)
            found.append((index, W, structure))
    return found


def _run_scan(P, z, max_deg, predicate, budget, first_only):
    budget.field.check_same(P.field)
    count = budget.candidate_count(z, P.cols, max_deg)
    budget.require(count)
    logger.info("Run Search: %d candidates over %s", count, P.field)
    length = z * P.cols * (max_deg + 1)
    if budget.jobs == 1 or length == 0:
        return _scan(_ScanTask(P, z, max_deg, predicate, None, first_only))
    tasks = [_ScanTask(P, z, max_deg, predicate, leading, first_only) for leading in P.field.elements()]
    with ProcessPoolExecutor(max_workers=budget.jobs) as pool:
        slices = list(pool.map(_scan, tasks))
    return sorted((hit for hits in slices for hit in hits), key=lambda hit: hit[0])


def search_completion(P, z, max_deg, predicate, budget):
    """First W in lexicographic coefficient order whose stack with P satisfies the predicate."""
    hits = _run_scan(P, z, max_deg, predicate, budget, first_only=True)
    return min(hits, key=lambda hit: hit[0])[1] if hits else None


def enumerate_completions(P, z, max_deg, budget):
    """Achieved eigenstructure of [P; W] mapped to the first W reaching it."""
    completions = {}
    for _, W, structure in _run_scan(P, z, max_deg, None, budget, first_only=False):
        completions.setdefault(structure, W)
    return completions


def pencil_completion_structures(P, z, budget):
    """Eigenstructures of [C_P; A] over every z x dn pencil A."""
    return frozenset(enumerate_completions(companion_form(P), z, 1, budget))


def realize_by_search(target, budget):
    """Some m x n matrix over GF(p) with exactly this eigenstructure, or None within the budget."""
    budget.field.check_same(target.field)
    m, n = target.dims
    return search_completion(PolyMatrix.zeros(0, n, target.field), m, target.degree, StructureEquals(target), budget)


#------------------------------ Target Enumeration ----------------------------------

def monic_polynomials(k, field):
    for tail in product(list(field.elements()), repeat=k):
        yield Poly(tail + (1,), field)


def _finite_chains(length, total, previous):
    """Monic divisibility chains starting from multiples of previous with degree sum <= total."""
    if length == 0:
        yield ()
        return
    field = previous.field
    for k in range(0, total // length - previous.degree + 1):
        for quotient in monic_polynomials(k, field):
            head = previous * quotient
            for rest in _finite_chains(length - 1, total - head.degree, head):
                yield (head,) + rest


def _infinite_lists(length, total):
    """Nondecreasing nonnegative lists with first entry 0."""
    for partition in partitions(total, length):
        if partition and partition[-1] == 0:
            yield tuple(reversed(partition))


def enumerate_targets(m, n, d, field, budget=None):
    """Every eigenstructure consistent with the index sum for an m x n matrix of degree d over GF(p)."""
    if field.is_rational:
        raise DomainError("target enumeration needs a finite field")
    produced = 0
    for r in range(1, min(m, n) + 1):
        for alphas in _finite_chains(r, r * d, Poly.one(field)):
            finite = sum(alpha.degree for alpha in alphas)
            for infinite in range(0, r * d - finite + 1):
                for es in _infinite_lists(r, infinite):
                    hom = tuple(HomogPoly(alpha, e) for alpha, e in zip(alphas, es))
                    rest = r * d - finite - infinite
                    for col_total in range(rest + 1):
                        for cols in partitions(col_total, n - r):
                            for rows in partitions(rest - col_total, m - r):
                                produced += 1
                                if budget is not None:
                                    budget.require(produced)
                                yield Eigenstructure(d, r, hom, cols, rows, (m, n), field)
