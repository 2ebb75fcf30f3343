import logging
from dataclasses import dataclass, field as dataclass_field, replace

from algebra import HomogPoly, Poly, is_divisibility_chain
from analyzing import CompletionAnalysis
from errors import DomainError, InconsistentTargetError, MissingTargetFieldError
from gaps import (
    CompletionContext,
    build_gaps_col_form,
    build_gaps_row_form,
    construct_d,
    interlaces,
    lift_finite_chain,
    lift_infinite_chain,
)
from indicators import ColumnFormGapIndicator, EllIndicator, HomOnlyEllIndicator, RowFormGapIndicator
from rules import (
    CMajorizationCondition,
    ColumnDegreeSumCondition,
    ColumnGenMajorizationCondition,
    CSumEllCondition,
    CSumTailCondition,
    DegreeSumCondition,
    EtaCondition,
    FiniteInterlacingCondition,
    FiniteOnlyFamilyCondition,
    GammaOneAtInfinityCondition,
    HomOnlyEllCondition,
    HomOnlyFamilyCondition,
    HomOnlyTailCondition,
    IndexSumCondition,
    InfiniteInterlacingCondition,
    InfiniteOnlyFamilyCondition,
    InterlacingCondition,
    RowGenMajorizationCondition,
)
from sequences import Partition, union_desc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompletionTarget:
    """Prescribed invariants of [P; W]; fields left as None are unprescribed."""

    z: int
    rank: int
    hom_factors: tuple = None
    finite_factors: tuple = None
    infinite_multiplicities: tuple = None
    col_indices: tuple = None
    row_indices: tuple = None
    field: object = None

    def __post_init__(self):
        if self.z < 0:
            raise InconsistentTargetError("number of added rows must be nonnegative, got {}".format(self.z))
        if self.hom_factors is not None:
            object.__setattr__(self, "hom_factors", tuple(self.hom_factors))
            if not is_divisibility_chain(self.hom_factors):
                raise InconsistentTargetError("homogeneous factors do not form a divisibility chain")
        if self.finite_factors is not None:
            betas = tuple(self.finite_factors)
            object.__setattr__(self, "finite_factors", betas)
            if not all(beta.is_monic for beta in betas):
                raise InconsistentTargetError("invariant factors must be monic")
            if not all(betas[i].divides(betas[i + 1]) for i in range(len(betas) - 1)):
                raise InconsistentTargetError("invariant factors do not form a divisibility chain")
        if self.infinite_multiplicities is not None:
            fs = tuple(self.infinite_multiplicities)
            object.__setattr__(self, "infinite_multiplicities", fs)
            if any(f < 0 for f in fs) or any(fs[i] > fs[i + 1] for i in range(len(fs) - 1)):
                raise InconsistentTargetError("partial multiplicities at infinity must be nondecreasing and nonnegative")
        for name in ("col_indices", "row_indices"):
            if getattr(self, name) is not None:
                object.__setattr__(self, name, Partition(getattr(self, name)))

    @classmethod
    def from_eigenstructure(cls, E, z):
        return cls(z=z, rank=E.rank, hom_factors=E.hom_factors, col_indices=E.col_indices,
                   row_indices=E.row_indices, field=E.field)

    def project(self, theorem):
        """Keep only the fields the theorem prescribes, deriving finite/infinite parts from the chain."""
        keep = CHECKERS[theorem].required
        values = dict(z=self.z, rank=self.rank, field=self.field)
        if "hom_factors" in keep:
            values["hom_factors"] = self.hom_factors
        if "finite_factors" in keep:
            values["finite_factors"] = (self.finite_factors if self.finite_factors is not None
                                        else tuple(h.alpha for h in self.hom_factors))
        if "infinite_multiplicities" in keep:
            values["infinite_multiplicities"] = (self.infinite_multiplicities if self.infinite_multiplicities is not None
                                                 else tuple(h.e for h in self.hom_factors))
        if "col_indices" in keep:
            values["col_indices"] = self.col_indices
        if "row_indices" in keep:
            values["row_indices"] = self.row_indices
        return CompletionTarget(**values)

    def transposed(self):
        return replace(self, col_indices=self.row_indices, row_indices=self.col_indices)


@dataclass(frozen=True)
class FeasibilityReport:
    theorem: str
    feasible: bool
    violations: tuple
    evaluated: tuple
    z: int
    x: int = None
    witness: dict = dataclass_field(default_factory=dict)

    @classmethod
    def from_analysis(cls, analysis, z=None, x=None):
        violations = analysis.violations
        return cls(theorem=analysis.theorem, feasible=not violations, violations=violations,
                   evaluated=analysis.evaluated, z=z, x=x, witness=analysis.witness)


#------------------------------ Preparation ----------------------------------

def _prepare(theorem, p_inv, target):
    missing = [name for name in CHECKERS[theorem].required if getattr(target, name) is None]
    if missing:
        raise MissingTargetFieldError(theorem, missing)
    if target.field is not None:
        p_inv.field.check_same(target.field)
    m, n = p_inv.dims
    r, z = p_inv.rank, target.z
    x = target.rank - r
    if not 0 <= x <= min(z, n - r):
        logger.info("Run Check: '%s' rejected, x=%d outside [0, %d]", theorem, x, min(z, n - r))
        return None, FeasibilityReport(theorem=theorem, feasible=False, violations=("rank-range",),
                                       evaluated=("rank-range",), z=z, x=x)
    expected = {
        "hom_factors": r + x,
        "finite_factors": r + x,
        "infinite_multiplicities": r + x,
        "col_indices": n - r - x,
        "row_indices": m + z - r - x,
    }
    for name, length in expected.items():
        value = getattr(target, name)
        if value is not None and len(value) != length:
            raise InconsistentTargetError("{} has length {}, expected {}".format(name, len(value), length))
    for chain in (target.hom_factors or ()):
        p_inv.field.check_same(chain.field)
    context = CompletionContext(
        source=p_inv,
        z=z,
        x=x,
        gamma=target.hom_factors,
        betas=target.finite_factors,
        fs=target.infinite_multiplicities,
        target_cols=target.col_indices,
        target_rows=target.row_indices,
    )
    return context, None


def _run(analysis):
    context = analysis.context
    return FeasibilityReport.from_analysis(analysis.run(), z=context.z, x=context.x)


#------------------------------ Checkers ----------------------------------

def check_existence(target):
    """Whether some matrix of the target's size and degree has exactly this eigenstructure."""
    if target.rank < 1:
        raise InconsistentTargetError("existence requires a positive rank")
    analysis = CompletionAnalysis("exists", target)
    analysis.add_condition(GammaOneAtInfinityCondition())
    analysis.add_condition(IndexSumCondition())
    return FeasibilityReport.from_analysis(analysis.run())


def check_full(p_inv, target, column_form=False):
    """Both gap forms give the same verdict on targets that satisfy the index sum theorem."""
    context, report = _prepare("full", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("full", context)
    if column_form:
        analysis.add_indicator(ColumnFormGapIndicator(context))
    else:
        analysis.add_indicator(RowFormGapIndicator(context))
    analysis.add_condition(InterlacingCondition())
    analysis.add_condition(EtaCondition())
    analysis.add_condition(ColumnGenMajorizationCondition())
    analysis.add_condition(RowGenMajorizationCondition())
    analysis.add_condition(ColumnDegreeSumCondition() if column_form else DegreeSumCondition())
    return _run(analysis)


def check_pencil_completion(p_inv, target):
    if p_inv.degree == 0:
        raise DomainError("pencil completion is defined for non constant pencils only")
    if p_inv.degree != 1:
        raise DomainError("pencil completion needs degree 1, got {}".format(p_inv.degree))
    return replace(check_full(p_inv, target), theorem="pencil")


def check_hom_plus_cols(p_inv, target):
    context, report = _prepare("hom+cols", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("hom+cols", context)
    analysis.add_indicator(ColumnFormGapIndicator(context))
    analysis.add_condition(InterlacingCondition())
    analysis.add_condition(ColumnGenMajorizationCondition())
    analysis.add_condition(ColumnDegreeSumCondition())
    return _run(analysis)


def check_hom_plus_rows(p_inv, target):
    context, report = _prepare("hom+rows", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("hom+rows", context)
    analysis.add_indicator(RowFormGapIndicator(context))
    analysis.add_condition(InterlacingCondition())
    analysis.add_condition(EtaCondition())
    analysis.add_condition(RowGenMajorizationCondition())
    analysis.add_condition(DegreeSumCondition())
    if context.x == context.n - context.r:
        analysis.add_condition(CMajorizationCondition())
    else:
        analysis.add_indicator(EllIndicator(context))
        analysis.add_condition(CSumEllCondition())
        analysis.add_condition(CSumTailCondition())
    return _run(analysis)


def check_hom_only(p_inv, target):
    context, report = _prepare("hom", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("hom", context)
    analysis.add_condition(InterlacingCondition())
    x, z, free = context.x, context.z, context.n - context.r
    if x < z or x == z == free:
        analysis.add_condition(HomOnlyFamilyCondition())
    else:
        analysis.add_indicator(HomOnlyEllIndicator(context))
        analysis.add_condition(HomOnlyEllCondition())
        analysis.add_condition(HomOnlyTailCondition())
    return _run(analysis)


def check_finite_only(p_inv, target):
    context, report = _prepare("finite", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("finite", context)
    analysis.add_condition(FiniteInterlacingCondition())
    analysis.add_condition(FiniteOnlyFamilyCondition())
    return _run(analysis)


def check_infinite_only(p_inv, target):
    context, report = _prepare("infinite", p_inv, target)
    if report is not None:
        return report
    analysis = CompletionAnalysis("infinite", context)
    analysis.add_condition(InfiniteInterlacingCondition())
    analysis.add_condition(InfiniteOnlyFamilyCondition())
    return _run(analysis)


def split_interlacing(phi, gamma, z):
    """Homogeneous interlacing checked separately on finite parts and on multiplicities at infinity."""
    finite_phi = tuple(HomogPoly(f.alpha, 0) for f in phi)
    finite_gamma = tuple(HomogPoly(g.alpha, 0) for g in gamma)
    infinite_phi = tuple(HomogPoly(Poly.one(f.field), f.e) for f in phi)
    infinite_gamma = tuple(HomogPoly(Poly.one(g.field), g.e) for g in gamma)
    return interlaces(finite_phi, finite_gamma, z) and interlaces(infinite_phi, infinite_gamma, z)


#------------------------------ Sufficiency Constructions ----------------------------------

def complete_row_indices(p_inv, target):
    """Full target with v = u union b, b taken in column form."""
    context, report = _prepare("hom+cols", p_inv, target)
    if report is not None:
        raise DomainError("x out of range; no row indices can complete this target")
    _, b = build_gaps_col_form(context.phi, context.gamma, context.c, context.target_cols,
                               context.x, context.z, context.degree)
    return replace(target, row_indices=union_desc(context.u, b))


def complete_col_indices(p_inv, target):
    """Full target with column indices from construct_d, or None when none exist."""
    context, report = _prepare("hom+rows", p_inv, target)
    if report is not None:
        raise DomainError("x out of range; no column indices can complete this target")
    if context.x == context.n - context.r:
        return replace(target, col_indices=())
    a, _ = build_gaps_row_form(context.phi, context.gamma, context.u, context.target_rows,
                               context.x, context.z, context.degree)
    dd = construct_d(context.c, a)
    return None if dd is None else replace(target, col_indices=dd)


def lift_finite_target(p_inv, target):
    """Homogeneous chain over the prescribed invariant factors; needs check_finite_only to accept."""
    if not check_finite_only(p_inv, target).feasible:
        raise DomainError("invariant factors are not achievable; nothing to lift")
    context, _ = _prepare("finite", p_inv, target)
    return CompletionTarget(z=target.z, rank=target.rank, hom_factors=lift_finite_chain(context), field=target.field)


def lift_infinite_target(p_inv, target):
    """Homogeneous chain over the prescribed multiplicities at infinity; needs check_infinite_only to accept."""
    if not check_infinite_only(p_inv, target).feasible:
        raise DomainError("partial multiplicities at infinity are not achievable; nothing to lift")
    context, _ = _prepare("infinite", p_inv, target)
    return CompletionTarget(z=target.z, rank=target.rank, hom_factors=lift_infinite_chain(context), field=target.field)


#------------------------------ Registry ----------------------------------

@dataclass(frozen=True)
class Checker:
    name: str
    function: object
    required: tuple
    needs_matrix: bool = True


def _check_existence_of(_, target):
    return check_existence(target)


CHECKERS = {
    "exists": Checker("exists", _check_existence_of, ("hom_factors", "col_indices", "row_indices"),
                      needs_matrix=False),
    "full": Checker("full", check_full, ("hom_factors", "col_indices", "row_indices")),
    "pencil": Checker("pencil", check_pencil_completion, ("hom_factors", "col_indices", "row_indices")),
    "hom+cols": Checker("hom+cols", check_hom_plus_cols, ("hom_factors", "col_indices")),
    "hom+rows": Checker("hom+rows", check_hom_plus_rows, ("hom_factors", "row_indices")),
    "hom": Checker("hom", check_hom_only, ("hom_factors",)),
    "finite": Checker("finite", check_finite_only, ("finite_factors",)),
    "infinite": Checker("infinite", check_infinite_only, ("infinite_multiplicities",)),
}


def run_checker(theorem, p_inv, target):
    return CHECKERS[theorem].function(p_inv, target)
