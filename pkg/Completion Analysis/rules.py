from abc import ABC, abstractmethod

from algebra import POS_INF
from gaps import (
    c_sum_ell_holds,
    c_sum_tail_holds,
    finite_lcm_sum,
    infinite_max_sum,
    interlaces,
)
from sequences import count_positive, gen_majorizes, majorizes, prefix_sum


class CompletionCondition(ABC):

    def __init__(self, name):
        self.name = name

    @abstractmethod
    def is_valid(self, context):
        pass

    @abstractmethod
    def get_description(self):
        pass


#------------------------------ Shared Conditions ----------------------------------

class InterlacingCondition(CompletionCondition):

    def __init__(self):
        super(InterlacingCondition, self).__init__("interlacing")

    def is_valid(self, context):
        return interlaces(context.phi, context.gamma, context.z)

    def get_description(self):
        return "gamma_i | phi_i | gamma_(i+z) for 1 <= i <= r"


class EtaCondition(CompletionCondition):

    def __init__(self):
        super(EtaCondition, self).__init__("eta")

    def is_valid(self, context):
        return count_positive(context.target_rows) >= count_positive(context.u)

    def get_description(self):
        return "the completion has at least as many positive row minimal indices as P"


class ColumnGenMajorizationCondition(CompletionCondition):

    def __init__(self):
        super(ColumnGenMajorizationCondition, self).__init__("col-gen-majorization")

    def is_valid(self, context):
        return gen_majorizes(context.c, context.target_cols, context.witness["a"])

    def get_description(self):
        return "c is majorized by (d, a) in the generalized sense"


class RowGenMajorizationCondition(CompletionCondition):

    def __init__(self):
        super(RowGenMajorizationCondition, self).__init__("row-gen-majorization")

    def is_valid(self, context):
        return gen_majorizes(context.target_rows, context.u, context.witness["b"])

    def get_description(self):
        return "v is majorized by (u, b) in the generalized sense"


class DegreeSumCondition(CompletionCondition):

    def __init__(self):
        super(DegreeSumCondition, self).__init__("degree-sum")

    def is_valid(self, context):
        lhs, rhs = context.lower_sum(0), context.row_form_head()
        return lhs == rhs if context.x == 0 else lhs <= rhs

    def get_description(self):
        return "sum deg lcm(phi_(i-x), gamma_i) <= sum v - sum u + sum deg gamma, with equality when x = 0"


class ColumnDegreeSumCondition(CompletionCondition):

    def __init__(self):
        super(ColumnDegreeSumCondition, self).__init__("degree-sum-cols")

    def is_valid(self, context):
        lhs = context.lower_sum(0)
        rhs = context.col_form_head() + context.x * context.degree
        return lhs == rhs if context.x == context.z else lhs <= rhs

    def get_description(self):
        return "sum deg lcm(phi_(i-x), gamma_i) <= sum c - sum d + sum deg phi + xd, with equality when x = z"


#------------------------------ Row Minimal Index Conditions ----------------------------------

class CMajorizationCondition(CompletionCondition):

    def __init__(self):
        super(CMajorizationCondition, self).__init__("c-majorization")

    def is_valid(self, context):
        return majorizes(context.c, context.witness["a"])

    def get_description(self):
        return "c is majorized by a"


class CSumEllCondition(CompletionCondition):

    def __init__(self):
        super(CSumEllCondition, self).__init__("c-sum-ell")

    def is_valid(self, context):
        return c_sum_ell_holds(context.c, context.witness["a"], context.witness["ell"])

    def get_description(self):
        return "c_1 + ... + c_(x+1) - c_ell >= a_1 + ... + a_x"


class CSumTailCondition(CompletionCondition):

    def __init__(self):
        super(CSumTailCondition, self).__init__("c-sum-tail")

    def is_valid(self, context):
        return c_sum_tail_holds(context.c, context.witness["a"], context.witness["ell"])

    def get_description(self):
        return "c_(j+2) + ... + c_(x+1) >= a_(j+1) + ... + a_x for ell <= j <= x-1"


#------------------------------ Homogeneous Factor Conditions ----------------------------------

class HomOnlyFamilyCondition(CompletionCondition):

    def __init__(self):
        super(HomOnlyFamilyCondition, self).__init__("hom-only-j")

    def is_valid(self, context):
        x, r, d = context.x, context.r, context.degree
        tight = x == context.z == context.n - r
        for j in range(x):
            lhs = context.lower_sum(j) + sum(context.u) + context.untouched_cols(j)
            rhs = (r + x - j) * d
            if lhs > rhs or (tight and j == 0 and lhs != rhs):
                return False
        return True

    def get_description(self):
        return "sum deg lcm(phi_(i-x+j), gamma_i) + sum u + c_1..c_j + c_(x+1)..c_(n-r) <= (r+x-j)d for 0 <= j < x"


class HomOnlyEllCondition(CompletionCondition):

    def __init__(self):
        super(HomOnlyEllCondition, self).__init__("hom-only-ell")

    def is_valid(self, context):
        x, ell = context.x, context.witness["ell"]
        rhs = context.gamma_degree() - context.phi_degree() - x * context.degree
        return prefix_sum(context.c, x + 1) - context.c[ell - 1] >= rhs

    def get_description(self):
        return "c_1 + ... + c_(x+1) - c_ell >= sum deg gamma - sum deg phi - xd"


class HomOnlyTailCondition(CompletionCondition):

    def __init__(self):
        super(HomOnlyTailCondition, self).__init__("hom-only-tail")

    def is_valid(self, context):
        x, d, ell = context.x, context.degree, context.witness["ell"]
        return all(sum(context.c[j + 1:x + 1]) >= context.lower_sum(j) - context.phi_degree() - (x - j) * d
                   for j in range(ell, x))

    def get_description(self):
        return "c_(j+2) + ... + c_(x+1) >= sum deg lcm(phi_(i-x+j), gamma_i) - sum deg phi - (x-j)d for ell <= j < x"


#------------------------------ Finite / Infinite Structure Conditions ----------------------------------

class FiniteInterlacingCondition(CompletionCondition):

    def __init__(self):
        super(FiniteInterlacingCondition, self).__init__("interlacing")

    def is_valid(self, context):
        return interlaces(context.source_finite_chain(), context.finite_chain(), context.z)

    def get_description(self):
        return "beta_i | alpha_i | beta_(i+z) for 1 <= i <= r"


class FiniteOnlyFamilyCondition(CompletionCondition):

    def __init__(self):
        super(FiniteOnlyFamilyCondition, self).__init__("finite-only-j")

    def is_valid(self, context):
        x, r, d = context.x, context.r, context.degree
        fixed = sum(context.es) + sum(context.u)
        return all(finite_lcm_sum(context.alphas, context.betas, x, j) + fixed + context.untouched_cols(j)
                   <= (r + x - j) * d for j in range(x))

    def get_description(self):
        return "sum deg lcm(alpha_(i-x+j), beta_i) + sum e + sum u + c_1..c_j + c_(x+1)..c_(n-r) <= (r+x-j)d"


class InfiniteInterlacingCondition(CompletionCondition):

    def __init__(self):
        super(InfiniteInterlacingCondition, self).__init__("interlacing")

    def is_valid(self, context):
        fs, es, z = context.fs, context.es, context.z
        return all(fs[i - 1] <= es[i - 1] <= _f_at(fs, i + z) for i in range(1, len(es) + 1))

    def get_description(self):
        return "f_i <= e_i <= f_(i+z) for 1 <= i <= r"


class InfiniteOnlyFamilyCondition(CompletionCondition):

    def __init__(self):
        super(InfiniteOnlyFamilyCondition, self).__init__("infinite-only-j")

    def is_valid(self, context):
        x, r, d = context.x, context.r, context.degree
        fixed = sum(a.degree for a in context.alphas) + sum(context.u)
        return all(infinite_max_sum(context.es, context.fs, x, j) + fixed + context.untouched_cols(j)
                   <= (r + x - j) * d for j in range(x))

    def get_description(self):
        return "sum max(e_(i-x+j), f_i) + sum deg alpha + sum u + c_1..c_j + c_(x+1)..c_(n-r) <= (r+x-j)d"


def _f_at(fs, i):
    return fs[i - 1] if i <= len(fs) else POS_INF


#------------------------------ Existence Conditions ----------------------------------

class GammaOneAtInfinityCondition(CompletionCondition):

    def __init__(self):
        super(GammaOneAtInfinityCondition, self).__init__("gamma1-at-infinity")

    def is_valid(self, target):
        return target.hom_factors[0].e == 0

    def get_description(self):
        return "the first homogeneous invariant factor is not divisible by t"


class IndexSumCondition(CompletionCondition):

    def __init__(self):
        super(IndexSumCondition, self).__init__("index-sum")

    def is_valid(self, target):
        return target.index_sum() == target.rank * target.degree

    def get_description(self):
        return "sum deg gamma + sum d + sum v = r * degree"
