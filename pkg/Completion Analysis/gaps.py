"""Degree sums and gap sequences shared by the completion conditions."""
import logging
from dataclasses import dataclass, field as dataclass_field

from algebra import (
    HomogPoly,
    Poly,
    chain_at,
    homog_deg,
    homog_divides,
    homog_lcm,
    is_divisibility_chain,
    poly_lcm,
)
from errors import InconsistentTargetError, LengthMismatchError
from sequences import IntSeq, prefix_sum

logger = logging.getLogger(__name__)


#------------------------------ lcm Degree Sums ----------------------------------

def lcm_degree_sum(phi, gamma, shift, upper):
    """sum_{i=1}^{upper} deg lcm(phi_(i+shift), gamma_i)"""
    return sum(homog_deg(homog_lcm(chain_at(phi, i + shift), gamma[i - 1])) for i in range(1, upper + 1))


def lower_sum(phi, gamma, x, k):
    return lcm_degree_sum(phi, gamma, k - x, len(gamma) - k)


def upper_sum(phi, gamma, x, k):
    return lcm_degree_sum(phi, gamma, -x - k, len(gamma))


def finite_lcm_sum(alphas, betas, x, j):
    """sum_{i=1}^{r+x-j} deg lcm(alpha_(i-x+j), beta_i), alpha_k = 1 for k < 1."""
    total = 0
    for i in range(1, len(betas) - j + 1):
        k = i - x + j
        beta = betas[i - 1]
        total += (poly_lcm(alphas[k - 1], beta) if k >= 1 else beta).degree
    return total


def infinite_max_sum(es, fs, x, j):
    """sum_{i=1}^{r+x-j} max(e_(i-x+j), f_i), e_k = 0 for k < 1."""
    return sum(max(es[i - x + j - 1] if i - x + j >= 1 else 0, fs[i - 1])
               for i in range(1, len(fs) - j + 1))


def interlaces(phi, gamma, z):
    return all(homog_divides(gamma[i - 1], phi[i - 1]) and homog_divides(phi[i - 1], chain_at(gamma, i + z))
               for i in range(1, len(phi) + 1))


#------------------------------ Gap Sequences ----------------------------------

def _validate_chains(phi, gamma, x):
    if len(gamma) != len(phi) + x:
        raise InconsistentTargetError("target chain has {} factors, expected {}".format(len(gamma), len(phi) + x))
    if not is_divisibility_chain(phi) or not is_divisibility_chain(gamma):
        raise InconsistentTargetError("homogeneous factors do not form a divisibility chain")


def _gaps(phi, gamma, x, z, d, head_a, head_b):
    a = []
    if x >= 1:
        a.append(head_a - lower_sum(phi, gamma, x, 1))
    for j in range(2, x + 1):
        a.append(lower_sum(phi, gamma, x, j - 1) - lower_sum(phi, gamma, x, j) - d)
    b = []
    if z - x >= 1:
        b.append(head_b - upper_sum(phi, gamma, x, 1))
    for j in range(2, z - x + 1):
        b.append(upper_sum(phi, gamma, x, j - 1) - upper_sum(phi, gamma, x, j))
    a, b = tuple(a), tuple(b)
    if interlaces(phi, gamma, z):
        _log_unexpected_gaps(a, b)
    return a, b


def _log_unexpected_gaps(a, b):
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        logger.debug("Gap sequence a=%s is not nonincreasing although interlacing holds", list(a))
    if any(b[i] < b[i + 1] for i in range(len(b) - 1)) or (b and b[-1] < 0):
        logger.debug("Gap sequence b=%s is not a nonincreasing partition although interlacing holds", list(b))


def build_gaps_row_form(phi, gamma, u, v, x, z, d):
    """Gap sequences a (length x) and b (length z - x) from the row minimal indices."""
    _validate_chains(phi, gamma, x)
    head = sum(v) - sum(u) + sum(homog_deg(g) for g in gamma)
    return _gaps(phi, gamma, x, z, d, head - d, head)


def build_gaps_col_form(phi, gamma, c, dd, x, z, d):
    """Gap sequences a (length x) and b (length z - x) from the column minimal indices."""
    _validate_chains(phi, gamma, x)
    head = sum(c) - sum(dd) + sum(homog_deg(f) for f in phi)
    return _gaps(phi, gamma, x, z, d, head + (x - 1) * d, head + x * d)


#------------------------------ Column Index Reconstruction ----------------------------------

def ell_index(c, a):
    """min{j : c_1+..+c_j > a_1+..+a_j}, with a_(x+1) = -inf."""
    x = len(a)
    return next((j for j in range(1, x + 1) if prefix_sum(c, j) > prefix_sum(a, j)), x + 1)


def c_sum_ell_holds(c, a, ell):
    x = len(a)
    return prefix_sum(c, x + 1) - c[ell - 1] >= sum(a)


def c_sum_tail_holds(c, a, ell):
    x = len(a)
    return all(sum(c[j + 1:x + 1]) >= sum(a[j:x]) for j in range(ell, x))


def construct_d(c, a):
    """Column indices d with c majorized by (d, a), or None when none exist."""
    x = len(a)
    if len(c) <= x:
        raise LengthMismatchError("construct_d needs len(c) > len(a), got {} and {}".format(len(c), x))
    ell = ell_index(c, a)
    if not (c_sum_ell_holds(c, a, ell) and c_sum_tail_holds(c, a, ell)):
        return None
    return IntSeq((prefix_sum(c, x + 1) - sum(a),) + tuple(c[x + 1:]))


#------------------------------ Context ----------------------------------

@dataclass
class CompletionContext:
    """Invariants of P together with a (partial) target, x derived from the ranks."""

    source: object
    z: int
    x: int
    gamma: tuple = None
    betas: tuple = None
    fs: tuple = None
    target_cols: tuple = None
    target_rows: tuple = None
    witness: dict = dataclass_field(default_factory=dict)

    @property
    def phi(self):
        return self.source.hom_factors

    @property
    def alphas(self):
        return self.source.alphas

    @property
    def es(self):
        return self.source.es

    @property
    def c(self):
        return self.source.col_indices

    @property
    def u(self):
        return self.source.row_indices

    @property
    def r(self):
        return self.source.rank

    @property
    def degree(self):
        return self.source.degree

    @property
    def m(self):
        return self.source.dims[0]

    @property
    def n(self):
        return self.source.dims[1]

    def lower_sum(self, k):
        return lower_sum(self.phi, self.gamma, self.x, k)

    def upper_sum(self, k):
        return upper_sum(self.phi, self.gamma, self.x, k)

    def gamma_degree(self):
        return sum(homog_deg(g) for g in self.gamma)

    def phi_degree(self):
        return sum(homog_deg(f) for f in self.phi)

    def row_form_head(self):
        return sum(self.target_rows) - sum(self.u) + self.gamma_degree()

    def col_form_head(self):
        return sum(self.c) - sum(self.target_cols) + self.phi_degree()

    def untouched_cols(self, j):
        """c_1+..+c_j plus c_(x+1)+..+c_(n-r)."""
        return prefix_sum(self.c, j) + sum(self.c[self.x:])

    def finite_chain(self):
        return tuple(HomogPoly(beta, 0) for beta in self.betas)

    def source_finite_chain(self):
        return tuple(HomogPoly(alpha, 0) for alpha in self.alphas)


def lift_finite_chain(context):
    """Homogeneous chain (beta_i, f_i) carrying the slack of the j = 0 inequality at the top."""
    r, x, d = context.r, context.x, context.degree
    slack = ((r + x) * d - finite_lcm_sum(context.alphas, context.betas, x, 0) - sum(context.es)
             - sum(context.u) - sum(context.c[x:]))
    if slack < 0 or r + x == 0:
        raise InconsistentTargetError("no room left at infinity for the prescribed invariant factors")
    fs = [0] * x + list(context.es)
    fs[-1] += slack
    return tuple(HomogPoly(beta, f) for beta, f in zip(context.betas, fs))


def lift_infinite_chain(context):
    """Homogeneous chain (beta_i, f_i) with beta padded by units and s^k on top."""
    r, x, d = context.r, context.x, context.degree
    field = context.source.field
    slack = ((r + x) * d - sum(a.degree for a in context.alphas) - infinite_max_sum(context.es, context.fs, x, 0)
             - sum(context.u) - sum(context.c[x:]))
    if slack < 0 or r + x == 0:
        raise InconsistentTargetError("no room left for finite eigenvalues with the prescribed multiplicities")
    betas = [Poly.one(field)] * x + list(context.alphas)
    betas[-1] = betas[-1] * Poly.monomial(slack, field)
    return tuple(HomogPoly(beta, f) for beta, f in zip(betas, context.fs))
