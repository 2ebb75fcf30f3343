import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from algebra import HomogPoly, Poly, homog_deg, is_divisibility_chain
from errors import (
    DomainError,
    InconsistentTargetError,
    InputError,
    InternalInconsistencyError,
    LengthMismatchError,
    ZeroMatrixError,
)
from linalg import nullspace, rank
from sequences import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple
    field: object

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows:
            raise LengthMismatchError("expected {} rows, got {}".format(self.rows, len(entries)))
        for row in entries:
            if len(row) != self.cols:
                raise LengthMismatchError("expected {} columns, got a row of {}".format(self.cols, len(row)))
            for entry in row:
                self.field.check_same(entry.field)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows, field, cols=None):
        """Rows of Poly, coefficient lists or scalars."""
        converted = tuple(tuple(_as_poly(entry, field) for entry in row) for row in rows)
        if cols is None:
            cols = len(converted[0]) if converted else 0
        return cls(len(converted), cols, converted, field)

    @classmethod
    def zeros(cls, rows, cols, field):
        zero = Poly.zero(field)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n, field):
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], field, cols=n)

    def __getitem__(self, position):
        i, j = position
        return self.entries[i][j]

    @property
    def is_zero(self):
        return all(entry.is_zero for row in self.entries for entry in row)

    def coefficient_matrix(self, k):
        return [[entry.coefficient(k) for entry in row] for row in self.entries]

    def transpose(self):
        return PolyMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                          tuple(() for _ in range(self.cols)), self.field)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self.field.check_same(other.field)
        if self.cols != other.rows:
            raise LengthMismatchError("cannot multiply {}x{} by {}x{}".format(
                self.rows, self.cols, other.rows, other.cols))
        zero = Poly.zero(self.field)
        product = []
        for row in self.entries:
            product.append(tuple(
                sum((row[k] * other.entries[k][j] for k in range(self.cols)), zero)
                for j in range(other.cols)
            ))
        return PolyMatrix(self.rows, other.cols, tuple(product), self.field)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"


def _as_poly(entry, field):
    if isinstance(entry, Poly):
        return entry
    if isinstance(entry, (list, tuple)):
        return Poly(tuple(entry), field)
    return Poly.constant(entry, field)


@dataclass(frozen=True)
class Eigenstructure:
    degree: int
    rank: int
    hom_factors: tuple
    col_indices: tuple
    row_indices: tuple
    dims: tuple
    field: object

    def __post_init__(self):
        m, n = self.dims
        object.__setattr__(self, "hom_factors", tuple(self.hom_factors))
        object.__setattr__(self, "col_indices", Partition(self.col_indices))
        object.__setattr__(self, "row_indices", Partition(self.row_indices))
        object.__setattr__(self, "dims", (m, n))
        if self.degree < 0 or not 0 <= self.rank <= min(m, n):
            raise InconsistentTargetError("rank {} impossible for a {}x{} matrix".format(self.rank, m, n))
        if len(self.hom_factors) != self.rank:
            raise InconsistentTargetError("expected {} homogeneous factors, got {}".format(
                self.rank, len(self.hom_factors)))
        if len(self.col_indices) != n - self.rank or len(self.row_indices) != m - self.rank:
            raise InconsistentTargetError("minimal index lists must have lengths {} and {}".format(
                n - self.rank, m - self.rank))
        for factor in self.hom_factors:
            self.field.check_same(factor.field)
        if not is_divisibility_chain(self.hom_factors):
            raise InconsistentTargetError("homogeneous factors do not form a divisibility chain")

    @property
    def alphas(self):
        return tuple(h.alpha for h in self.hom_factors)

    @property
    def es(self):
        return tuple(h.e for h in self.hom_factors)

    def index_sum(self):
        return sum(homog_deg(h) for h in self.hom_factors) + sum(self.col_indices) + sum(self.row_indices)


@dataclass(frozen=True)
class MinimalBasis:
    vectors: tuple
    orders: tuple


@dataclass(frozen=True)
class MinimalIndices:
    col: Partition
    row: Partition
    right_basis: MinimalBasis
    left_basis: MinimalBasis


#------------------------------ Degree, Rank, Reversal ----------------------------------

def degree_of(P):
    if P.is_zero:
        raise ZeroMatrixError()
    return max(entry.degree for row in P.entries for entry in row)


def rank_of(P):
    return len(smith_form(P))


def reversal(P):
    d = degree_of(P)
    return PolyMatrix(P.rows, P.cols, tuple(tuple(e.reverse(d) for e in row) for row in P.entries), P.field)


#------------------------------ Smith Form ----------------------------------

def polynomial_domain_matrix(P):
    """P as a sympy DomainMatrix over field[s]."""
    return DomainMatrix([[entry.element for entry in row] for row in P.entries], (P.rows, P.cols),
                        P.field.poly_domain)


def _min_degree_position(work, k, m, n):
    best = (k, k) if work[k][k] else None
    for i in range(k, m):
        for j in range(k, n):
            entry = work[i][j]
            if not entry:
                continue
            if best is None or entry.degree() < work[best[0]][best[1]].degree():
                best = (i, j)
    return best


def _settle_pivot(work, k, m, n, domain):
    while True:
        position = _min_degree_position(work, k, m, n)
        if position is None:
            return False
        i, j = position
        work[k], work[i] = work[i], work[k]
        for row in work:
            row[k], row[j] = row[j], row[k]
        pivot = work[k][k]
        reduced = True
        for i in range(k + 1, m):
            if not work[i][k]:
                continue
            quotient, remainder = domain.div(work[i][k], pivot)
            work[i] = [a - quotient * b for a, b in zip(work[i], work[k])]
            reduced = reduced and not remainder
        for j in range(k + 1, n):
            if not work[k][j]:
                continue
            quotient, remainder = domain.div(work[k][j], pivot)
            for row in work:
                row[j] = row[j] - quotient * row[k]
            reduced = reduced and not remainder
        if not reduced:
            continue
        offending = next((i for i in range(k + 1, m) for j in range(k + 1, n)
                          if domain.div(work[i][j], pivot)[1]), None)
        if offending is None:
            return True
        work[k] = [a + b for a, b in zip(work[k], work[offending])]


def smith_form(P):
    """Monic invariant factors alpha_1 | ... | alpha_r."""
    if P.rows == 0 or P.cols == 0:
        return ()
    M = polynomial_domain_matrix(P)
    work = M.to_list()
    factors = []
    for k in range(min(P.rows, P.cols)):
        if not _settle_pivot(work, k, P.rows, P.cols, M.domain):
            break
        factors.append(Poly.from_element(work[k][k].monic(), P.field))
    return tuple(factors)


def infinite_multiplicities(P):
    return tuple(f.multiplicity_at_zero() for f in smith_form(reversal(P)))


def homogeneous_factors(P):
    alphas = smith_form(P)
    es = infinite_multiplicities(P)
    if len(alphas) != len(es):
        raise InternalInconsistencyError("reversal changed the rank of {}".format(P))
    return tuple(HomogPoly(alpha, e) for alpha, e in zip(alphas, es))


#------------------------------ Minimal Indices ----------------------------------

def _block_toeplitz(coefficients, k, m, n):
    d = len(coefficients) - 1
    rows = []
    for block_row in range(d + k + 1):
        for i in range(m):
            row = []
            for block_col in range(k + 1):
                l = block_row - block_col
                row.extend(coefficients[l][i] if 0 <= l <= d else [0] * n)
            rows.append(row)
    return rows


def _right_minimal_basis(P, r):
    """Degree-by-degree kernel sweep; each accepted vector is independent of earlier shifts."""
    field, m, n = P.field, P.rows, P.cols
    d = 0 if P.is_zero else degree_of(P)
    coefficients = [P.coefficient_matrix(l) for l in range(d + 1)]
    wanted = n - r
    chosen = []
    k = 0
    while len(chosen) < wanted:
        if k > r * d:
            raise InternalInconsistencyError("no minimal basis found up to degree {} for {}".format(r * d, P))
        width = n * (k + 1)
        spanned = [[field.zero] * (j * n) + vector + [field.zero] * (width - j * n - len(vector))
                   for order, vector in chosen for j in range(k - order + 1)]
        current = rank(spanned, field) if spanned else 0
        for vector in nullspace(_block_toeplitz(coefficients, k, m, n), width, field):
            if rank(spanned + [vector], field) > current:
                spanned.append(vector)
                current += 1
                chosen.append((k, vector))
                if len(chosen) == wanted:
                    break
        k += 1
    chosen.reverse()
    vectors = tuple(
        tuple(Poly(tuple(vector[i * n + j] for i in range(order + 1)), field) for j in range(n))
        for order, vector in chosen
    )
    return MinimalBasis(vectors, tuple(order for order, _ in chosen))


def minimal_indices(P):
    r = rank_of(P)
    right = _right_minimal_basis(P, r)
    left = _right_minimal_basis(P.transpose(), r)
    return MinimalIndices(Partition(right.orders), Partition(left.orders), right, left)


def basis_matrix(basis, size, field):
    """Stack basis vectors as columns of a size x len(basis) matrix."""
    return PolyMatrix(size, len(basis.vectors),
                      tuple(tuple(vector[i] for vector in basis.vectors) for i in range(size)), field)


def high_degree_matrix(B):
    """Constant matrix of the column-degree coefficients (Forney test)."""
    degrees = [max(B.entries[i][j].degree for i in range(B.rows)) for j in range(B.cols)]
    return [[B.entries[i][j].coefficient(degrees[j]) for j in range(B.cols)] for i in range(B.rows)]


def is_column_reduced(B):
    return rank(high_degree_matrix(B), B.field) == B.cols


#------------------------------ Eigenstructure ----------------------------------

def eigenstructure(P):
    d = degree_of(P)
    factors = homogeneous_factors(P)
    indices = minimal_indices(P)
    result = Eigenstructure(
        degree=d,
        rank=len(factors),
        hom_factors=factors,
        col_indices=indices.col,
        row_indices=indices.row,
        dims=(P.rows, P.cols),
        field=P.field,
    )
    if result.index_sum() != result.rank * d:
        raise InternalInconsistencyError(
            "index sum {} != rank*degree {} for {}".format(result.index_sum(), result.rank * d, P)
        )
    return result


#------------------------------ Companion Form ----------------------------------

def companion_form(P):
    d = degree_of(P)
    if d < 1:
        raise DomainError("companion form requires degree >= 1")
    if d == 1:
        return P
    field, m, n = P.field, P.rows, P.cols
    coefficients = [P.coefficient_matrix(l) for l in range(d + 1)]
    zero, s, minus_one = Poly.zero(field), Poly.monomial(1, field), Poly.constant(-1, field)
    entries = [[zero] * (d * n) for _ in range(m + (d - 1) * n)]
    for i in range(m):
        for j in range(n):
            entries[i][j] = Poly((coefficients[d - 1][i][j], coefficients[d][i][j]), field)
            for block in range(1, d):
                entries[i][block * n + j] = Poly.constant(coefficients[d - 1 - block][i][j], field)
    for block in range(1, d):
        for j in range(n):
            row = m + (block - 1) * n + j
            entries[row][(block - 1) * n + j] = minus_one
            entries[row][block * n + j] = s
    return PolyMatrix(len(entries), d * n, tuple(tuple(row) for row in entries), field)


def companion_transform(E):
    """Eigenstructure of the companion form predicted from that of the matrix."""
    d = E.degree
    if d < 1:
        raise DomainError("companion form requires degree >= 1")
    if d == 1:
        return E
    m, n = E.dims
    extra = (d - 1) * n
    return Eigenstructure(
        degree=1,
        rank=E.rank + extra,
        hom_factors=(HomogPoly.unit(E.field),) * extra + E.hom_factors,
        col_indices=tuple(c + d - 1 for c in E.col_indices),
        row_indices=E.row_indices,
        dims=(m + extra, d * n),
        field=E.field,
    )


def structured_pencil(n, d, field):
    """(d-1)n x dn pencil with -I on the block diagonal and sI to its right."""
    if d < 2:
        raise DomainError("structured pencil requires degree >= 2")
    zero, s, minus_one = Poly.zero(field), Poly.monomial(1, field), Poly.constant(-1, field)
    entries = [[zero] * (d * n) for _ in range((d - 1) * n)]
    for block in range(d - 1):
        for j in range(n):
            entries[block * n + j][block * n + j] = minus_one
            entries[block * n + j][(block + 1) * n + j] = s
    return PolyMatrix((d - 1) * n, d * n, tuple(tuple(row) for row in entries), field)


#------------------------------ Assembly ----------------------------------

def stack_rows(P, W):
    P.field.check_same(W.field)
    if P.cols != W.cols:
        raise LengthMismatchError("cannot stack {} columns over {}".format(W.cols, P.cols))
    return PolyMatrix(P.rows + W.rows, P.cols, P.entries + W.entries, P.field)


def transpose(P):
    return P.transpose()


def block_diagonal(blocks, rows, cols, field):
    """Blocks along the diagonal, zero padded to rows x cols."""
    entries = [[Poly.zero(field)] * cols for _ in range(rows)]
    top = left = 0
    for block in blocks:
        if top + block.rows > rows or left + block.cols > cols:
            raise InputError("blocks do not fit in a {}x{} matrix".format(rows, cols))
        for i in range(block.rows):
            for j in range(block.cols):
                entries[top + i][left + j] = block.entries[i][j]
        top += block.rows
        left += block.cols
    return PolyMatrix(rows, cols, tuple(tuple(row) for row in entries), field)
