"""Rank and kernels of constant matrices over a FieldTag (rows are lists of scalars)."""
from sympy.polys.matrices import DomainMatrix


def domain_matrix(rows, ncols, field):
    return DomainMatrix([[field.to_domain(v) for v in row] for row in rows], (len(rows), ncols), field.domain)


def rank(rows, field):
    if not rows or not rows[0]:
        return 0
    return domain_matrix(rows, len(rows[0]), field).rank()


def nullspace(rows, ncols, field):
    """Basis of the right kernel, one list of scalars per vector."""
    if ncols == 0:
        return []
    if not rows:
        return [[field.one if i == j else field.zero for j in range(ncols)] for i in range(ncols)]
    basis = domain_matrix(rows, ncols, field).nullspace()
    return [[field.from_domain(v) for v in vector] for vector in basis.to_list()]
