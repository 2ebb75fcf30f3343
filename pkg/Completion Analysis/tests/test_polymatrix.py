import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from algebra import FieldTag, HomogPoly, Poly
from errors import DomainError, InconsistentTargetError, LengthMismatchError, ZeroMatrixError
from polymatrix import (
    Eigenstructure,
    PolyMatrix,
    basis_matrix,
    companion_form,
    companion_transform,
    degree_of,
    eigenstructure,
    infinite_multiplicities,
    is_column_reduced,
    minimal_indices,
    rank_of,
    reversal,
    smith_form,
    stack_rows,
    structured_pencil,
)

Q = FieldTag.rationals()
GF2 = FieldTag.prime(2)
GF3 = FieldTag.prime(3)

S = [0, 1]


def unit_factor(field, e=0):
    return HomogPoly(Poly.one(field), e)


def test_degree_and_rank():
    P = PolyMatrix.from_rows([[S, 1], [0, [0, 0, 1]]], Q)
    assert degree_of(P) == 2
    assert rank_of(P) == 2
    with pytest.raises(ZeroMatrixError):
        degree_of(PolyMatrix.zeros(2, 2, Q))


def test_shape_is_validated():
    with pytest.raises(LengthMismatchError):
        PolyMatrix(2, 1, ((Poly.one(Q),),), Q)
    with pytest.raises(LengthMismatchError):
        PolyMatrix.from_rows([[1, 0]], Q) * PolyMatrix.from_rows([[1, 0]], Q)


def test_smith_form_of_coprime_diagonal():
    P = PolyMatrix.from_rows([[S, 0], [0, [1, 1]]], Q)
    assert smith_form(P) == (Poly.one(Q), Poly((0, 1, 1), Q))


def test_smith_form_over_gf2():
    P = PolyMatrix.from_rows([[[1, 1], 0], [0, [1, 1]]], GF2)
    assert smith_form(P) == (Poly((1, 1), GF2), Poly((1, 1), GF2))


def test_eigenstructure_of_a_scalar_s():
    E = eigenstructure(PolyMatrix.from_rows([[S]], GF2))
    assert E.rank == 1
    assert E.degree == 1
    assert E.hom_factors == (HomogPoly(Poly.monomial(1, GF2), 0),)
    assert E.col_indices == () and E.row_indices == ()


def test_eigenstructure_of_nilpotent_pencil():
    E = eigenstructure(PolyMatrix.from_rows([[1, S], [0, 1]], Q))
    assert infinite_multiplicities(PolyMatrix.from_rows([[1, S], [0, 1]], Q)) == (0, 2)
    assert E.hom_factors == (unit_factor(Q), unit_factor(Q, 2))
    assert E.index_sum() == E.rank * E.degree


def test_minimal_indices_of_a_row_pencil():
    P = PolyMatrix.from_rows([[S, 1]], Q)
    indices = minimal_indices(P)
    assert indices.col == (1,)
    assert indices.row == ()
    B = basis_matrix(indices.right_basis, P.cols, Q)
    assert (P * B).is_zero
    assert is_column_reduced(B)


def test_minimal_indices_of_a_column():
    P = PolyMatrix.from_rows([[S], [[0, 0, 1]]], Q)
    E = eigenstructure(P)
    assert E.col_indices == ()
    assert E.row_indices == (1,)
    assert E.hom_factors == (HomogPoly(Poly.monomial(1, Q), 0),)


def test_eigenstructure_rejects_zero_matrix():
    with pytest.raises(ZeroMatrixError):
        eigenstructure(PolyMatrix.zeros(1, 2, GF3))


def test_eigenstructure_validation():
    with pytest.raises(InconsistentTargetError):
        Eigenstructure(1, 1, (unit_factor(Q),), (0,), (), (1, 1), Q)
    with pytest.raises(InconsistentTargetError):
        Eigenstructure(1, 2, (HomogPoly(Poly.monomial(1, Q), 0), unit_factor(Q)), (), (), (2, 2), Q)


def test_companion_form():
    P = PolyMatrix.from_rows([[[1, 0, 1]]], Q)
    assert companion_form(P) == PolyMatrix.from_rows([[S, 1], [-1, S]], Q)
    pencil = PolyMatrix.from_rows([[S, 1]], Q)
    assert companion_form(pencil) == pencil
    with pytest.raises(DomainError):
        companion_form(PolyMatrix.from_rows([[1]], Q))


def test_structured_pencil():
    L = structured_pencil(1, 2, Q)
    assert L == PolyMatrix.from_rows([[-1, S]], Q)
    assert eigenstructure(L).col_indices == (1,)
    with pytest.raises(DomainError):
        structured_pencil(2, 1, Q)


def test_stack_rows():
    P = PolyMatrix.from_rows([[S, 1]], Q)
    W = PolyMatrix.from_rows([[0, 1]], Q)
    assert stack_rows(P, W) == PolyMatrix.from_rows([[S, 1], [0, 1]], Q)
    with pytest.raises(LengthMismatchError):
        stack_rows(P, PolyMatrix.from_rows([[1]], Q))


#------------------------------ Properties ----------------------------------

@st.composite
def small_matrices(draw, field, max_deg=2, max_size=2, shape=None):
    rows, cols = shape or (draw(st.integers(min_value=1, max_value=max_size)),
                           draw(st.integers(min_value=1, max_value=max_size)))
    if field.is_rational:
        scalars = st.integers(min_value=-2, max_value=2)
    else:
        scalars = st.integers(min_value=0, max_value=field.characteristic - 1)
    entry = st.lists(scalars, min_size=1, max_size=max_deg + 1)
    return PolyMatrix.from_rows(
        [[draw(entry) for _ in range(cols)] for _ in range(rows)], field, cols=cols)


fields = st.sampled_from([Q, GF2, GF3])


@given(fields.flatmap(small_matrices))
def test_index_sum_theorem(P):
    assume(not P.is_zero)
    E = eigenstructure(P)
    assert E.index_sum() == E.rank * E.degree
    assert len(E.col_indices) == P.cols - E.rank
    assert len(E.row_indices) == P.rows - E.rank


@given(fields.flatmap(small_matrices))
def test_minimal_bases_annihilate(P):
    assume(not P.is_zero)
    indices = minimal_indices(P)
    right = basis_matrix(indices.right_basis, P.cols, P.field)
    left = basis_matrix(indices.left_basis, P.rows, P.field)
    assert (P * right).is_zero
    assert (left.transpose() * P).is_zero
    if right.cols:
        assert is_column_reduced(right)


@given(fields.flatmap(small_matrices))
def test_companion_form_matches_predicted_structure(P):
    assume(not P.is_zero and degree_of(P) >= 1)
    assert eigenstructure(companion_form(P)) == companion_transform(eigenstructure(P))


def test_small_examples():
    assert rank_of(PolyMatrix.from_rows([[S, 1], [[0, 0, 1], S]], Q)) == 1
    assert rank_of(PolyMatrix.zeros(2, 2, Q)) == 0
    assert reversal(PolyMatrix.from_rows([[[1, 0, 1]]], Q)) == PolyMatrix.from_rows([[[1, 0, 1]]], Q)
    assert reversal(PolyMatrix.from_rows([[S, 1]], Q)) == PolyMatrix.from_rows([[1, S]], Q)
    assert reversal(PolyMatrix.from_rows([[3]], Q)) == PolyMatrix.from_rows([[3]], Q)
    assert smith_form(PolyMatrix.from_rows([[S, 1], [0, S]], Q)) == (Poly.one(Q), Poly.monomial(2, Q))
    assert smith_form(PolyMatrix.from_rows([[S, 0], [0, [0, 0, 1]]], Q)) == (Poly.monomial(1, Q), Poly.monomial(2, Q))
    zero = minimal_indices(PolyMatrix.zeros(1, 1, Q))
    assert (zero.col, zero.row) == ((0,), (0,))


def test_companion_form_of_quadratics():
    assert companion_form(PolyMatrix.from_rows([[[0, 0, 1]]], Q)) == PolyMatrix.from_rows([[S, 0], [-1, S]], Q)
    assert companion_form(PolyMatrix.from_rows([[[1, 1, 1]]], Q)) == PolyMatrix.from_rows([[[1, 1], 1], [-1, S]], Q)
    E = eigenstructure(PolyMatrix.from_rows([[[0, 0, 1]]], Q))
    assert E.hom_factors == (HomogPoly(Poly.monomial(2, Q), 0),)
    assert companion_transform(E).hom_factors == (unit_factor(Q), HomogPoly(Poly.monomial(2, Q), 0))


def permute_columns(P, order):
    return PolyMatrix(P.rows, P.cols, tuple(tuple(row[j] for j in order) for row in P.entries), P.field)


@given(fields.flatmap(small_matrices))
def test_reversal_keeps_rank(P):
    assume(not P.is_zero)
    assert rank_of(reversal(P)) == rank_of(P)


@given(fields.flatmap(small_matrices), st.data())
def test_column_permutation_keeps_the_eigenstructure(P, data):
    assume(not P.is_zero)
    order = data.draw(st.permutations(range(P.cols)))
    permuted = minimal_indices(permute_columns(P, order))
    original = minimal_indices(P)
    assert (permuted.col, permuted.row) == (original.col, original.row)
    assert eigenstructure(permute_columns(P, order)) == eigenstructure(P)


@st.composite
def same_shape_pairs(draw):
    field = draw(fields)
    P = draw(small_matrices(field))
    if draw(st.booleans()):
        return P, permute_columns(P, draw(st.permutations(range(P.cols))))
    return P, draw(small_matrices(field, shape=(P.rows, P.cols)))


@given(same_shape_pairs())
def test_companion_forms_separate_exactly_the_matrices_they_should(pair):
    P, R = pair
    assume(not P.is_zero and not R.is_zero)
    assume(degree_of(P) == degree_of(R) >= 1)
    same = eigenstructure(P) == eigenstructure(R)
    assert same == (eigenstructure(companion_form(P)) == eigenstructure(companion_form(R)))


@pytest.mark.slow
@pytest.mark.parametrize("field", [Q, GF2, GF3], ids=str)
def test_index_sum_theorem_up_to_three_by_three(field):
    @settings(max_examples=1000)
    @given(small_matrices(field, max_deg=3, max_size=3))
    def index_sum_holds(P):
        assume(not P.is_zero)
        E = eigenstructure(P)
        assert E.index_sum() == E.rank * E.degree

    index_sum_holds()


@pytest.mark.slow
@settings(max_examples=300)
@given(fields.flatmap(lambda field: small_matrices(field, max_deg=3, max_size=3)))
def test_companion_form_up_to_degree_three(P):
    assume(not P.is_zero and degree_of(P) >= 1)
    assert eigenstructure(companion_form(P)) == companion_transform(eigenstructure(P))
