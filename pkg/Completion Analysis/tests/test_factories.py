from fractions import Fraction

import pytest

from algebra import FieldTag, HomogPoly, Poly
from errors import FieldMismatchError, InconsistentTargetError, ParseError
from factories import DocumentJSONFactory
from feasibility import CompletionTarget
from renderer import CompletionTargetJSONRenderer, EigenstructureJSONRenderer

Q = FieldTag.rationals()
GF3 = FieldTag.prime(3)


def test_matrix_document():
    P = DocumentJSONFactory({"field": "GF(3)", "rows": 1, "cols": 2, "entries": [[[0, 1], [2]]]}, "matrix").create()
    assert P.field == GF3
    assert P[0, 1] == Poly.constant(2, GF3)


def test_matrix_document_errors():
    with pytest.raises(ParseError):
        DocumentJSONFactory([], "matrix").create()
    with pytest.raises(ParseError):
        DocumentJSONFactory({"rows": 1, "cols": 1}, "matrix").create()
    with pytest.raises(ParseError):
        DocumentJSONFactory({"rows": 1, "cols": 1, "entries": [[["x"]]]}, "matrix").create()
    with pytest.raises(FieldMismatchError):
        DocumentJSONFactory({"field": "Q", "rows": 1, "cols": 1, "entries": [[[1]]]}, "matrix", field="gf2").create()


def test_target_document():
    data = {"z": 2, "rank": 1, "hom_factors": [{"alpha": ["1/2", 1], "e": 0}], "row_indices": [1, 0]}
    target = DocumentJSONFactory(data, "target", z=None, field=Q).create()
    assert target.z == 2
    assert target.hom_factors == (HomogPoly(Poly((Fraction(1, 2), 1), Q), 0),)
    assert target.col_indices is None
    assert target.row_indices == (1, 0)


def test_target_document_errors():
    with pytest.raises(ParseError):
        DocumentJSONFactory("rank", "target", z=1).create()
    with pytest.raises(ParseError):
        DocumentJSONFactory({"hom_factors": []}, "target", z=1).create()
    with pytest.raises(InconsistentTargetError):
        DocumentJSONFactory({"rank": 1, "hom_factors": [{"alpha": [0, 2], "e": 0}]}, "target", z=1).create()
    with pytest.raises(ParseError):
        DocumentJSONFactory({"rank": 1, "row_indices": [1.5]}, "target", z=1).create()


def test_eigenstructure_document_roundtrips_through_renderer():
    data = {"field": "Q", "rows": 2, "cols": 2, "degree": 1, "rank": 2,
            "hom_factors": [{"alpha": [1], "e": 0}, {"alpha": [1], "e": 2}],
            "col_indices": [], "row_indices": []}
    structure = DocumentJSONFactory(data, "eigenstructure").create()
    assert EigenstructureJSONRenderer(structure).render() == data


def test_target_renderer_keeps_prescribed_fields_only():
    target = CompletionTarget(z=1, rank=1, infinite_multiplicities=(0,))
    assert CompletionTargetJSONRenderer(target).render() == {"z": 1, "rank": 1, "infinite_multiplicities": [0]}
