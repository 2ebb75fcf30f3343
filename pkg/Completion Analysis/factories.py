import json
from abc import ABC, abstractmethod

from algebra import FieldTag, HomogPoly, Poly
from errors import InconsistentTargetError, InputError, ParseError
from feasibility import CompletionTarget
from polymatrix import Eigenstructure, PolyMatrix
from settings.settings import DEFAULT_FIELD


def load_json(path):
    try:
        with open(path, encoding="utf-8") as json_file:
            return json.load(json_file)
    except json.JSONDecodeError as error:
        raise ParseError("malformed JSON in {}: {}".format(path, error.msg),
                         position="line {} column {}".format(error.lineno, error.colno))
    except OSError as error:
        raise InputError("cannot read {}: {}".format(path, error.strerror))


def _require(json_data, key, kind):
    if not isinstance(json_data, dict):
        raise ParseError("{} must be a JSON object".format(kind))
    if key not in json_data:
        raise ParseError("{} is missing '{}'".format(kind, key))
    return json_data[key]


def _int_list(raw, kind):
    if not isinstance(raw, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in raw):
        raise ParseError("{} must be a list of integers, got {!r}".format(kind, raw))
    return tuple(raw)


def _count(raw, kind):
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
        raise ParseError("{} must be a nonnegative integer, got {!r}".format(kind, raw))
    return raw


#------------------------------ Field / Polynomial Factories ----------------------------------

class JSONFactory(ABC):

    def __init__(self, json_data):
        self.json_data = json_data

    @abstractmethod
    def create(self):
        pass


class FieldTagJSONFactory(JSONFactory):
    """Field from a document's "field" key; the caller's default must agree with it."""

    def __init__(self, json_data, default=None):
        super(FieldTagJSONFactory, self).__init__(json_data)
        self.default = default

    def create(self):
        raw = self.json_data.get("field") if isinstance(self.json_data, dict) else None
        if raw is None:
            return FieldTag.parse(self.default if self.default is not None else DEFAULT_FIELD)
        field = FieldTag.parse(raw)
        if self.default is not None:
            FieldTag.parse(self.default).check_same(field)
        return field


class HomogPolyJSONFactory(JSONFactory):

    def __init__(self, json_data, field):
        super(HomogPolyJSONFactory, self).__init__(json_data)
        self.field = field

    def create(self):
        alpha = Poly.from_json(_require(self.json_data, "alpha", "homogeneous factor"), self.field)
        e = _count(_require(self.json_data, "e", "homogeneous factor"), "e")
        if not alpha.is_monic:
            raise InconsistentTargetError("alpha must be monic, got {}".format(alpha))
        return HomogPoly(alpha, e)


#------------------------------ Matrix / Eigenstructure Factories ----------------------------------

class PolyMatrixJSONFactory(JSONFactory):

    def __init__(self, json_data, field=None):
        super(PolyMatrixJSONFactory, self).__init__(json_data)
        self.field = field

    def create(self):
        field = FieldTagJSONFactory(self.json_data, self.field).create()
        rows = _count(_require(self.json_data, "rows", "matrix"), "rows")
        cols = _count(_require(self.json_data, "cols", "matrix"), "cols")
        if rows == 0 or cols == 0:
            raise ParseError("matrix dimensions must be positive, got {}x{}".format(rows, cols))
        entries = _require(self.json_data, "entries", "matrix")
        if not isinstance(entries, list) or any(not isinstance(row, list) for row in entries):
            raise ParseError("entries must be a list of rows")
        return PolyMatrix(rows, cols, tuple(tuple(Poly.from_json(e, field) for e in row) for row in entries), field)


class EigenstructureJSONFactory(JSONFactory):

    def __init__(self, json_data, field=None):
        super(EigenstructureJSONFactory, self).__init__(json_data)
        self.field = field

    def create(self):
        field = FieldTagJSONFactory(self.json_data, self.field).create()
        rows = _count(_require(self.json_data, "rows", "eigenstructure"), "rows")
        cols = _count(_require(self.json_data, "cols", "eigenstructure"), "cols")
        return Eigenstructure(
            degree=_count(_require(self.json_data, "degree", "eigenstructure"), "degree"),
            rank=_count(_require(self.json_data, "rank", "eigenstructure"), "rank"),
            hom_factors=_hom_factors(_require(self.json_data, "hom_factors", "eigenstructure"), field),
            col_indices=_int_list(_require(self.json_data, "col_indices", "eigenstructure"), "col_indices"),
            row_indices=_int_list(_require(self.json_data, "row_indices", "eigenstructure"), "row_indices"),
            dims=(rows, cols),
            field=field,
        )


class CompletionTargetJSONFactory(JSONFactory):
    """Partial target: every key except rank is optional."""

    def __init__(self, json_data, z, field=None):
        super(CompletionTargetJSONFactory, self).__init__(json_data)
        self.z = z
        self.field = field

    def create(self):
        field = FieldTagJSONFactory(self.json_data, self.field).create()
        data = self.json_data
        rank = _count(_require(data, "rank", "target"), "rank")
        z = self.z if self.z is not None else _count(_require(data, "z", "target"), "z")
        finite = data.get("finite_factors")
        if finite is not None:
            if not isinstance(finite, list):
                raise ParseError("finite_factors must be a list of polynomials")
            finite = tuple(Poly.from_json(beta, field) for beta in finite)
        infinite = data.get("infinite_multiplicities")
        return CompletionTarget(
            z=z,
            rank=rank,
            hom_factors=_hom_factors(data["hom_factors"], field) if data.get("hom_factors") is not None else None,
            finite_factors=finite,
            infinite_multiplicities=_int_list(infinite, "infinite_multiplicities") if infinite is not None else None,
            col_indices=_int_list(data["col_indices"], "col_indices") if data.get("col_indices") is not None else None,
            row_indices=_int_list(data["row_indices"], "row_indices") if data.get("row_indices") is not None else None,
            field=field,
        )


def _hom_factors(raw, field):
    if not isinstance(raw, list):
        raise ParseError("hom_factors must be a list")
    return tuple(HomogPolyJSONFactory(item, field).create() for item in raw)


class DocumentJSONFactory(JSONFactory):

    def __init__(self, json_data, kind, **options):
        super(DocumentJSONFactory, self).__init__(json_data)
        self.kind = kind
        self.options = options

    def create(self):
        document_factories = {
            'matrix': PolyMatrixJSONFactory,
            'eigenstructure': EigenstructureJSONFactory,
            'target': CompletionTargetJSONFactory,
        }

        return document_factories[self.kind](self.json_data, **self.options).create()
