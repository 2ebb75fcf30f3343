from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

import regex as re
from sympy import GF, QQ, Symbol, isprime

from errors import (
    DomainError,
    FieldMismatchError,
    InputError,
    ParseError,
    ZeroPolynomialError,
)

INDETERMINATE = Symbol("s")

_FIELD_PATTERN = re.compile(
    r"^\s*(?:(?P<rationals>Q|QQ)|(?:GF|gf|F|f)\s*\(?\s*(?P<p>\d+)\s*\)?)\s*$"
)
_RATIONAL_PATTERN = re.compile(
    r"^\s*(?P<sign>[-+\N{MINUS SIGN}])?\s*(?P<num>\d+)\s*(?:/\s*(?P<den>\d+))?\s*$"
)


#------------------------------ Extended Integers ----------------------------------

@total_ordering
class Infinity:
    """Signed infinity comparable with int; used for out-of-range sequence entries."""

    __slots__ = ("sign",)

    def __init__(self, sign):
        self.sign = 1 if sign > 0 else -1

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        if isinstance(other, (int, Fraction)):
            return self.sign < 0
        return NotImplemented

    def __hash__(self):
        return hash(("Infinity", self.sign))

    def __neg__(self):
        return NEG_INF if self.sign > 0 else POS_INF

    def __repr__(self):
        return "+inf" if self.sign > 0 else "-inf"


POS_INF = Infinity(1)
NEG_INF = Infinity(-1)


#------------------------------ Fields ----------------------------------

@lru_cache(maxsize=None)
def _sympy_domains(characteristic):
    ground = QQ if characteristic == 0 else GF(characteristic)
    return ground, ground[INDETERMINATE]


@dataclass(frozen=True)
class FieldTag:
    """Q when characteristic is 0, otherwise the prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (not isinstance(p, int) or p < 2 or not isprime(p)):
            raise InputError("GF(p) requires a prime p, got {}".format(p))

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        return cls(int(p))

    @classmethod
    def parse(cls, raw):
        if isinstance(raw, FieldTag):
            return raw
        if isinstance(raw, dict):
            if set(raw) != {"GF"}:
                raise ParseError("field object must be {{\"GF\": p}}, got {}".format(raw))
            return cls.prime(cls._as_int(raw["GF"]))
        if isinstance(raw, str):
            match = _FIELD_PATTERN.match(raw)
            if match is None:
                raise ParseError("unknown field tag {!r}".format(raw))
            if match.group("rationals"):
                return cls.rationals()
            return cls.prime(int(match.group("p")))
        raise ParseError("unknown field tag {!r}".format(raw))

    @staticmethod
    def _as_int(raw):
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ParseError("expected an integer, got {!r}".format(raw))
        return raw

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def zero(self):
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rational else 1

    @property
    def domain(self):
        """sympy ground domain, QQ or GF(p)."""
        return _sympy_domains(self.characteristic)[0]

    @property
    def poly_domain(self):
        """sympy polynomial ring domain K[s]."""
        return _sympy_domains(self.characteristic)[1]

    def __str__(self):
        return "Q" if self.is_rational else "GF({})".format(self.characteristic)

    def check_same(self, other):
        if self != other:
            raise FieldMismatchError(self, other)

    def normalize(self, value):
        if self.is_rational:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DomainError("{} has no image in {}".format(value, self))
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def to_domain(self, value):
        value = self.normalize(value)
        if self.is_rational:
            return self.domain(value.numerator, value.denominator)
        return self.domain(value)

    def from_domain(self, value):
        value = self.domain.to_sympy(value)
        if self.is_rational:
            return Fraction(int(value.p), int(value.q))
        return int(value) % self.characteristic

    def elements(self):
        if self.is_rational:
            raise DomainError("Q has no finite element enumeration")
        return range(self.characteristic)

    def parse_scalar(self, raw):
        if isinstance(raw, bool):
            raise ParseError("expected a scalar, got {!r}".format(raw))
        if isinstance(raw, int):
            value = raw
        elif isinstance(raw, str):
            match = _RATIONAL_PATTERN.match(raw)
            if match is None:
                raise ParseError("malformed scalar {!r}".format(raw))
            value = Fraction(int(match.group("num")), int(match.group("den") or 1))
            if match.group("sign") not in (None, "+"):
                value = -value
        else:
            raise ParseError("expected a scalar, got {!r}".format(raw))
        if not self.is_rational:
            if not isinstance(value, int) or not 0 <= value < self.characteristic:
                raise ParseError("{} residues must be integers in [0, {}), got {!r}".format(
                    self, self.characteristic, raw))
        return self.normalize(value)

    def emit_scalar(self, value):
        if self.is_rational and value.denominator != 1:
            return "{}/{}".format(value.numerator, value.denominator)
        return int(value)

    def to_json(self):
        return "Q" if self.is_rational else {"GF": self.characteristic}


#------------------------------ Polynomials ----------------------------------

@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial, coefficients in ascending degree.

    Ring arithmetic runs on sympy ring elements of field[s]; the coefficient
    tuple is the canonical value used for equality, hashing and JSON.
    """

    coeffs: tuple
    field: FieldTag

    def __post_init__(self):
        values = [self.field.normalize(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def zero(cls, field):
        return cls((), field)

    @classmethod
    def one(cls, field):
        return cls((1,), field)

    @classmethod
    def constant(cls, value, field):
        return cls((value,), field)

    @classmethod
    def monomial(cls, k, field, coeff=1):
        return cls((0,) * k + (coeff,), field)

    @classmethod
    def from_element(cls, element, field):
        return cls(tuple(field.from_domain(c) for c in reversed(element.to_dense())), field)

    @classmethod
    def from_json(cls, raw, field):
        if not isinstance(raw, list):
            raise ParseError("polynomial must be a coefficient list, got {!r}".format(raw))
        return cls(tuple(field.parse_scalar(c) for c in raw), field)

    def to_json(self):
        return [self.field.emit_scalar(c) for c in self.coeffs]

    @property
    def element(self):
        ring = self.field.poly_domain.ring
        return ring.from_list([self.field.to_domain(c) for c in reversed(self.coeffs)])

    @property
    def degree(self):
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def _coerce(self, other):
        if isinstance(other, Poly):
            self.field.check_same(other.field)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other, self.field)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly.from_element(self.element + other.element, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly.from_element(-self.element, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly.from_element(self.element - other.element, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly.from_element(self.element * other.element, self.field)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        quotient, remainder = self.element.div(other.element)
        return Poly.from_element(quotient, self.field), Poly.from_element(remainder, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, value):
        return self * Poly.constant(value, self.field)

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no monic associate")
        return Poly.from_element(self.element.monic(), self.field)

    def shift(self, k):
        """Multiply by s^k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs, self.field)

    def reverse(self, d):
        """t^d p(1/t); requires degree <= d."""
        if self.degree > d:
            raise DomainError("cannot reverse degree {} polynomial at degree {}".format(self.degree, d))
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return Poly(tuple(reversed(padded)), self.field)

    def multiplicity_at_zero(self):
        if self.is_zero:
            raise ZeroPolynomialError("multiplicity of s in the zero polynomial is undefined")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def divides(self, other):
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            monomial = "" if k == 0 else ("s" if k == 1 else "s^{}".format(k))
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            else:
                terms.append("{}*{}".format(c, monomial))
        return " + ".join(terms)


def poly_gcd(p, q):
    p.field.check_same(q.field)
    if p.is_zero and q.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    return Poly.from_element(p.element.gcd(q.element), p.field).monic()


def poly_lcm(p, q):
    p.field.check_same(q.field)
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("lcm with the zero polynomial is undefined")
    return Poly.from_element(p.element.lcm(q.element), p.field).monic()


#------------------------------ Homogeneous Invariant Factors ----------------------------------

@dataclass(frozen=True)
class HomogPoly:
    """t^e * t^deg(alpha) * alpha(s/t); alpha must already be monic."""

    alpha: Poly
    e: int

    def __post_init__(self):
        if self.alpha.is_zero or not self.alpha.is_monic:
            raise InputError("finite part must be a nonzero monic polynomial, got {}".format(self.alpha))
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 0:
            raise InputError("infinite multiplicity must be a nonnegative integer, got {!r}".format(self.e))

    @classmethod
    def unit(cls, field):
        return cls(Poly.one(field), 0)

    @property
    def field(self):
        return self.alpha.field

    @property
    def degree(self):
        return self.e + self.alpha.degree

    @property
    def is_unit(self):
        return self.e == 0 and self.alpha.degree == 0

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "e": self.e}

    def __str__(self):
        return "({}, {})".format(self.alpha, self.e)


class HomogSentinel:
    """Index-convention values: ONE below the chain, ZERO above it."""

    __slots__ = ("name", "e")

    def __init__(self, name, e):
        self.name = name
        self.e = e

    @property
    def degree(self):
        if self.e == POS_INF:
            raise DomainError("the zero sentinel has no degree")
        return 0

    @property
    def is_unit(self):
        return self.e == 0

    def __repr__(self):
        return self.name


ONE = HomogSentinel("ONE", 0)
ZERO = HomogSentinel("ZERO", POS_INF)


def homog_divides(phi, psi):
    if phi is ONE or psi is ZERO:
        return True
    if phi is ZERO:
        return False
    if psi is ONE:
        return phi.is_unit
    phi.field.check_same(psi.field)
    return phi.e <= psi.e and phi.alpha.divides(psi.alpha)


def homog_lcm(phi, psi):
    if phi is ONE:
        return psi
    if psi is ONE:
        return phi
    if phi is ZERO or psi is ZERO:
        raise DomainError("lcm with the zero sentinel is undefined")
    phi.field.check_same(psi.field)
    return HomogPoly(poly_lcm(phi.alpha, psi.alpha), max(phi.e, psi.e))


def homog_deg(phi):
    return phi.degree


def chain_at(chain, i):
    """1-based access with ONE for i < 1 and ZERO past the end."""
    if i < 1:
        return ONE
    if i > len(chain):
        return ZERO
    return chain[i - 1]


def is_divisibility_chain(chain):
    return all(homog_divides(chain[i], chain[i + 1]) for i in range(len(chain) - 1))
