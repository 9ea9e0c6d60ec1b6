"""Exact multivariate polynomials over Q in the simple-root symbols.

Arithmetic runs in sympy's sparse polynomial ring QQ[a1, ..., an] with
graded lexicographic order. `RationalPoly` wraps one ring element and
speaks `Fraction` at its boundary. Monomials of a fixed degree are listed
in descending grlex order (`a1^d` first), which fixes the column order of
every linear system built from polynomial coefficients.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .exceptions import ValidationError

logger = logging.getLogger(__name__)

ZERO_DEGREE = -1


def to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


@lru_cache(maxsize=None)
def root_ring(nvars):
    """QQ[a1, ..., a_nvars] with grlex order."""
    names = ",".join(f"a{i + 1}" for i in range(nvars))
    return ring(names, QQ, grlex)[0]


@lru_cache(maxsize=None)
def monomials(nvars, degree):
    """Exponent tuples of total degree `degree`, grlex descending."""
    if degree < 0:
        return ()
    result = []
    for chosen in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for variable in chosen:
            exponents[variable] += 1
        result.append(tuple(exponents))
    return tuple(sorted(result, key=grlex, reverse=True))


def monomial_count(nvars, degree):
    return len(monomials(nvars, degree))


class RationalPoly:
    """Polynomial with exact rational coefficients, backed by a sympy
    `PolyElement` of `root_ring(nvars)`."""

    __slots__ = ('nvars', 'element')

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        cleaned = {}
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != nvars:
                raise ValidationError(
                    "bad_monomial",
                    f"exponent vector {exponents} does not have {nvars} "
                    "entries",
                )
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[tuple(exponents)] = to_qq(coefficient)
        self.element = root_ring(nvars).from_dict(cleaned)

    @classmethod
    def from_element(cls, element):
        poly = cls.__new__(cls)
        poly.nvars = element.ring.ngens
        poly.element = element
        return poly

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index):
        return cls.from_element(root_ring(nvars).gens[index])

    @classmethod
    def linear(cls, coefficients):
        """Linear form sum(c_j * a_j), e.g. a root in simple coordinates."""
        nvars = len(coefficients)
        terms = {}
        for index, coefficient in enumerate(coefficients):
            exponents = [0] * nvars
            exponents[index] = 1
            terms[tuple(exponents)] = coefficient
        return cls(nvars, terms)

    @classmethod
    def from_coefficients(cls, nvars, degree, vector):
        """Homogeneous polynomial from its grlex coefficient vector."""
        return cls(nvars, dict(zip(monomials(nvars, degree), vector)))

    @property
    def terms(self):
        return {m: from_qq(c) for m, c in self.element.items()}

    def is_zero(self):
        return not self.element

    @property
    def degree(self):
        if not self.element:
            return ZERO_DEGREE
        return max(sum(exponents) for exponents in self.element.itermonoms())

    def is_homogeneous(self):
        return len({sum(e) for e in self.element.itermonoms()}) <= 1

    def coefficient(self, exponents):
        return from_qq(self.element.get(tuple(exponents), QQ.zero))

    def coefficient_vector(self, degree):
        return [self.coefficient(m) for m in monomials(self.nvars, degree)]

    def evaluate(self, values):
        if not self.nvars:
            return self.coefficient(())
        return from_qq(self.element(*[to_qq(value) for value in values]))

    def _coerce(self, other):
        if not isinstance(other, RationalPoly):
            return RationalPoly.constant(self.nvars, other)
        if self.nvars != other.nvars:
            raise ValidationError(
                "variable_mismatch",
                f"cannot combine polynomials in {self.nvars} and "
                f"{other.nvars} variables",
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return RationalPoly.from_element(self.element + other.element)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly.from_element(-self.element)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return RationalPoly.from_element(
                self.element.mul_ground(to_qq(other))
            )
        other = self._coerce(other)
        return RationalPoly.from_element(self.element * other.element)

    __rmul__ = __mul__

    def __pow__(self, power):
        return RationalPoly.from_element(self.element ** power)

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            if isinstance(other, (int, Fraction)):
                other = RationalPoly.constant(self.nvars, other)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.element == other.element

    def __hash__(self):
        return hash((self.nvars, frozenset(self.element.items())))

    def substitute(self, index, replacement):
        """Replace variable `index` by the polynomial `replacement`."""
        replacement = self._coerce(replacement)
        generator = root_ring(self.nvars).gens[index]
        return RationalPoly.from_element(
            self.element.compose(generator, replacement.element)
        )

    def __repr__(self):
        return str(self.element)


def _elimination(form):
    """Variable to eliminate and the linear polynomial it equals on the
    hyperplane `form == 0`."""
    form = tuple(Fraction(c) for c in form)
    index = next((i for i, c in enumerate(form) if c), None)
    if index is None:
        raise ValidationError(
            "zero_linear_form", "divisibility by the zero form is undefined"
        )
    replacement = RationalPoly.linear(
        [
            0 if j == index else -c / form[index]
            for j, c in enumerate(form)
        ]
    )
    return index, replacement


def is_divisible(p, form):
    """True iff the polynomial `p` is a multiple of the linear form `form`.

    Args:
        p: RationalPoly
        form: coefficient sequence of the linear form (or a linear
            RationalPoly), e.g. a positive root in simple coordinates
    """
    if isinstance(form, RationalPoly):
        form = [form.coefficient(m) for m in monomials(form.nvars, 1)]
    index, replacement = _elimination(form)
    return p.substitute(index, replacement).is_zero()


@lru_cache(maxsize=None)
def divisibility_conditions(form, degree):
    """Rows of the linear conditions on grlex coefficients of a homogeneous
    degree-`degree` polynomial expressing divisibility by `form`.

    The remainder on the hyperplane `form == 0` is homogeneous of the same
    degree in the remaining variables; each of its coefficients is one row.
    """
    nvars = len(form)
    index, replacement = _elimination(form)
    images = [
        RationalPoly(nvars, {m: 1}).substitute(index, replacement)
        for m in monomials(nvars, degree)
    ]
    targets = [m for m in monomials(nvars, degree) if m[index] == 0]
    return tuple(
        tuple(image.coefficient(target) for image in images)
        for target in targets
    )
