"""Exact rational dense linear algebra on top of sympy's `DomainMatrix`.

Matrices are lists of rows of anything `Fraction` accepts. Elimination runs
in `DomainMatrix` over QQ and results come back as `Fraction` entries.
Reduced echelon form is unique, so subspaces stored as
`LinearSolutionSpace` compare equal exactly when they are equal.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.solvers.simplex import InfeasibleLPError, linprog

from .exceptions import ValidationError

logger = logging.getLogger(__name__)


def _rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _fraction(value):
    return Fraction(int(value.p), int(value.q))


def domain_matrix(rows):
    """Nonempty list of rows as a DomainMatrix over QQ."""
    return DomainMatrix.from_Matrix(
        Matrix([[_rational(x) for x in row] for row in rows])
    ).convert_to(QQ)


def to_rows(matrix):
    return [
        [_fraction(x) for x in row] for row in matrix.to_Matrix().tolist()
    ]


def rref(rows, ncols=None):
    """Reduced row echelon form of `rows`.

    Args:
        rows: iterable of equal-length rational rows
        ncols: number of columns, required when `rows` is empty

    Returns:
        (reduced, pivots): the nonzero rows of the reduced echelon form as
        tuples of Fractions, and the pivot column of each row
    """
    rows = [list(row) for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or not ncols:
        return [], []
    reduced, pivots = domain_matrix(rows).rref()
    entries = to_rows(reduced)
    return [tuple(entries[k]) for k in range(len(pivots))], list(pivots)


@dataclass(frozen=True)
class LinearSolutionSpace:
    """A subspace of Q^ambient_dim, held by its reduced echelon basis."""

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, ambient_dim, vectors):
        reduced, pivots = rref(list(vectors), ambient_dim)
        return cls(ambient_dim, tuple(reduced), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, (), ())

    @classmethod
    def whole(cls, ambient_dim):
        return cls.span(
            ambient_dim,
            [
                [1 if i == j else 0 for j in range(ambient_dim)]
                for i in range(ambient_dim)
            ],
        )

    @property
    def dimension(self):
        return len(self.basis)

    def reduce(self, vector):
        """Remainder of `vector` after clearing the pivot columns."""
        remainder = [Fraction(x) for x in vector]
        for row, column in zip(self.basis, self.pivots):
            factor = remainder[column]
            if factor:
                remainder = [x - factor * y for x, y in zip(remainder, row)]
        return remainder

    def contains(self, vector):
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Coefficients of `vector` in the echelon basis, or None."""
        if not self.contains(vector):
            return None
        return [Fraction(vector[column]) for column in self.pivots]

    def __add__(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValidationError(
                "dimension_mismatch", "cannot add subspaces of different "
                "ambient spaces",
            )
        return LinearSolutionSpace.span(
            self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def intersection_dimension(self, other):
        return self.dimension + other.dimension - (self + other).dimension

    def project(self, coordinates):
        """Image under the coordinate projection onto `coordinates`."""
        return LinearSolutionSpace.span(
            len(coordinates),
            [[row[c] for c in coordinates] for row in self.basis],
        )

    def subspace_where_zero(self, coordinates):
        """All vectors of the space vanishing on the given coordinates."""
        if not coordinates or not self.basis:
            return self
        # unknowns: one coefficient per basis vector
        system = [[row[c] for row in self.basis] for c in coordinates]
        _, null = rank_and_nullspace(system, ncols=self.dimension)
        vectors = [
            [
                sum(t * row[k] for t, row in zip(combination, self.basis))
                for k in range(self.ambient_dim)
            ]
            for combination in null.basis
        ]
        return LinearSolutionSpace.span(self.ambient_dim, vectors)


def rank_and_nullspace(matrix, ncols=None):
    """Exact rank and canonical nullspace of a rational matrix.

    Returns:
        (rank, LinearSolutionSpace) where the space is the right kernel
    """
    matrix = [list(row) for row in matrix]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix or not ncols:
        return 0, LinearSolutionSpace.whole(ncols)
    dm = domain_matrix(matrix)
    rank = dm.rank()
    generators = to_rows(dm.nullspace()) if rank < ncols else []
    logger.debug(
        "Eliminated {}x{} system: rank {}, nullity {}".format(
            len(matrix), ncols, rank, ncols - rank
        )
    )
    return rank, LinearSolutionSpace.span(ncols, generators)


def solve(columns, target):
    """Coefficients t with sum(t_k * columns[k]) == target, or None.

    The columns are expected to be linearly independent; the solution is
    then unique.
    """
    target = [Fraction(x) for x in target]
    if not columns:
        return [] if not any(target) else None
    augmented = [
        [column[i] for column in columns] + [target[i]]
        for i in range(len(target))
    ]
    reduced, pivots = rref(augmented, len(columns) + 1)
    if len(columns) in pivots:
        return None
    solution = [Fraction(0)] * len(columns)
    for row, column in zip(reduced, pivots):
        solution[column] = row[-1]
    return solution


def inverse(matrix):
    try:
        return to_rows(domain_matrix(matrix).inv())
    except DMNonInvertibleMatrixError:
        raise ValidationError("singular_matrix", "matrix is not invertible")


def determinant(matrix):
    if not matrix:
        return Fraction(1)
    det = domain_matrix(matrix).det()
    return Fraction(int(det.numerator), int(det.denominator))


def is_convex_combination(point, others):
    """Decide exactly whether `point` lies in the convex hull of `others`.

    Feasibility of weights t >= 0 with sum(t) == 1 and
    sum(t_k * others[k]) == point, as an exact linear program.
    """
    if not others:
        return False
    equalities = [
        [_rational(q[k]) for q in others] for k in range(len(point))
    ]
    equalities.append([Rational(1)] * len(others))
    rhs = [_rational(x) for x in point] + [Rational(1)]
    # each equality as a pair of opposite inequalities
    lhs = equalities + [[-x for x in row] for row in equalities]
    bounds = rhs + [-x for x in rhs]
    try:
        linprog([0] * len(others), lhs, bounds)
    except InfeasibleLPError:
        return False
    return True
