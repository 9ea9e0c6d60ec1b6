"""GKM presentations of H_T(X) and H_S(X) from a moment graph.

A degree-d class of H_T(X) is a tuple (p_v) of homogeneous degree-d
polynomials in the simple roots, one per vertex, stored as the
concatenation of the graded-lex coefficient vectors of the p_v. A degree-d
class of H_S(X) is a vector (c_v) standing for the tuple (c_v nu^d).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ValidationError
from .lie import root_value
from .linalg import LinearSolutionSpace, rank_and_nullspace
from .models import ExtensionReport
from .polynomial import (
    RationalPoly,
    divisibility_conditions,
    monomial_count,
    monomials,
)
from .schubert import truncate_graph
from .utils import rational_to_str, root_to_str

logger = logging.getLogger(__name__)


def admissible_space(g, degree):
    """All tuples of degree-`degree` polynomials, one per vertex, whose
    difference along every edge is divisible by the edge label."""
    nvars = g.datum.rank
    block = monomial_count(nvars, degree)
    ncols = len(g.vertices) * block
    rows = []
    for u, v, gamma in g.edges:
        for condition in divisibility_conditions(tuple(gamma), degree):
            row = [Fraction(0)] * ncols
            row[u * block:(u + 1) * block] = condition
            row[v * block:(v + 1) * block] = [-c for c in condition]
            rows.append(row)
    _, space = rank_and_nullspace(rows, ncols=ncols)
    logger.debug(
        "Admissible space in degree {}: {} of {} coordinates".format(
            degree, space.dimension, ncols
        )
    )
    return space


@dataclass(frozen=True)
class GradedBasisHT:
    graph: object
    pieces: tuple

    @property
    def dmax(self):
        return len(self.pieces) - 1

    def dimension(self, degree):
        return self.pieces[degree].dimension

    def tuples(self, degree):
        """Basis of the degree piece as tuples of RationalPoly."""
        nvars = self.graph.datum.rank
        block = monomial_count(nvars, degree)
        return [
            tuple(
                RationalPoly.from_coefficients(
                    nvars, degree, vector[k * block:(k + 1) * block]
                )
                for k in range(len(self.graph.vertices))
            )
            for vector in self.pieces[degree].basis
        ]


@dataclass(frozen=True)
class GradedBasisHS:
    graph: object
    a_vals: tuple
    pieces: tuple

    @property
    def dmax(self):
        return len(self.pieces) - 1

    def dimension(self, degree):
        return self.pieces[degree].dimension


def ht_basis(g, dmax):
    """Degreewise bases of H_T(X) for complex degrees 0..dmax."""
    if dmax < 0:
        raise ValidationError(
            "bad_degree", f"degree bound must be >= 0, got {dmax}"
        )
    return GradedBasisHT(
        g, tuple(admissible_space(g, d) for d in range(dmax + 1))
    )


def _projection(vector, nvars, degree, nvertices, a_vals):
    """Substitute alpha_j -> c_j nu in each vertex polynomial; returns the
    nu^degree coefficients."""
    values = []
    block = monomial_count(nvars, degree)
    weights = []
    for exponents in monomials(nvars, degree):
        weight = Fraction(1)
        for c, power in zip(a_vals, exponents):
            weight *= Fraction(c) ** power
        weights.append(weight)
    for k in range(nvertices):
        coefficients = vector[k * block:(k + 1) * block]
        values.append(sum(c * w for c, w in zip(coefficients, weights)))
    return values


def _check_regular_direction(g, a_vals):
    singular = [
        gamma
        for gamma in g.datum.positive_roots
        if root_value(gamma, a_vals) == 0
    ]
    if singular:
        err_msg = "positive roots {} vanish on a".format(
            ", ".join(root_to_str(gamma) for gamma in singular)
        )
        logger.error(err_msg)
        raise ValidationError("singular_direction", err_msg)


def hs_basis(g, a_vals, dmax, ht=None):
    """Degreewise bases of H_S(X) as the projection image of H_T(X)."""
    _check_regular_direction(g, a_vals)
    ht = ht if ht is not None else ht_basis(g, dmax)
    nvars = g.datum.rank
    nvertices = len(g.vertices)
    pieces = []
    for d in range(dmax + 1):
        images = [
            _projection(vector, nvars, d, nvertices, a_vals)
            for vector in ht.pieces[d].basis
        ]
        pieces.append(LinearSolutionSpace.span(nvertices, images))
        logger.debug(
            "H_S degree {}: dimension {}".format(2 * d, pieces[-1].dimension)
        )
    return GradedBasisHS(g, tuple(a_vals), tuple(pieces))


def formality_dimensions(betti, nvars, dmax):
    """Dimensions predicted by equivariant formality from the cell counts:
    (H_T per degree, H_S per degree)."""
    ht = []
    hs = []
    for d in range(dmax + 1):
        ht.append(
            sum(
                b * monomial_count(nvars, d - e)
                for e, b in enumerate(betti)
                if e <= d
            )
        )
        hs.append(sum(b for e, b in enumerate(betti) if e <= d))
    return ht, hs


def check_assumption3(g, a_vals, r0, dmax, ht=None):
    """Assumption 3 (ii) up to complex degree `dmax`.

    In each degree, restricting admissible tuples on Gamma to the vertices
    of Gamma_{r0} must be onto the admissible tuples of Gamma_{r0}.
    """
    r0 = Fraction(r0)
    top = truncate_graph(g, r0)
    kept = [g.index(vertex) for vertex in top.vertices]
    nvars = g.datum.rank
    degrees = {}
    for d in range(dmax + 1):
        if not kept:
            degrees[d] = True
            continue
        block = monomial_count(nvars, d)
        coordinates = [
            k * block + j for k in kept for j in range(block)
        ]
        space = ht.pieces[d] if ht is not None else admissible_space(g, d)
        image = space.project(coordinates)
        target = admissible_space(top, d)
        degrees[d] = image.dimension == target.dimension
        logger.debug(
            "Assumption 3 (ii) degree {}: image {} vs target {}".format(
                2 * d, image.dimension, target.dimension
            )
        )
    failures = [
        f"restriction is not onto in degree {2 * d}"
        for d, ok in sorted(degrees.items())
        if not ok
    ]
    return ExtensionReport(
        name="assumption_3_ii",
        passed=not failures,
        failures=failures,
        details={
            "r0": rational_to_str(r0),
            "top_vertices": [vertex.name for vertex in top.vertices],
        },
        degrees=degrees,
        single_vertex=len(top.vertices) == 1,
        bound=f"verified up to cohomological degree {2 * dmax}",
    )
