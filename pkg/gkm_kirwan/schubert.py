"""Fixed points and moment graphs of Schubert varieties X(w) in G/P."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exceptions import ValidationError
from .lie import (
    Weight,
    ambient_coordinates,
    bruhat_leq,
    pairing_a,
    reflect,
    root_value,
    weyl_element,
    weyl_orbit,
)
from .linalg import is_convex_combination
from .models import AssumptionReport
from .utils import (
    is_palindromic,
    rational_to_str,
    root_to_str,
    word_to_str,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchubertDatum:
    datum: object
    lam: Weight
    w: object
    parabolic_roots: tuple
    orbit: tuple

    @property
    def complex_dimension(self):
        return self.w.length


@dataclass(frozen=True)
class Vertex:
    element: object
    weight: Weight
    phi: Fraction = None

    @property
    def name(self):
        return word_to_str(self.element.word)


@dataclass(frozen=True)
class MomentGraph:
    """Vertices ordered by (length, word); edges (u, v, root) with u < v,
    ordered by (u, v)."""

    datum: object
    vertices: tuple
    edges: tuple

    def valency(self, index):
        return sum(1 for u, v, _ in self.edges if index in (u, v))

    def phi_values(self):
        return [vertex.phi for vertex in self.vertices]

    def index(self, vertex):
        return self.vertices.index(vertex)


def parabolic_roots(datum, lam):
    """Positive roots alpha with lam(alpha^vee) = 0."""
    if lam.is_zero():
        err_msg = "lambda = 0 gives a one-point flag variety"
        logger.error(err_msg)
        raise ValidationError("zero_lambda", err_msg)
    if not datum.is_dominant(lam):
        err_msg = f"lambda = {lam} is not dominant"
        logger.error(err_msg)
        raise ValidationError("bad_lambda", err_msg)
    return tuple(
        gamma
        for gamma in datum.positive_roots
        if datum.coroot_pairing(lam, gamma) == 0
    )


def build_schubert_datum(datum, lam, word, cap=None):
    """Schubert datum for X(w), w given by any word.

    The word is replaced by the minimal representative of its coset in
    W/W_P (X(w) only depends on the coset). `cap` bounds the orbit
    enumeration as in `weyl_orbit`.
    """
    element = weyl_element(datum, word)
    roots = parabolic_roots(datum, lam)
    orbit = tuple(weyl_orbit(datum, lam, cap=cap))
    target = datum.act(tuple(word), lam)
    w = next(v for mu, v in orbit if mu == target)
    if w.length != element.length:
        logger.warning(
            "Replacing {} by the minimal coset representative {}".format(
                element, w
            )
        )
    return SchubertDatum(datum, lam, w, roots, orbit)


def word_for_ambient_subset(datum, lam, subset):
    """Minimal representative w with w lam = sum_{k in subset} e_k^*
    (type A, lam a fundamental weight omega_{|subset|}; 1-based subset)."""
    n = datum.rank + 1
    size = len(subset)
    target = tuple(
        Fraction(1 if k + 1 in subset else 0) - Fraction(size, n)
        for k in range(n)
    )
    for mu, v in weyl_orbit(datum, lam):
        if ambient_coordinates(datum, mu) == target:
            return v.word
    raise ValidationError(
        "subset_not_in_orbit",
        f"no weight of the orbit of {lam} matches the subset {subset}",
    )


def fixed_points(d):
    """The fixed points v lam of X(w): minimal representatives v <= w."""
    return [
        Vertex(v, mu)
        for mu, v in d.orbit
        if bruhat_leq(d.datum, v, d.w)
    ]


def moment_graph(d, a_vals):
    """Moment graph of X(w) with Phi_a values attached to the vertices."""
    datum = d.datum
    vertices = tuple(
        Vertex(vertex.element, vertex.weight, pairing_a(vertex.weight, a_vals))
        for vertex in fixed_points(d)
    )
    position = {vertex.weight: k for k, vertex in enumerate(vertices)}
    edges = []
    for k, vertex in enumerate(vertices):
        for gamma in datum.positive_roots:
            if datum.coroot_pairing(vertex.weight, gamma) == 0:
                continue
            other = position.get(reflect(datum, vertex.weight, gamma))
            if other is not None and other > k:
                edges.append((k, other, gamma))
    edges.sort(key=lambda edge: (edge[0], edge[1]))
    logger.debug(
        "Moment graph of X({}) has {} vertices and {} edges".format(
            d.w, len(vertices), len(edges)
        )
    )
    return MomentGraph(datum, vertices, tuple(edges))


def truncate_graph(g, r0):
    """Induced subgraph on the vertices with Phi_a >= r0."""
    r0 = Fraction(r0)
    kept = [k for k, vertex in enumerate(g.vertices) if vertex.phi >= r0]
    renumber = {old: new for new, old in enumerate(kept)}
    edges = tuple(
        (renumber[u], renumber[v], gamma)
        for u, v, gamma in g.edges
        if u in renumber and v in renumber
    )
    return MomentGraph(
        g.datum, tuple(g.vertices[k] for k in kept), edges
    )


def validate_assumption1(d, a_vals):
    """Operational check of Assumption 1 for the circle direction `a`.

    Clauses: (i) gamma(a) != 0 for every positive root; (ii) Phi_a is
    injective on the whole orbit W lam; (iii) v < u in Bruhat order on the
    fixed points of X implies Phi_a(v lam) < Phi_a(u lam), so lam is the
    minimum and w lam the maximum of Phi_a on X.
    """
    datum = d.datum
    failures = []
    singular = [
        gamma
        for gamma in datum.positive_roots
        if root_value(gamma, a_vals) == 0
    ]
    if singular:
        failures.append(
            "regularity: roots {} vanish on a".format(
                ", ".join(root_to_str(gamma) for gamma in singular)
            )
        )
    values = {}
    for mu, v in d.orbit:
        values.setdefault(pairing_a(mu, a_vals), []).append(v)
    collisions = [group for group in values.values() if len(group) > 1]
    if collisions:
        failures.append(
            "injectivity: Phi_a takes equal values on {}".format(
                "; ".join(
                    ", ".join(f"{v}lambda" for v in group)
                    for group in collisions
                )
            )
        )
    vertices = fixed_points(d)
    phi = [pairing_a(vertex.weight, a_vals) for vertex in vertices]
    violations = [
        (vertices[i].element, vertices[j].element)
        for i, j in combinations(range(len(vertices)), 2)
        if bruhat_leq(d.datum, vertices[i].element, vertices[j].element)
        and not phi[i] < phi[j]
    ]
    if violations:
        failures.append(
            "monotonicity: {}".format(
                "; ".join(
                    f"{v}lambda < {u}lambda but Phi_a does not increase"
                    for v, u in violations
                )
            )
        )
    argmin = min(range(len(vertices)), key=lambda k: phi[k])
    argmax = max(range(len(vertices)), key=lambda k: phi[k])
    report = AssumptionReport(
        name="assumption_1",
        passed=not failures,
        failures=failures,
        details={
            "minimum": vertices[argmin].name,
            "maximum": vertices[argmax].name,
        },
    )
    if failures:
        logger.warning("Assumption 1 fails: {}".format(failures))
    return report


def validate_r0(g, r0):
    """Assumption 3 (i): r0 in Phi_a(X) minus Phi_a(X^S)."""
    r0 = Fraction(r0)
    phi = g.phi_values()
    failures = []
    if not phi or not min(phi) < r0 < max(phi):
        failures.append(
            "r0 = {} is not strictly between min and max of Phi_a on X".format(
                rational_to_str(r0)
            )
        )
    if r0 in phi:
        failures.append(
            "r0 = {} is the critical value Phi_a({}lambda)".format(
                rational_to_str(r0), g.vertices[phi.index(r0)].element
            )
        )
    return AssumptionReport(
        name="assumption_3_i",
        passed=not failures,
        failures=failures,
        details={"r0": rational_to_str(r0)},
    )


def poincare_polynomial(d):
    """[b_0, b_2, b_4, ...] counted from Schubert cells v <= w."""
    coefficients = [0] * (d.w.length + 1)
    for vertex in fixed_points(d):
        coefficients[vertex.element.length] += 1
    if not is_palindromic(coefficients):
        logger.warning(
            "Poincare polynomial {} of X({}) is not palindromic".format(
                coefficients, d.w
            )
        )
    return coefficients


def valency_report(g, complex_dim):
    """Vertices whose number of incident edges differs from the complex
    dimension; at a smooth fixed point the two agree, so these are the
    candidate singular points. Necessary evidence only."""
    flagged = [
        vertex
        for k, vertex in enumerate(g.vertices)
        if g.valency(k) != complex_dim
    ]
    if flagged:
        logger.warning(
            "Valency differs from dimension {} at {}".format(
                complex_dim, [vertex.name for vertex in flagged]
            )
        )
    return flagged


def polytope_vertices(g):
    """Vertices whose weights are extreme points of their convex hull."""
    points = [vertex.weight.root_coords for vertex in g.vertices]
    return [
        vertex
        for k, vertex in enumerate(g.vertices)
        if not is_convex_combination(
            points[k], points[:k] + points[k + 1:]
        )
    ]


def to_dot(g):
    """DOT rendering of a moment graph."""
    lines = ["graph moment_graph {"]
    for vertex in g.vertices:
        phi = rational_to_str(vertex.phi)
        lines.append(
            '    "{}" [phi="{}", label="{}\\n{}"];'.format(
                vertex.name, phi, vertex.name, phi
            )
        )
    for u, v, gamma in g.edges:
        lines.append(
            '    "{}" -- "{}" [label="{}"];'.format(
                g.vertices[u].name, g.vertices[v].name, root_to_str(gamma)
            )
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
