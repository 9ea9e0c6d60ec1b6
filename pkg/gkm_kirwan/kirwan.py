"""Cohomology of the symplectic quotient X//S(r0) as H_S(X)/(K_- + K_+).

Kirwan surjectivity is taken as given: the quotient ring is computed as
H_S(X) modulo the classes vanishing on all fixed points below r0 (K_-)
plus those vanishing on all fixed points above r0 (K_+). Nothing is
computed unless Assumption 1 and Assumption 3 (i) pass; the Assumption 2
evidence and the bounded Assumption 3 (ii) verdict travel with the result.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .exceptions import AssumptionError, InconsistencyError
from .gkm import check_assumption3, hs_basis, ht_basis
from .linalg import LinearSolutionSpace, solve
from .models import AssumptionReport
from .schubert import (
    moment_graph,
    poincare_polynomial,
    validate_assumption1,
    validate_r0,
    valency_report,
)
from .utils import is_palindromic, rational_to_str

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSpaces:
    """Per complex degree: K_-, K_+ and K_- + K_+ inside H_S(X)."""

    minus: tuple
    plus: tuple
    total: tuple

    def intersection_dimension(self, degree):
        return (
            self.minus[degree].dimension
            + self.plus[degree].dimension
            - self.total[degree].dimension
        )


def kernel_spaces(hs, phi_values, r0):
    """K_- and K_+ degree by degree inside the H_S pieces."""
    r0 = Fraction(r0)
    below = [k for k, phi in enumerate(phi_values) if phi < r0]
    above = [k for k, phi in enumerate(phi_values) if phi > r0]
    minus, plus, total = [], [], []
    for space in hs.pieces:
        k_minus = space.subspace_where_zero(below)
        k_plus = space.subspace_where_zero(above)
        minus.append(k_minus)
        plus.append(k_plus)
        total.append(k_minus + k_plus)
    return KernelSpaces(tuple(minus), tuple(plus), tuple(total))


def assumption2_evidence(d, g):
    """Valency heuristic plus palindromicity; necessary evidence for
    Sing(X) = {lambda}, never a proof."""
    flagged = valency_report(g, d.complex_dimension)
    poincare = poincare_polynomial(d)
    lam_name = g.vertices[0].name if g.vertices else None
    consistent = all(vertex.name == lam_name for vertex in flagged)
    return AssumptionReport(
        name="assumption_2_evidence",
        passed=consistent,
        failures=[]
        if consistent
        else [
            "valency differs from the dimension away from lambda at "
            + ", ".join(v.name for v in flagged if v.name != lam_name)
        ],
        details={
            "flagged": [vertex.name for vertex in flagged],
            "poincare": poincare,
            "palindromic": is_palindromic(poincare),
            "note": "valency and palindromicity are necessary conditions "
            "only; smoothness away from lambda is not proved",
        },
    )


@dataclass(frozen=True)
class QuotientComputation:
    """Every intermediate of one quotient computation."""

    schubert: object
    a_vals: tuple
    r0: Fraction
    dmax: int
    graph: object
    assumption1: object
    assumption2: object
    assumption3_i: object
    assumption3_ii: object
    ht: object
    hs: object
    kernels: object

    @property
    def betti(self):
        return [
            self.hs.dimension(d) - self.kernels.total[d].dimension
            for d in range(self.dmax + 1)
        ]


def default_dmax(d):
    return 2 * d.w.length


def compute_quotient(d, a_vals, r0, dmax=None):
    """Run the whole pipeline for X(w), a and r0.

    Raises:
        AssumptionError: Assumption 1 or 3 (i) fails
    """
    r0 = Fraction(r0)
    dmax = default_dmax(d) if dmax is None else dmax
    g = moment_graph(d, a_vals)
    assumption1 = validate_assumption1(d, a_vals)
    if not assumption1.passed:
        err_msg = "Assumption 1 fails: {}".format("; ".join(
            assumption1.failures
        ))
        logger.error(err_msg)
        raise AssumptionError(
            "assumption_1_failed", err_msg, data=assumption1.dump()
        )
    assumption3_i = validate_r0(g, r0)
    if not assumption3_i.passed:
        err_msg = "Assumption 3 (i) fails: {}".format("; ".join(
            assumption3_i.failures
        ))
        logger.error(err_msg)
        raise AssumptionError(
            "assumption_3_i_failed", err_msg, data=assumption3_i.dump()
        )
    ht = ht_basis(g, dmax)
    hs = hs_basis(g, a_vals, dmax, ht=ht)
    kernels = kernel_spaces(hs, g.phi_values(), r0)
    computation = QuotientComputation(
        schubert=d,
        a_vals=tuple(a_vals),
        r0=r0,
        dmax=dmax,
        graph=g,
        assumption1=assumption1,
        assumption2=assumption2_evidence(d, g),
        assumption3_i=assumption3_i,
        assumption3_ii=check_assumption3(g, a_vals, r0, dmax, ht=ht),
        ht=ht,
        hs=hs,
        kernels=kernels,
    )
    logger.debug(
        "Quotient of X({}) at r0 = {}: Betti {}".format(
            d.w, rational_to_str(r0), computation.betti
        )
    )
    return computation


def kirwan_betti(d, a_vals, r0, dmax=None):
    """[b_0, b_2, ..., b_{2 dmax}] of X//S(r0)."""
    return compute_quotient(d, a_vals, r0, dmax).betti


@dataclass(frozen=True)
class QuotientPresentation:
    """Graded ring H^*(X//S(r0)) by basis cosets and structure constants.

    `structure_constants[(d1, i, d2, j)]` expands x_{d1,i} * x_{d2,j} in
    the degree d1 + d2 basis; products above `dmax` are listed in
    `unavailable` instead of being guessed.
    """

    dmax: int
    betti: tuple
    basis_cosets: tuple
    structure_constants: dict
    unavailable: tuple

    @property
    def euler_characteristic(self):
        return sum(self.betti)

    @property
    def is_palindromic(self):
        return is_palindromic(self.betti)

    def multiply(self, x, y):
        """Product of two coset coordinate vectors given as
        {(degree, index): coefficient} mappings."""
        result = {}
        for (d1, i), s in x.items():
            for (d2, j), t in y.items():
                if d1 + d2 > self.dmax:
                    raise InconsistencyError(
                        "product_unavailable",
                        f"product lands in degree {2 * (d1 + d2)}, above "
                        f"the bound {2 * self.dmax}",
                    )
                for k, c in enumerate(
                    self.structure_constants[(d1, i, d2, j)]
                ):
                    if c:
                        key = (d1 + d2, k)
                        result[key] = result.get(key, 0) + s * t * c
        return {key: c for key, c in result.items() if c}

    def check(self):
        """Unit, commutativity and associativity of the stored constants.

        Raises:
            InconsistencyError: on the first violated identity
        """
        cosets = [
            (d, i)
            for d in range(self.dmax + 1)
            for i in range(self.betti[d])
        ]
        if self.betti and self.betti[0] == 1:
            for d, i in cosets:
                if self.multiply({(0, 0): 1}, {(d, i): 1}) != {(d, i): 1}:
                    raise InconsistencyError(
                        "unit_failed", f"1 * x[{d},{i}] != x[{d},{i}]"
                    )
        for (d1, i), (d2, j) in product(cosets, repeat=2):
            if d1 + d2 > self.dmax:
                continue
            if self.structure_constants[(d1, i, d2, j)] != \
                    self.structure_constants[(d2, j, d1, i)]:
                raise InconsistencyError(
                    "commutativity_failed",
                    f"x[{d1},{i}] x[{d2},{j}] != x[{d2},{j}] x[{d1},{i}]",
                )
        for x, y, z in product(cosets, repeat=3):
            if x[0] + y[0] + z[0] > self.dmax:
                continue
            left = self.multiply(self.multiply({x: 1}, {y: 1}), {z: 1})
            right = self.multiply({x: 1}, self.multiply({y: 1}, {z: 1}))
            if left != right:
                raise InconsistencyError(
                    "associativity_failed",
                    f"(x{x} x{y}) x{z} != x{x} (x{y} x{z})",
                )
        return True


def _basis_cosets(space, kernel, betti, nvertices):
    """Representatives of a basis of space / kernel.

    Candidates are tried in order: the constant tuple (nu^d, ..., nu^d)
    first, then the echelon basis of the space; each is kept when it is
    independent of the kernel and of the representatives kept so far.
    """
    chosen = []
    span = kernel
    candidates = [[Fraction(1)] * nvertices] + [
        list(row) for row in space.basis
    ]
    for candidate in candidates:
        if len(chosen) == betti:
            break
        if not space.contains(candidate) or span.contains(candidate):
            continue
        chosen.append(tuple(candidate))
        span = span + LinearSolutionSpace.span(nvertices, [candidate])
    if len(chosen) != betti:
        raise InconsistencyError(
            "coset_basis_failed",
            f"found {len(chosen)} coset representatives, expected {betti}",
        )
    return tuple(chosen)


def presentation_from(computation):
    betti = computation.betti
    nvertices = len(computation.graph.vertices)
    dmax = computation.dmax
    cosets = tuple(
        _basis_cosets(
            computation.hs.pieces[d],
            computation.kernels.total[d],
            betti[d],
            nvertices,
        )
        for d in range(dmax + 1)
    )
    constants = {}
    unavailable = []
    for d1, d2 in product(range(dmax + 1), repeat=2):
        for i, x in enumerate(cosets[d1]):
            for j, y in enumerate(cosets[d2]):
                if d1 + d2 > dmax:
                    unavailable.append((d1, i, d2, j))
                    continue
                z = [a * b for a, b in zip(x, y)]
                degree = d1 + d2
                columns = list(cosets[degree]) + list(
                    computation.kernels.total[degree].basis
                )
                solution = solve(columns, z)
                if solution is None:
                    raise InconsistencyError(
                        "product_not_in_ring",
                        f"x[{d1},{i}] x[{d2},{j}] is not a class of H_S(X)",
                    )
                constants[(d1, i, d2, j)] = tuple(
                    solution[:len(cosets[degree])]
                )
    presentation = QuotientPresentation(
        dmax=dmax,
        betti=tuple(betti),
        basis_cosets=cosets,
        structure_constants=constants,
        unavailable=tuple(unavailable),
    )
    presentation.check()
    return presentation


def ring_presentation(d, a_vals, r0, dmax=None):
    """Ring structure of H^*(X//S(r0)) up to complex degree dmax."""
    return presentation_from(compute_quotient(d, a_vals, r0, dmax))


@dataclass(frozen=True)
class Regime:
    lower: Fraction
    upper: Fraction
    r0: Fraction
    top_vertices: tuple
    assumption3_ii: object
    betti: tuple


def scan_regimes(d, a_vals, dmax=None):
    """One quotient computation per open interval between consecutive
    critical values, at the interval midpoint."""
    g = moment_graph(d, a_vals)
    levels = sorted(set(g.phi_values()))
    regimes = []
    for lower, upper in zip(levels, levels[1:]):
        r0 = (lower + upper) / 2
        computation = compute_quotient(d, a_vals, r0, dmax)
        regimes.append(
            Regime(
                lower=lower,
                upper=upper,
                r0=r0,
                top_vertices=tuple(
                    vertex.name
                    for vertex in computation.graph.vertices
                    if vertex.phi > r0
                ),
                assumption3_ii=computation.assumption3_ii,
                betti=tuple(computation.betti),
            )
        )
    if not regimes:
        logger.warning(
            "X({}) has a single critical value, no regime exists".format(d.w)
        )
    return regimes
