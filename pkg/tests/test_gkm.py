import dataclasses
import random
from fractions import Fraction

import pytest

from gkm_kirwan.exceptions import ValidationError
from gkm_kirwan.gkm import (
    GradedBasisHT,
    admissible_space,
    check_assumption3,
    formality_dimensions,
    hs_basis,
    ht_basis,
)
from gkm_kirwan.lie import weyl_orbit
from gkm_kirwan.linalg import LinearSolutionSpace
from gkm_kirwan.polynomial import is_divisible
from gkm_kirwan.schubert import (
    build_schubert_datum,
    moment_graph,
    poincare_polynomial,
)

from tests.conftest import A_VALS

DMAX = 6


def test_admissible_dimensions_of_x312(x312_graph):
    assert [admissible_space(x312_graph, d).dimension for d in range(4)] == [
        1,
        4,
        11,
        23,
    ]


def test_admissible_tuples_satisfy_divisibility(x312_graph):
    ht = ht_basis(x312_graph, 2)
    for degree in range(3):
        for classes in ht.tuples(degree):
            for u, v, gamma in x312_graph.edges:
                assert is_divisible(classes[u] - classes[v], gamma)


def test_point_has_polynomial_ring(point):
    g = moment_graph(point, A_VALS)
    ht = ht_basis(g, DMAX)
    assert [ht.dimension(d) for d in range(DMAX + 1)] == [
        1, 3, 6, 10, 15, 21, 28,
    ]


def test_formality_dimensions_full_orbit():
    ht, hs = formality_dimensions([1, 1, 2, 1, 1], 3, 6)
    assert ht[6] == 95
    assert hs == [1, 2, 4, 5, 6, 6, 6]


def _coset_representatives(a3, omega2):
    return [v.word for _, v in weyl_orbit(a3, omega2)]


def test_formality_oracle_on_every_schubert_variety(a3, omega2):
    for word in _coset_representatives(a3, omega2):
        d = build_schubert_datum(a3, omega2, word)
        g = moment_graph(d, A_VALS)
        ht = ht_basis(g, DMAX)
        hs = hs_basis(g, A_VALS, DMAX, ht=ht)
        expected_ht, expected_hs = formality_dimensions(
            poincare_polynomial(d), a3.rank, DMAX
        )
        assert [ht.dimension(k) for k in range(DMAX + 1)] == expected_ht
        assert [hs.dimension(k) for k in range(DMAX + 1)] == expected_hs


def test_hs_dimensions_of_x312(x312_graph):
    hs = hs_basis(x312_graph, A_VALS, DMAX)
    assert [hs.dimension(d) for d in range(DMAX + 1)] == [
        1, 2, 4, 5, 5, 5, 5,
    ]
    assert hs.dmax == DMAX
    # constants survive the projection in every degree
    for d in range(DMAX + 1):
        assert hs.pieces[d].contains([1] * 5)


def test_hs_basis_rejects_singular_direction(x312):
    a_vals = (-2, -1, 1)
    g = moment_graph(x312, a_vals)
    with pytest.raises(ValidationError) as err:
        hs_basis(g, a_vals, 1)
    assert err.value.error == "singular_direction"


def test_ht_basis_rejects_negative_bound(x312_graph):
    with pytest.raises(ValidationError):
        ht_basis(x312_graph, -1)


@pytest.mark.parametrize(
    "r0, top, single_vertex",
    [(2, ["3-1-2"], True), (0, ["3-2", "3-1-2"], False), (5, [], False)],
)
def test_check_assumption3(x312_graph, r0, top, single_vertex):
    ht = ht_basis(x312_graph, DMAX)
    report = check_assumption3(x312_graph, A_VALS, r0, DMAX, ht=ht)
    assert report.passed
    assert report.name == "assumption_3_ii"
    assert report.single_vertex is single_vertex
    assert report.details["top_vertices"] == top
    assert report.bound == "verified up to cohomological degree 12"
    assert sorted(report.degrees) == list(range(DMAX + 1))
    dumped = report.dump()
    assert sorted(dumped["degrees"], key=int) == [
        str(2 * d) for d in range(DMAX + 1)
    ]


def test_check_assumption3_without_precomputed_basis(x312_graph):
    assert check_assumption3(x312_graph, A_VALS, 2, 2).passed


def test_check_assumption3_fails_low_in_the_graph(x312_graph):
    # below s1 s2 lambda the top graph is a path of three vertices, whose
    # degree-2 classes outnumber those of X
    report = check_assumption3(x312_graph, A_VALS, -2, 2)
    assert not report.passed
    assert report.degrees[0]
    assert not report.degrees[1]
    assert "restriction is not onto in degree 2" in report.failures
    assert report.details["top_vertices"] == ["1-2", "3-2", "3-1-2"]


def _scrambled(space, rng):
    """Same subspace, spanned by an invertible upper triangular mix of the
    echelon basis."""
    n = space.dimension
    rows = []
    for i in range(n):
        coefficients = [
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)) if j > i else 0
            for j in range(n)
        ]
        coefficients[i] = Fraction(rng.choice([-3, -1, 2, 5]), 2)
        rows.append(
            tuple(
                sum(c * b[k] for c, b in zip(coefficients, space.basis))
                for k in range(space.ambient_dim)
            )
        )
    return LinearSolutionSpace(space.ambient_dim, tuple(rows), space.pivots)


def test_hs_basis_ignores_choice_of_ht_representatives(x312_graph):
    rng = random.Random(20)
    ht = ht_basis(x312_graph, 4)
    scrambled = GradedBasisHT(
        x312_graph, tuple(_scrambled(space, rng) for space in ht.pieces)
    )
    assert scrambled.pieces[2].basis != ht.pieces[2].basis
    first = hs_basis(x312_graph, A_VALS, 4, ht=ht)
    second = hs_basis(x312_graph, A_VALS, 4, ht=scrambled)
    assert first.pieces == second.pieces


def test_admissible_space_shrinks_as_edges_are_added(x312_graph):
    fewer = dataclasses.replace(x312_graph, edges=x312_graph.edges[1:])
    more = dataclasses.replace(
        x312_graph, edges=x312_graph.edges + ((2, 3, (1, 0, 0)),)
    )
    for d in range(4):
        dims = [
            admissible_space(g, d).dimension
            for g in (fewer, x312_graph, more)
        ]
        assert dims[0] >= dims[1] >= dims[2]
    # a1 does not divide the class lambda - v lambda along 1-2 -- 3-2
    assert admissible_space(more, 1).dimension == 3


def test_hs_basis_rejects_singular_direction_on_a_point(point):
    # no edges; a1+a2 vanishes on a
    a_vals = (1, -1, -4)
    g = moment_graph(point, a_vals)
    assert g.edges == ()
    with pytest.raises(ValidationError) as err:
        hs_basis(g, a_vals, 1)
    assert err.value.error == "singular_direction"
    assert "a1+a2" in err.value.error_description
