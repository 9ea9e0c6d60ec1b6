from fractions import Fraction

import pytest

from gkm_kirwan.exceptions import ValidationError
from gkm_kirwan.lie import (
    Weight,
    ambient_coordinates,
    bruhat_leq,
    bruhat_leq_subword,
    build_root_datum,
    identity,
    pairing_a,
    pairings_from_ambient,
    reflect,
    stabilizer_order,
    weyl_element,
    weyl_group,
    weyl_orbit,
)

from tests.conftest import A_VALS

HALF = Fraction(1, 2)


@pytest.mark.parametrize(
    "type_letter, rank, roots, order",
    [
        ("A", 1, 1, 2),
        ("A", 2, 3, 6),
        ("A", 3, 6, 24),
        ("B", 2, 4, 8),
        ("B", 3, 9, 48),
        ("C", 3, 9, 48),
        ("D", 4, 12, 192),
    ],
)
def test_root_counts_and_weyl_order(type_letter, rank, roots, order):
    datum = build_root_datum(type_letter, rank)
    assert len(datum.positive_roots) == roots
    assert len(weyl_group(datum)) == order


@pytest.mark.parametrize(
    "type_letter, rank", [("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]
)
def test_coroot_pairing_of_simple_roots_is_cartan(type_letter, rank):
    datum = build_root_datum(type_letter, rank)
    simple = [
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
    ]
    for i, alpha_i in enumerate(simple):
        for j, alpha_j in enumerate(simple):
            assert (
                datum.coroot_pairing(Weight.of(alpha_j), alpha_i)
                == datum.cartan[i][j]
            )


def test_b2_highest_root():
    datum = build_root_datum("B", 2)
    assert (1, 2) in datum.positive_roots
    assert datum.symmetrizer == (2, 1)


@pytest.mark.parametrize(
    "type_letter, rank, max_rank, error",
    [
        ("E", 6, None, "unsupported_type"),
        ("B", 1, None, "unsupported_rank"),
        ("D", 2, None, "unsupported_rank"),
        ("A", 4, 3, "rank_too_large"),
    ],
)
def test_build_root_datum_rejects(type_letter, rank, max_rank, error):
    with pytest.raises(ValidationError) as err:
        build_root_datum(type_letter, rank, max_rank=max_rank)
    assert err.value.error == error
    assert err.value.code == 2


def test_fundamental_weight_in_root_coordinates(a3, omega2):
    assert omega2.root_coords == (HALF, 1, HALF)
    assert a3.simple_pairings(omega2) == (0, 1, 0)


def test_reflect_examples(a3, omega2):
    assert reflect(a3, omega2, (0, 1, 0)) == Weight.of((HALF, 0, HALF))
    assert reflect(a3, omega2, (1, 1, 0)) == Weight.of((-HALF, 0, HALF))
    # orthogonal root fixes lambda
    assert reflect(a3, omega2, (1, 0, 0)) == omega2


def test_coroot_pairing_rejects_non_root(a3, omega2):
    with pytest.raises(ValidationError):
        a3.coroot_pairing(omega2, (1, 0, 1))


def test_reflection_is_involutive_on_orbit(a3, omega2):
    for mu, _ in weyl_orbit(a3, omega2):
        for gamma in a3.positive_roots:
            assert reflect(a3, reflect(a3, mu, gamma), gamma) == mu


def test_pairings_are_linear_on_orbit(a3, omega2):
    orbit = [mu for mu, _ in weyl_orbit(a3, omega2)]
    for mu in orbit:
        for nu in orbit:
            total = mu + nu
            assert pairing_a(total, A_VALS) == pairing_a(
                mu, A_VALS
            ) + pairing_a(nu, A_VALS)
            for gamma in a3.positive_roots:
                assert a3.coroot_pairing(total, gamma) == a3.coroot_pairing(
                    mu, gamma
                ) + a3.coroot_pairing(nu, gamma)


def test_orbit_of_omega2_has_minimal_words(a3, omega2):
    orbit = weyl_orbit(a3, omega2)
    assert [v.word for _, v in orbit] == [
        (),
        (2,),
        (1, 2),
        (3, 2),
        (3, 1, 2),
        (2, 3, 1, 2),
    ]
    for mu, v in orbit:
        assert a3.act(v.word, omega2) == mu


def test_pairing_a_values(a3, omega2):
    values = [pairing_a(mu, A_VALS) for mu, _ in weyl_orbit(a3, omega2)]
    assert values == [-4, -3, -1, 1, 3, 4]


@pytest.mark.parametrize(
    "type_letter, rank, weight, size",
    [
        ("A", 1, (1,), 2),
        ("A", 3, (0, 1, 0), 6),
        ("A", 2, (1, 1), 6),
        ("B", 2, (1, 0), 4),
        ("C", 3, (0, 0, 1), 8),
    ],
)
def test_orbit_stabilizer(type_letter, rank, weight, size):
    datum = build_root_datum(type_letter, rank)
    lam = datum.weight_from_fundamental(weight)
    orbit = weyl_orbit(datum, lam)
    assert len(orbit) == size
    assert len(orbit) * stabilizer_order(datum, lam) == len(
        weyl_group(datum)
    )


@pytest.mark.parametrize(
    "coords", [(0, 0, 0), (-1, 0, 0)], ids=["zero", "not-dominant"]
)
def test_weyl_orbit_rejects(a3, coords):
    with pytest.raises(ValidationError) as err:
        weyl_orbit(a3, Weight.of(coords))
    assert err.value.error == "bad_lambda"


def test_weyl_orbit_cap(a3):
    with pytest.raises(ValidationError) as err:
        weyl_orbit(a3, a3.rho, cap=10)
    assert err.value.error == "orbit_too_large"


def test_non_reduced_word_is_replaced(a3):
    element = weyl_element(a3, (1, 1, 2))
    assert element.word == (2,)
    assert weyl_element(a3, (1, 1)) == identity(a3)
    assert str(identity(a3)) == "e"
    assert str(weyl_element(a3, (3, 1, 2))) == "s3s1s2"


def test_reduced_words_of_same_element_are_equal(a3):
    assert weyl_element(a3, (1, 3)) == weyl_element(a3, (3, 1))
    assert weyl_element(a3, (1, 2, 1)) == weyl_element(a3, (2, 1, 2))
    assert weyl_element(a3, (1, 2)) != weyl_element(a3, (2, 1))


def test_bruhat_recursion_matches_subwords(a3):
    group = weyl_group(a3)
    assert len(group) == 24
    for u in group:
        for w in group:
            assert bruhat_leq(a3, u, w) == bruhat_leq_subword(a3, u, w)


def test_bruhat_examples(a3):
    e = identity(a3)
    s2 = weyl_element(a3, (2,))
    w = weyl_element(a3, (3, 1, 2))
    assert bruhat_leq(a3, e, w)
    assert bruhat_leq(a3, s2, w)
    assert bruhat_leq(a3, weyl_element(a3, (1, 2)), w)
    assert bruhat_leq(a3, weyl_element(a3, (1, 3)), w)
    assert bruhat_leq_subword(a3, weyl_element(a3, (3, 1)), w)
    assert not bruhat_leq(a3, weyl_element(a3, (2, 1)), w)
    assert not bruhat_leq(a3, w, s2)


def test_ambient_coordinates(a3, omega2):
    assert ambient_coordinates(a3, omega2) == (HALF, HALF, -HALF, -HALF)
    assert pairings_from_ambient((-3, -1, 0, 4)) == A_VALS


def test_ambient_coordinates_type_a_only():
    datum = build_root_datum("B", 2)
    with pytest.raises(ValidationError):
        ambient_coordinates(datum, datum.fundamental_weight(1))
