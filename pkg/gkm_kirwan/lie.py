"""Root systems of classical type, weights and Weyl group elements.

Weights are stored in the simple-root basis with exact rational
coordinates. For a weight mu = sum r_j alpha_j the pairing with a simple
coroot is mu(alpha_i^vee) = (C r)_i, where C is the Cartan matrix with
C[i][j] = alpha_j(alpha_i^vee).
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exceptions import ValidationError
from .linalg import determinant, inverse

logger = logging.getLogger(__name__)

SUPPORTED_TYPES = ('A', 'B', 'C', 'D')
MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 3}

# defaults; the session overrides them from the environment
MAX_RANK = 6
MAX_WEYL_ORDER = 40320


@dataclass(frozen=True)
class Weight:
    """Element of t^* in simple-root coordinates."""

    root_coords: tuple

    @classmethod
    def of(cls, coords):
        return cls(tuple(Fraction(c) for c in coords))

    def __add__(self, other):
        return Weight(
            tuple(a + b for a, b in zip(self.root_coords, other.root_coords))
        )

    def __sub__(self, other):
        return Weight(
            tuple(a - b for a, b in zip(self.root_coords, other.root_coords))
        )

    def scale(self, factor):
        factor = Fraction(factor)
        return Weight(tuple(factor * a for a in self.root_coords))

    def is_zero(self):
        return not any(self.root_coords)

    def __str__(self):
        return "({})".format(", ".join(str(c) for c in self.root_coords))


@dataclass(frozen=True)
class RootDatum:
    """Cartan data and positive roots of a classical root system."""

    type_letter: str
    rank: int
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple

    def __str__(self):
        return f"{self.type_letter}{self.rank}"

    def simple_pairings(self, mu):
        """(mu(alpha_1^vee), ..., mu(alpha_rank^vee))."""
        r = mu.root_coords
        return tuple(
            sum(self.cartan[i][j] * r[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def inner_product(self, x, y):
        """W-invariant form with (alpha_i, alpha_j) = d_i * C[i][j]."""
        return sum(
            Fraction(x[i]) * self.symmetrizer[i] * self.cartan[i][j] * y[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if x[i] and y[j]
        )

    def is_root(self, gamma):
        gamma = tuple(gamma)
        negated = tuple(-c for c in gamma)
        return gamma in self.positive_roots or negated in self.positive_roots

    def coroot_pairing(self, mu, gamma):
        """mu(gamma^vee) = 2 (mu, gamma) / (gamma, gamma)."""
        if not self.is_root(gamma):
            raise ValidationError(
                "not_a_root", f"{tuple(gamma)} is not a root of {self}"
            )
        return (
            2
            * self.inner_product(mu.root_coords, gamma)
            / self.inner_product(gamma, gamma)
        )

    def simple_reflect(self, mu, i):
        k = self.simple_pairings(mu)[i]
        if not k:
            return mu
        coords = list(mu.root_coords)
        coords[i] -= k
        return Weight(tuple(coords))

    def act(self, word, mu):
        """w mu for w = s_{word[0]} ... s_{word[-1]} (1-based indices)."""
        for i in reversed(word):
            mu = self.simple_reflect(mu, i - 1)
        return mu

    def fundamental_weight(self, i):
        return self.weight_from_fundamental(
            [1 if j == i else 0 for j in range(1, self.rank + 1)]
        )

    def weight_from_fundamental(self, coords):
        """Convert fundamental-weight coordinates to root coordinates."""
        if len(coords) != self.rank:
            raise ValidationError(
                "bad_weight",
                f"weight needs {self.rank} coordinates, got {len(coords)}",
            )
        inverse_cartan = _inverse_cartan(self.cartan)
        return Weight(
            tuple(
                sum(inverse_cartan[i][j] * Fraction(coords[j])
                    for j in range(self.rank))
                for i in range(self.rank)
            )
        )

    @property
    def rho(self):
        return self.weight_from_fundamental([1] * self.rank)

    def is_dominant(self, mu):
        return all(k >= 0 for k in self.simple_pairings(mu))


@lru_cache(maxsize=None)
def _inverse_cartan(cartan):
    return tuple(tuple(row) for row in inverse(cartan))


def _cartan_matrix(type_letter, rank):
    cartan = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        cartan[i][i] = 2
    for i in range(rank - 1):
        cartan[i][i + 1] = cartan[i + 1][i] = -1
    symmetrizer = [1] * rank
    if type_letter == 'B':
        # alpha_rank short
        cartan[rank - 1][rank - 2] = -2
        symmetrizer = [2] * (rank - 1) + [1]
    elif type_letter == 'C':
        # alpha_rank long
        cartan[rank - 2][rank - 1] = -2
        symmetrizer = [1] * (rank - 1) + [2]
    elif type_letter == 'D':
        cartan[rank - 2][rank - 1] = cartan[rank - 1][rank - 2] = 0
        cartan[rank - 3][rank - 1] = cartan[rank - 1][rank - 3] = -1
    return tuple(tuple(row) for row in cartan), tuple(symmetrizer)


def _expected_root_count(type_letter, rank):
    if type_letter == 'A':
        return rank * (rank + 1) // 2
    if type_letter in ('B', 'C'):
        return rank * rank
    return rank * (rank - 1)


def build_root_datum(type_letter, rank, max_rank=None):
    """Build the root datum of type `type_letter` and rank `rank`.

    Positive roots are enumerated by closing the simple roots under simple
    reflections, keeping positive images.

    Raises:
        ValidationError: unsupported type, rank below the minimum of the
            type, or rank above the configured cap
    """
    max_rank = MAX_RANK if max_rank is None else max_rank
    type_letter = str(type_letter).upper()
    if type_letter not in SUPPORTED_TYPES:
        err_msg = (
            f"type {type_letter} is not supported, choose one of "
            f"{', '.join(SUPPORTED_TYPES)}"
        )
        logger.error(err_msg)
        raise ValidationError("unsupported_type", err_msg)
    if not isinstance(rank, int) or rank < MIN_RANK[type_letter]:
        err_msg = (
            f"type {type_letter} needs rank >= {MIN_RANK[type_letter]}, "
            f"got {rank}"
        )
        logger.error(err_msg)
        raise ValidationError("unsupported_rank", err_msg)
    if rank > max_rank:
        err_msg = f"rank {rank} exceeds the configured cap {max_rank}"
        logger.error(err_msg)
        raise ValidationError("rank_too_large", err_msg)

    cartan, symmetrizer = _cartan_matrix(type_letter, rank)
    symmetrized = [
        [symmetrizer[i] * cartan[i][j] for j in range(rank)]
        for i in range(rank)
    ]
    if any(
        symmetrized[i][j] != symmetrized[j][i]
        for i in range(rank)
        for j in range(rank)
    ) or any(
        determinant([row[:k] for row in symmetrized[:k]]) <= 0
        for k in range(1, rank + 1)
    ):
        raise ValidationError(
            "bad_cartan", f"Cartan data of {type_letter}{rank} is not of "
            "finite type",
        )

    simple = [
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
    ]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        pairings = [
            sum(cartan[i][j] * beta[j] for j in range(rank))
            for i in range(rank)
        ]
        for i in range(rank):
            image = list(beta)
            image[i] -= pairings[i]
            image = tuple(image)
            if all(c >= 0 for c in image) and image not in found:
                found.add(image)
                queue.append(image)
    positive_roots = tuple(sorted(found, key=lambda r: (sum(r), r)))
    expected = _expected_root_count(type_letter, rank)
    if len(positive_roots) != expected:
        raise ValidationError(
            "bad_root_count",
            f"found {len(positive_roots)} positive roots for "
            f"{type_letter}{rank}, expected {expected}",
        )
    logger.debug(
        "Built root datum {}{} with {} positive roots".format(
            type_letter, rank, len(positive_roots)
        )
    )
    return RootDatum(
        type_letter, rank, cartan, symmetrizer, positive_roots
    )


def reflect(datum, mu, gamma):
    """s_gamma(mu) = mu - mu(gamma^vee) gamma."""
    k = datum.coroot_pairing(mu, gamma)
    return mu - Weight.of(gamma).scale(k)


def pairing_a(mu, a_vals):
    """Phi_a at mu: sum r_j c_j with c_j = alpha_j(a)."""
    return sum(
        (Fraction(r) * c for r, c in zip(mu.root_coords, a_vals)),
        Fraction(0),
    )


def root_value(gamma, a_vals):
    """gamma(a) for a root in simple coordinates."""
    return sum(g * c for g, c in zip(gamma, a_vals))


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element held by a reduced word and its image of rho.

    Equality and hashing use the image of rho only, so different reduced
    words of the same element compare equal.
    """

    image: tuple
    word: tuple = field(compare=False)

    @property
    def length(self):
        return len(self.word)

    def __str__(self):
        if not self.word:
            return "e"
        return "".join(f"s{i}" for i in self.word)


def weyl_element(datum, word):
    """Element s_{word[0]} ... s_{word[-1]}; non-reduced words are replaced
    by the canonical reduced word of the element."""
    word = tuple(word)
    if any(not 1 <= i <= datum.rank for i in word):
        raise ValidationError(
            "bad_word", f"word {word} uses indices outside 1..{datum.rank}"
        )
    image = datum.act(word, datum.rho)
    reduced = _reduced_word(datum, image)
    if len(reduced) != len(word):
        logger.warning(
            "Word {} is not reduced, using {}".format(word, reduced)
        )
        word = reduced
    return WeylElement(image.root_coords, word)


def identity(datum):
    return WeylElement(datum.rho.root_coords, ())


def _reduced_word(datum, image):
    """Reduced word of the element mapping rho to `image`, peeling off the
    smallest left descent first."""
    mu = image if isinstance(image, Weight) else Weight(tuple(image))
    word = []
    while True:
        pairings = datum.simple_pairings(mu)
        descent = next(
            (i for i, k in enumerate(pairings) if k < 0), None
        )
        if descent is None:
            return tuple(word)
        mu = datum.simple_reflect(mu, descent)
        word.append(descent + 1)


def is_left_descent(datum, w, i):
    """s_i w < w, i.e. w^{-1} alpha_i is negative (1-based `i`)."""
    return datum.simple_pairings(Weight(w.image))[i - 1] < 0


def left_multiply(datum, i, w):
    image = datum.simple_reflect(Weight(w.image), i - 1)
    if is_left_descent(datum, w, i):
        return WeylElement(image.root_coords, _reduced_word(datum, image))
    return WeylElement(image.root_coords, (i,) + w.word)


def bruhat_leq(datum, u, w):
    """u <= w in Bruhat order, by the recursive descent criterion.

    For a left descent s of w: if s is also a left descent of u then
    u <= w iff su <= sw, otherwise u <= w iff u <= sw.
    """
    while True:
        if u.length > w.length:
            return False
        if w.length == 0:
            return u.length == 0
        i = next(
            j for j in range(1, datum.rank + 1)
            if is_left_descent(datum, w, j)
        )
        if is_left_descent(datum, u, i):
            u = left_multiply(datum, i, u)
        w = left_multiply(datum, i, w)


def bruhat_leq_subword(datum, u, w):
    """u <= w in Bruhat order, by exhaustive search over subwords of a
    reduced word of w."""
    if u.length > w.length:
        return False
    images = set()
    for size in range(len(w.word) + 1):
        if size < u.length:
            continue
        for positions in combinations(range(len(w.word)), size):
            sub = tuple(w.word[p] for p in positions)
            images.add(datum.act(sub, datum.rho).root_coords)
    return u.image in images


def _orbit(datum, start, generators, cap):
    """BFS over the orbit of `start`, moving only down in the dominance
    direction; returns (weight, word) pairs with minimal words."""
    words = {start: ()}
    order = [start]
    frontier = [start]
    while frontier:
        next_frontier = []
        for mu in frontier:
            pairings = datum.simple_pairings(mu)
            for i in generators:
                if pairings[i - 1] <= 0:
                    continue
                image = datum.simple_reflect(mu, i - 1)
                if image in words:
                    continue
                words[image] = (i,) + words[mu]
                order.append(image)
                next_frontier.append(image)
                if len(order) > cap:
                    err_msg = (
                        f"orbit enumeration in {datum} exceeds the cap "
                        f"of {cap} elements"
                    )
                    logger.error(err_msg)
                    raise ValidationError("orbit_too_large", err_msg)
        frontier = next_frontier
    return [(mu, words[mu]) for mu in order]


def weyl_orbit(datum, lam, cap=None):
    """The orbit W lam with minimal coset representatives.

    Returns:
        list of (Weight, WeylElement) sorted by (length, word); the element
        is the unique minimal-length v with v lam equal to the weight
    """
    cap = MAX_WEYL_ORDER if cap is None else cap
    if lam.is_zero() or not datum.is_dominant(lam):
        err_msg = f"lambda = {lam} must be dominant and nonzero"
        logger.error(err_msg)
        raise ValidationError("bad_lambda", err_msg)
    generators = range(1, datum.rank + 1)
    orbit = [
        (mu, weyl_element(datum, word))
        for mu, word in _orbit(datum, lam, generators, cap)
    ]
    orbit.sort(key=lambda pair: (pair[1].length, pair[1].word))
    logger.debug(
        "Orbit of {} in {} has {} elements".format(lam, datum, len(orbit))
    )
    return orbit


def weyl_group(datum, cap=None):
    """All elements of W with reduced words, via the regular orbit of
    rho."""
    cap = MAX_WEYL_ORDER if cap is None else cap
    return [
        element for _, element in weyl_orbit(datum, datum.rho, cap=cap)
    ]


def stabilizer_order(datum, lam, cap=None):
    """Order of W_lam, generated by the s_i with lam(alpha_i^vee) = 0."""
    cap = MAX_WEYL_ORDER if cap is None else cap
    pairings = datum.simple_pairings(lam)
    generators = [i + 1 for i, k in enumerate(pairings) if k == 0]
    return len(_orbit(datum, datum.rho, generators, cap))


def ambient_coordinates(datum, mu):
    """Trace-zero coordinates in R^{rank+1} of a type A weight."""
    if datum.type_letter != 'A':
        raise ValidationError(
            "ambient_type_a_only",
            "ambient coordinates are only defined for type A",
        )
    r = (Fraction(0),) + tuple(mu.root_coords) + (Fraction(0),)
    return tuple(r[k + 1] - r[k] for k in range(datum.rank + 1))


def pairings_from_ambient(a_ambient):
    """c_j = alpha_j(a) = a_j - a_{j+1} for alpha_j = e_j^* - e_{j+1}^*."""
    return tuple(
        a_ambient[j] - a_ambient[j + 1] for j in range(len(a_ambient) - 1)
    )
