import dataclasses
import functools
import logging
import re
from collections import deque
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np
import sympy


logger = logging.getLogger(__name__)


class InvalidCartanType(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class RootSystemMismatch(ValueError):
    pass


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# exponents of the Weyl group; |W| = prod(e + 1)
_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclasses.dataclass(frozen=True, order=True)
class CartanType:
    """A finite Cartan type such as ``A2`` or ``E8``. Node numbering follows Bourbaki."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDEFG" or len(self.family) != 1:
            raise InvalidCartanType(f"Unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidCartanType(f"Rank must be a positive integer, got {self.rank!r}")
        if self.family in _MIN_RANK and self.rank < _MIN_RANK[self.family]:
            raise InvalidCartanType(f"Type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}")
        if self.family in _FIXED_RANKS and self.rank not in _FIXED_RANKS[self.family]:
            raise InvalidCartanType(f"Type {self.family} exists only in ranks {_FIXED_RANKS[self.family]}")

    @staticmethod
    def parse(text: str) -> "CartanType":
        m = _TYPE_RE.match(text)
        if m is None:
            raise InvalidCartanType(f"Cannot parse Cartan type {text!r}; expected e.g. 'A2' or 'E8'")
        return CartanType(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def exponents(self) -> Tuple[int, ...]:
        n = self.rank
        if self.family == "A":
            return tuple(range(1, n + 1))
        if self.family in "BC":
            return tuple(range(1, 2 * n, 2))
        if self.family == "D":
            return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        return _EXCEPTIONAL_EXPONENTS[(self.family, n)]

    @property
    def weyl_group_order(self) -> int:
        order = 1
        for e in self.exponents:
            order *= e + 1
        return order


@dataclasses.dataclass(frozen=True)
class Weight:
    """A weight written in the simple-root basis. Roots have integer coordinates."""

    coords: Tuple[Fraction, ...]

    @staticmethod
    def of(*coords) -> "Weight":
        return Weight(tuple(Fraction(c) for c in coords))

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight(tuple(Fraction(0) for _ in range(n)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "Weight":
        s = Fraction(scalar)
        return Weight(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def to_text(self, prefix: str = "a") -> str:
        """Renders as a combination of simple roots, e.g. ``a1+2a2``."""
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}"
            parts.append(f"{sign}{coef}{prefix}{i}")
        if not parts:
            return "0"
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _check_same_rank(a: Weight, b: Weight):
    if a.rank != b.rank:
        raise RootSystemMismatch(f"Weights of rank {a.rank} and {b.rank} cannot be combined")


@dataclasses.dataclass(frozen=True)
class RootSystem:
    """
    Cartan data of a finite root system.

    ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>``. Positive roots are kept in the simple-root basis, sorted by
    height and then by coordinates, so that the simple roots come first in index order.
    """

    cartan_type: CartanType
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    positive_roots: Tuple[Weight, ...]
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...] = dataclasses.field(repr=False)

    cartan_array: np.ndarray = dataclasses.field(repr=False, compare=False, hash=False)
    positive_root_array: np.ndarray = dataclasses.field(repr=False, compare=False, hash=False)

    @property
    def n(self) -> int:
        return self.cartan_type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def __str__(self):
        return str(self.cartan_type)


@functools.lru_cache(maxsize=None)
def build_root_system(cartan_type: CartanType) -> RootSystem:
    """
    Builds the root system of the given type. Positive roots are generated by saturating the simple roots under the
    simple reflections, keeping vectors with nonnegative coordinates.
    """
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)

    cartan = _cartan_matrix(cartan_type)
    n = cartan_type.rank
    symmetrizer = _symmetrizer(cartan)

    inv = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)) for i in range(n))

    roots = _saturate_positive_roots(cartan)
    positive_roots = tuple(Weight.of(*r) for r in roots)

    rs = RootSystem(
        cartan_type=cartan_type,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        symmetrizer=symmetrizer,
        positive_roots=positive_roots,
        cartan_inverse=cartan_inverse,
        cartan_array=np.array(cartan, dtype=np.int64),
        positive_root_array=np.array(roots, dtype=np.int64).reshape(len(roots), n),
    )
    logger.debug(f"Built root system {cartan_type} with {len(positive_roots)} positive roots")
    return rs


def _cartan_matrix(ct: CartanType) -> List[List[int]]:
    n = ct.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1):
        # 1-indexed nodes
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    if ct.family in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if ct.family == "B":
            # alpha_n is short
            bond(n - 1, n, -1, -2)
        elif ct.family == "C":
            # alpha_n is long
            bond(n - 1, n, -2, -1)
    elif ct.family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif ct.family == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]:
            if j <= n:
                bond(i, j)
        bond(2, 4)
    elif ct.family == "F":
        bond(1, 2)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif ct.family == "G":
        # alpha_1 short
        bond(1, 2, -3, -1)
    return c


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    n = len(cartan)
    d: Dict[int, Fraction] = {0: Fraction(1)}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and j not in d:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    if len(d) != n:
        raise InvalidCartanType("Dynkin diagram is not connected")
    smallest = min(d.values())
    return tuple(d[i] / smallest for i in range(n))


def _saturate_positive_roots(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(n):
            pairing = sum(cartan[i][j] * r[j] for j in range(n))
            image = tuple(r[k] - (pairing if k == i else 0) for k in range(n))
            if image not in seen and all(x >= 0 for x in image) and any(x > 0 for x in image):
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))


def check_index(rs: RootSystem, i: int) -> int:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= rs.n:
        raise IndexOutOfRange(f"Simple reflection index {i} out of range 1..{rs.n} for {rs.cartan_type}")
    return int(i)


def simple_root(rs: RootSystem, i: int) -> Weight:
    check_index(rs, i)
    return Weight.of(*[1 if k == i - 1 else 0 for k in range(rs.n)])


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    """omega_i in the simple-root basis: column i of the inverse Cartan matrix."""
    check_index(rs, i)
    return Weight(tuple(rs.cartan_inverse[k][i - 1] for k in range(rs.n)))


def fundamental_coords(rs: RootSystem, weight: Weight) -> Tuple[Fraction, ...]:
    """Coordinates of a weight in the fundamental-weight basis, i.e. ``<weight, alpha_i^vee>`` for each i."""
    _check_weight(rs, weight)
    C = rs.cartan_matrix
    return tuple(sum((C[i][j] * weight.coords[j] for j in range(rs.n)), Fraction(0)) for i in range(rs.n))


def from_fundamental_coords(rs: RootSystem, coords: Sequence) -> Weight:
    if len(coords) != rs.n:
        raise RootSystemMismatch(f"Expected {rs.n} fundamental coordinates, got {len(coords)}")
    return Weight(
        tuple(
            sum((rs.cartan_inverse[k][i] * Fraction(coords[i]) for i in range(rs.n)), Fraction(0)) for k in range(rs.n)
        )
    )


def inner_product(rs: RootSystem, a: Weight, b: Weight) -> Fraction:
    """The W-invariant form with ``(alpha_i, alpha_j) = d_i * C[i][j]``."""
    _check_weight(rs, a)
    _check_weight(rs, b)
    total = Fraction(0)
    for i in range(rs.n):
        if a.coords[i] == 0:
            continue
        for j in range(rs.n):
            total += a.coords[i] * rs.symmetrizer[i] * rs.cartan_matrix[i][j] * b.coords[j]
    return total


def coroot_pair(rs: RootSystem, weight: Weight, beta: Weight) -> Fraction:
    """``<weight, beta^vee> = 2 (weight, beta) / (beta, beta)``."""
    if beta.is_zero():
        raise ValueError("Cannot pair with the zero vector")
    return 2 * inner_product(rs, weight, beta) / inner_product(rs, beta, beta)


def reflect(rs: RootSystem, i: int, weight: Weight) -> Weight:
    """s_i(weight) = weight - <weight, alpha_i^vee> alpha_i"""
    check_index(rs, i)
    _check_weight(rs, weight)
    pairing = sum((rs.cartan_matrix[i - 1][j] * weight.coords[j] for j in range(rs.n)), Fraction(0))
    coords = list(weight.coords)
    coords[i - 1] -= pairing
    return Weight(tuple(coords))


def is_root(rs: RootSystem, weight: Weight) -> bool:
    return weight in _root_set(rs)


def is_positive_root(rs: RootSystem, weight: Weight) -> bool:
    return weight in _positive_root_set(rs)


@functools.lru_cache(maxsize=None)
def _positive_root_set(rs: RootSystem) -> frozenset:
    return frozenset(rs.positive_roots)


@functools.lru_cache(maxsize=None)
def _root_set(rs: RootSystem) -> frozenset:
    return frozenset(rs.positive_roots) | frozenset(-r for r in rs.positive_roots)


def _check_weight(rs: RootSystem, weight: Weight):
    if weight.rank != rs.n:
        raise RootSystemMismatch(f"Weight of rank {weight.rank} used with root system {rs.cartan_type}")
