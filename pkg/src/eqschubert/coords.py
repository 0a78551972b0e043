"""
Display coordinates. Every computation runs in the canonical fundamental-weight ring; a coordinate system is a pair
of ring maps between its display ring and the canonical one.

* ``canonical``: t_i, x_i are omega_i(t), omega_i(x).
* ``zA``: type A only. z_k = omega_{k-1} - omega_k with omega_0 = omega_{n+1} = 0, in the t and x families. The
  relation z_1 + ... + z_{n+1} = 0 maps to zero; output uses the section omega_k -> -(z_1 + ... + z_k), so z_{n+1}
  never appears: t3 - t1 in A2 prints as -2*t1 - t2. Polynomials in z_1..z_n print unchanged.
* ``alpha``: a_i = alpha_i(t), b_i = alpha_i(x).
"""
import abc
import functools
from typing import List, Literal

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from eqschubert.polynomial import DoublePolynomial, parse_in_ring, polynomial_ring, render, ring_hom
from eqschubert.roots import RootSystem


COORDINATE_MODES = ("canonical", "zA", "alpha")

CoordinateMode = Literal["canonical", "zA", "alpha"]


class Coordinates(abc.ABC):
    name: str

    def __init__(self, rs: RootSystem):
        self.rs = rs

    @property
    @abc.abstractmethod
    def ring(self) -> PolyRing:
        raise NotImplementedError

    @abc.abstractmethod
    def to_canonical(self, poly: PolyElement) -> DoublePolynomial:
        raise NotImplementedError

    @abc.abstractmethod
    def from_canonical(self, f: DoublePolynomial) -> PolyElement:
        raise NotImplementedError

    def parse(self, text: str) -> DoublePolynomial:
        return self.to_canonical(parse_in_ring(text, self.ring))

    def render(self, f: DoublePolynomial) -> str:
        return render(self.from_canonical(f))


class CanonicalCoordinates(Coordinates):
    name = "canonical"

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.rs.n)

    def to_canonical(self, poly: PolyElement) -> DoublePolynomial:
        return DoublePolynomial(self.rs.n, poly)

    def from_canonical(self, f: DoublePolynomial) -> PolyElement:
        return f.poly


class TypeACoordinates(Coordinates):
    name = "zA"

    def __init__(self, rs: RootSystem):
        if rs.cartan_type.family != "A":
            raise ValueError(f"zA coordinates are only defined in type A, not {rs.cartan_type}")
        super().__init__(rs)

    @property
    def ring(self) -> PolyRing:
        return _za_ring(self.rs.n)

    def to_canonical(self, poly: PolyElement) -> DoublePolynomial:
        n = self.rs.n
        canon = polynomial_ring(n)
        images = _z_images(canon, n, 0) + _z_images(canon, n, n)
        return DoublePolynomial(n, ring_hom(poly, canon, images))

    def from_canonical(self, f: DoublePolynomial) -> PolyElement:
        n = self.rs.n
        R = self.ring
        # omega_k -> -(z_1 + ... + z_k)
        images = []
        for offset in (0, n + 1):
            partial = R.zero
            for k in range(n):
                partial -= R.gens[offset + k]
                images.append(partial)
        return ring_hom(f.poly, R, images)


def _z_images(canon: PolyRing, n: int, offset: int) -> List[PolyElement]:
    images = []
    for k in range(1, n + 2):
        image = canon.zero
        if k - 1 >= 1:
            image += canon.gens[offset + k - 2]
        if k <= n:
            image -= canon.gens[offset + k - 1]
        images.append(image)
    return images


@functools.lru_cache(maxsize=None)
def _za_ring(n: int) -> PolyRing:
    names = [f"t{i}" for i in range(1, n + 2)] + [f"x{i}" for i in range(1, n + 2)]
    return ring(names, QQ, grlex)[0]


class AlphaCoordinates(Coordinates):
    name = "alpha"

    @property
    def ring(self) -> PolyRing:
        return _alpha_ring(self.rs.n)

    def to_canonical(self, poly: PolyElement) -> DoublePolynomial:
        n = self.rs.n
        canon = polynomial_ring(n)
        C = self.rs.cartan_matrix
        images = []
        for offset in (0, n):
            for i in range(n):
                # alpha_i = sum_j <alpha_i, alpha_j^vee> omega_j = sum_j C[j][i] omega_j
                images.append(sum((canon.gens[offset + j] * C[j][i] for j in range(n)), canon.zero))
        return DoublePolynomial(n, ring_hom(poly, canon, images))

    def from_canonical(self, f: DoublePolynomial) -> PolyElement:
        n = self.rs.n
        R = self.ring
        inv = self.rs.cartan_inverse
        images = []
        for offset in (0, n):
            for j in range(n):
                # omega_j = sum_k (C^{-1})[k][j] alpha_k
                image = R.zero
                for k in range(n):
                    if inv[k][j]:
                        image += R.gens[offset + k] * QQ(inv[k][j].numerator, inv[k][j].denominator)
                images.append(image)
        return ring_hom(f.poly, R, images)


@functools.lru_cache(maxsize=None)
def _alpha_ring(n: int) -> PolyRing:
    names = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]
    return ring(names, QQ, grlex)[0]


def coordinates(rs: RootSystem, mode: str = "canonical") -> Coordinates:
    if mode == "canonical":
        return CanonicalCoordinates(rs)
    if mode == "zA":
        return TypeACoordinates(rs)
    if mode == "alpha":
        return AlphaCoordinates(rs)
    raise ValueError(f"Unknown coordinate mode {mode!r}; expected one of {COORDINATE_MODES}")


@functools.lru_cache(maxsize=None)
def _adapter_ring(n: int) -> PolyRing:
    names = (
        [f"z{i}" for i in range(1, n + 2)] + [f"t{i}" for i in range(1, n + 2)] + [f"x{i}" for i in range(1, n + 2)]
    )
    return ring(names, QQ, grlex)[0]


def type_a_adapter(n: int, expression: str, family: Literal["t", "x"] = "t") -> DoublePolynomial:
    """
    Reads an expression in z_1..z_{n+1}, t_1..t_{n+1} and x_1..x_{n+1} into the canonical rank-n ring, sending
    z_k (in the given family) and t_k, x_k to omega_{k-1} - omega_k.

    Raises:
        ParseError: on unknown variables, e.g. an index above n+1
    """
    if family not in ("t", "x"):
        raise ValueError(f"family must be 't' or 'x', got {family!r}")
    canon = polynomial_ring(n)
    t_images = _z_images(canon, n, 0)
    x_images = _z_images(canon, n, n)
    z_images = t_images if family == "t" else x_images
    poly = parse_in_ring(expression, _adapter_ring(n))
    return DoublePolynomial(n, ring_hom(poly, canon, z_images + t_images + x_images))
