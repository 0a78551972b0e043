import dataclasses
import functools
import logging
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from eqschubert.polynomial import DoublePolynomial, linear_t
from eqschubert.roots import RootSystem, RootSystemMismatch, Weight, coroot_pair, simple_root
from eqschubert.weyl import WeylElement, act, descent, element_sort_key, identity, reflection, simple_reflection


logger = logging.getLogger(__name__)


Coefficient = Union[int, DoublePolynomial]


@dataclasses.dataclass(frozen=True)
class SchubertSum:
    """
    A class written in the Schubert basis: sum_w coeffs[w] X_w with t-only coefficients. Zero coefficients are
    dropped on construction.
    """

    rs: RootSystem
    coeffs: Mapping[WeylElement, DoublePolynomial]

    def __post_init__(self):
        cleaned = {}
        for w, c in self.coeffs.items():
            if w.rs.cartan_type != self.rs.cartan_type:
                raise RootSystemMismatch(f"{w!r} does not belong to {self.rs.cartan_type}")
            c = _as_poly(self.rs, c)
            if not c.is_t_only:
                raise ValueError(f"Schubert coefficient of {w} must be a t-polynomial, got {c}")
            if not c.is_zero:
                cleaned[w] = c
        object.__setattr__(self, "coeffs", cleaned)

    @staticmethod
    def zero(rs: RootSystem) -> "SchubertSum":
        return SchubertSum(rs, {})

    @staticmethod
    def basis(w: WeylElement, coefficient: Coefficient = 1) -> "SchubertSum":
        return SchubertSum(w.rs, {w: _as_poly(w.rs, coefficient)})

    @staticmethod
    def from_terms(rs: RootSystem, terms: Iterable[Tuple[WeylElement, Coefficient]]) -> "SchubertSum":
        acc: Dict[WeylElement, DoublePolynomial] = {}
        for w, c in terms:
            acc[w] = acc.get(w, DoublePolynomial.zero(rs.n)) + _as_poly(rs, c)
        return SchubertSum(rs, acc)

    def terms(self) -> List[Tuple[WeylElement, DoublePolynomial]]:
        """Terms in (length, reduced word) order."""
        return sorted(self.coeffs.items(), key=lambda item: element_sort_key(item[0]))

    def coefficient(self, w: WeylElement) -> DoublePolynomial:
        return self.coeffs.get(w, DoublePolynomial.zero(self.rs.n))

    def __add__(self, other: "SchubertSum") -> "SchubertSum":
        self._check(other)
        return SchubertSum.from_terms(self.rs, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __sub__(self, other: "SchubertSum") -> "SchubertSum":
        return self + other.scale(-1)

    def __neg__(self) -> "SchubertSum":
        return self.scale(-1)

    def scale(self, c: Coefficient) -> "SchubertSum":
        """Multiplication by a scalar or a t-polynomial."""
        c = _as_poly(self.rs, c)
        return SchubertSum(self.rs, {w: d * c for w, d in self.coeffs.items()})

    def __mul__(self, c: Coefficient) -> "SchubertSum":
        return self.scale(c)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Largest deg(coefficient) + l(w) over the terms; -1 for the zero class."""
        return max((c.degree + w.length for w, c in self.coeffs.items()), default=-1)

    def is_homogeneous(self) -> bool:
        for w, c in self.coeffs.items():
            if any(sum(m) + w.length != self.degree for m, _ in c.terms()):
                return False
        return True

    def _check(self, other: "SchubertSum"):
        if other.rs.cartan_type != self.rs.cartan_type:
            raise RootSystemMismatch(f"Cannot combine classes of {self.rs.cartan_type} and {other.rs.cartan_type}")


def _as_poly(rs: RootSystem, c: Coefficient) -> DoublePolynomial:
    if isinstance(c, DoublePolynomial):
        if c.rank != rs.n:
            raise RootSystemMismatch(f"Coefficient of rank {c.rank} used with {rs.cartan_type}")
        return c
    return DoublePolynomial.constant(rs.n, c)


def dd_schubert(i: int, s: SchubertSum) -> SchubertSum:
    """Delta_i(X_w) = X_{w s_i} if l(w s_i) = l(w) - 1, else 0; extended t-linearly."""
    si = simple_reflection(s.rs, i)
    return SchubertSum.from_terms(s.rs, [(w * si, d) for w, d in s.coeffs.items() if descent(w, i)])


@functools.lru_cache(maxsize=None)
def chevalley_successors(v: WeylElement) -> Tuple[Tuple[Weight, WeylElement], ...]:
    """Pairs (beta, v s_beta) over positive roots beta with l(v s_beta) = l(v) + 1."""
    out = []
    for beta in v.rs.positive_roots:
        vb = v * reflection(v.rs, beta)
        if vb.length == v.length + 1:
            out.append((beta, vb))
    return tuple(out)


def chevalley_multiply(weight: Weight, s: SchubertSum) -> SchubertSum:
    """
    Multiplies by the degree-2 class weight(x):

        weight(x) X_v = v(weight)(t) X_v - sum_{beta > 0, l(v s_beta) = l(v) + 1} <weight, beta^vee> X_{v s_beta}
    """
    rs = s.rs
    if weight.is_zero():
        return SchubertSum.zero(rs)
    terms: List[Tuple[WeylElement, Coefficient]] = []
    for v, d in s.coeffs.items():
        terms.append((v, d * linear_t(rs, act(v, weight))))
        for beta, vb in chevalley_successors(v):
            pairing = coroot_pair(rs, weight, beta)
            if pairing:
                terms.append((vb, d * (-pairing)))
    return SchubertSum.from_terms(rs, terms)


def weyl_act_schubert(i: int, s: SchubertSum) -> SchubertSum:
    """
    s_i acting on the x-side of the class. Ascent terms are fixed. For a right descent i of w,
    s_i X_w = X_w + alpha_i(x) X_{w s_i}, and the product is expanded with chevalley_multiply, whose index set at
    v = w s_i is {beta > 0 : l(w s_i s_beta) = l(w)}.
    """
    rs = s.rs
    si = simple_reflection(rs, i)
    alpha = simple_root(rs, i)
    out = SchubertSum.zero(rs)
    unchanged = []
    for w, d in s.coeffs.items():
        unchanged.append((w, d))
        if descent(w, i):
            out = out + chevalley_multiply(alpha, SchubertSum.basis(w * si, d))
    return out + SchubertSum.from_terms(rs, unchanged)


def unit(rs: RootSystem) -> SchubertSum:
    return SchubertSum.basis(identity(rs))
