import dataclasses
import functools
import logging
from typing import Callable, List, Mapping, Tuple

from eqschubert.polynomial import DoublePolynomial, NotDivisibleError, exact_divide, linear_t
from eqschubert.roots import RootSystem, RootSystemMismatch, Weight, simple_root
from eqschubert.weyl import (
    WeylElement,
    act,
    element_sort_key,
    enumerate_up_to_length,
    reflection,
    simple_reflection,
)


logger = logging.getLogger(__name__)


class GKMConditionError(ArithmeticError):
    pass


class InsufficientCutoff(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class GKMEdge:
    source: WeylElement
    target: WeylElement
    root: Weight


@dataclasses.dataclass(frozen=True)
class GKMClass:
    """
    A localized class: one t-polynomial per fixed point v, over all v with l(v) <= cutoff. A cutoff of at least the
    number of positive roots means the whole group is present; such a class is ``complete`` and keeps its cutoff
    under divided differences and the Weyl action.
    """

    rs: RootSystem
    cutoff: int
    values: Mapping[WeylElement, DoublePolynomial]

    def __post_init__(self):
        if self.cutoff < 0:
            raise InsufficientCutoff(f"cutoff must be nonnegative, got {self.cutoff}")
        cutoff = min(self.cutoff, self.rs.num_positive_roots)
        object.__setattr__(self, "cutoff", cutoff)
        vertices = vertex_set(self.rs, cutoff)
        if len(self.values) != len(vertices) or any(v not in self.values for v in vertices):
            raise ValueError(f"GKM class values must cover exactly the {len(vertices)} vertices of length <= {cutoff}")
        for v, value in self.values.items():
            if value.rank != self.rs.n or not value.is_t_only:
                raise ValueError(f"GKM value at {v} must be a t-polynomial of rank {self.rs.n}, got {value}")
        object.__setattr__(self, "values", {v: self.values[v] for v in vertices})

    @staticmethod
    def from_function(rs: RootSystem, cutoff: int, fn: Callable[[WeylElement], DoublePolynomial]) -> "GKMClass":
        return GKMClass(rs, cutoff, {v: fn(v) for v in vertex_set(rs, cutoff)})

    @staticmethod
    def constant(rs: RootSystem, cutoff: int, value: DoublePolynomial) -> "GKMClass":
        return GKMClass.from_function(rs, cutoff, lambda v: value)

    @property
    def complete(self) -> bool:
        return self.cutoff >= self.rs.num_positive_roots

    @property
    def vertices(self) -> List[WeylElement]:
        return list(self.values.keys())

    def __getitem__(self, v: WeylElement) -> DoublePolynomial:
        return self.values[v]

    @property
    def degree(self) -> int:
        return max((value.degree for value in self.values.values()), default=-1)

    @property
    def is_zero(self) -> bool:
        return all(value.is_zero for value in self.values.values())

    def __add__(self, other: "GKMClass") -> "GKMClass":
        cutoff = _common_cutoff(self, other)
        return GKMClass.from_function(self.rs, cutoff, lambda v: self.values[v] + other.values[v])

    def __sub__(self, other: "GKMClass") -> "GKMClass":
        cutoff = _common_cutoff(self, other)
        return GKMClass.from_function(self.rs, cutoff, lambda v: self.values[v] - other.values[v])

    def __mul__(self, other: "GKMClass") -> "GKMClass":
        return multiply_gkm(self, other)

    def scale(self, c: DoublePolynomial) -> "GKMClass":
        return GKMClass.from_function(self.rs, self.cutoff, lambda v: self.values[v] * c)

    def restrict(self, cutoff: int) -> "GKMClass":
        if cutoff > self.cutoff:
            raise InsufficientCutoff(f"Cannot extend a class of cutoff {self.cutoff} to {cutoff}")
        return GKMClass.from_function(self.rs, cutoff, lambda v: self.values[v])

    def validate(self):
        """
        Raises:
            GKMConditionError: if some edge v -- s_beta v has values whose difference is not divisible by beta(t)
        """
        bad = gkm_violations(self)
        if bad:
            e = bad[0]
            raise GKMConditionError(
                f"{len(bad)} GKM edges violate divisibility, first {e.source} -- {e.target} ({e.root.to_text()})"
            )


def vertex_set(rs: RootSystem, cutoff: int) -> List[WeylElement]:
    return enumerate_up_to_length(rs, cutoff)


def _common_cutoff(a: GKMClass, b: GKMClass) -> int:
    if a.rs.cartan_type != b.rs.cartan_type:
        raise RootSystemMismatch(f"Cannot combine GKM classes of {a.rs.cartan_type} and {b.rs.cartan_type}")
    return min(a.cutoff, b.cutoff)


def multiply_gkm(a: GKMClass, b: GKMClass) -> GKMClass:
    """Pointwise product on the common vertex set."""
    cutoff = _common_cutoff(a, b)
    return GKMClass.from_function(a.rs, cutoff, lambda v: a.values[v] * b.values[v])


def dd_gkm(i: int, h: GKMClass) -> GKMClass:
    """
    (Delta_i h)_v = (h_v - h_{v s_i}) / (-v(alpha_i)(t)), on the vertices of length <= cutoff - 1 (the full group if
    h is complete).

    Raises:
        InsufficientCutoff: if h only lives at the identity
        GKMConditionError: if some quotient is not exact
    """
    rs = h.rs
    if not h.complete and h.cutoff < 1:
        raise InsufficientCutoff("Divided differences need cutoff >= 1")
    new_cutoff = h.cutoff if h.complete else h.cutoff - 1
    si = simple_reflection(rs, i)

    def value(v: WeylElement) -> DoublePolynomial:
        numerator = h.values[v] - h.values[v * si]
        if numerator.is_zero:
            return numerator
        try:
            return exact_divide(numerator, -_root_at(v, i))
        except NotDivisibleError as e:
            raise GKMConditionError(f"Delta_{i} is not exact at vertex {v}: {e}") from e

    return GKMClass.from_function(rs, new_cutoff, value)


@functools.lru_cache(maxsize=None)
def _root_at(v: WeylElement, i: int) -> DoublePolynomial:
    """v(alpha_i)(t)"""
    return linear_t(v.rs, act(v, simple_root(v.rs, i)))


def weyl_act_gkm(w: WeylElement, h: GKMClass) -> GKMClass:
    """(w . h)_v = h_{v w}. The cutoff drops by l(w) unless h is complete."""
    if h.complete:
        new_cutoff = h.cutoff
    else:
        new_cutoff = h.cutoff - w.length
        if new_cutoff < 0:
            raise InsufficientCutoff(f"Acting by an element of length {w.length} needs cutoff >= {w.length}")
    return GKMClass.from_function(h.rs, new_cutoff, lambda v: h.values[v * w])


@functools.lru_cache(maxsize=64)
def gkm_graph_edges(rs: RootSystem, cutoff: int) -> Tuple[GKMEdge, ...]:
    """Edges {v, s_beta v} between vertices of length <= cutoff, each listed once from its smaller endpoint."""
    vertices = vertex_set(rs, cutoff)
    members = set(vertices)
    edges = []
    for v in vertices:
        key = element_sort_key(v)
        for beta in rs.positive_roots:
            u = reflection(rs, beta) * v
            if u in members and element_sort_key(u) > key:
                edges.append(GKMEdge(v, u, beta))
    return tuple(edges)


def gkm_violations(h: GKMClass) -> List[GKMEdge]:
    """Edges v -- u = s_beta v on which h_v - h_u is not divisible by beta(t)."""
    bad = []
    for edge in gkm_graph_edges(h.rs, h.cutoff):
        diff = h.values[edge.source] - h.values[edge.target]
        if diff.is_zero:
            continue
        try:
            exact_divide(diff, linear_t(h.rs, edge.root))
        except NotDivisibleError:
            bad.append(edge)
    return bad
