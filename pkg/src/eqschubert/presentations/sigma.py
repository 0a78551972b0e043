"""
Representatives sigma_w of the ordinary Schubert classes, as polynomials in the x-variables only. These feed the double
Schubert polynomial construction, which works with any choice of representatives.

Three ways to get them:

* ``ls``: type A only. The ordinary Schubert polynomials, sigma_{w0} = z_1^n z_2^(n-1) ... z_n in the x-variables and
  sigma_w = Delta_i sigma_{w s_i}. With these the double Schubert polynomials come out as the classical ones, exactly
  and not only modulo the ideal. The default in type A.
* ``bgg``: sigma_{w0} = (1/|W|) prod_{beta > 0} (-beta)(x) and sigma_w = Delta_i sigma_{w s_i}. Needs all of W.
* ``linear-system``: for each length k, the constants Delta_v(x_J) over degree-k monomials x_J and l(v) = k form a
  matrix of full column rank; inverting a square block of it gives a dual family. Only needs elements of length k.
"""
import dataclasses
import functools
import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from eqschubert import store
from eqschubert.coords import type_a_adapter
from eqschubert.polynomial import (
    DoublePolynomial,
    divided_difference,
    divided_difference_word,
    linear_x,
    parse_polynomial,
)
from eqschubert.presentations.borel import divided_difference_table
from eqschubert.roots import RootSystem, RootSystemMismatch
from eqschubert.weyl import (
    WeylElement,
    all_elements,
    descent,
    element_sort_key,
    elements_of_length,
    identity,
    inverse,
    longest_element,
    reduced_word,
    simple_reflection,
)


logger = logging.getLogger(__name__)


SIGMA_METHODS = ("ls", "linear-system", "bgg")


class MissingSigmaError(KeyError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


@dataclasses.dataclass(frozen=True)
class SigmaTable:
    """sigma_w for some set of w. ``method`` records how the entries were produced."""

    rs: RootSystem
    entries: Mapping[WeylElement, DoublePolynomial]
    method: str

    def __post_init__(self):
        if self.method not in SIGMA_METHODS:
            raise ValueError(f"Unknown sigma method {self.method!r}; expected one of {SIGMA_METHODS}")
        for w, sigma in self.entries.items():
            if w.rs.cartan_type != self.rs.cartan_type:
                raise RootSystemMismatch(f"sigma table for {self.rs.cartan_type} got an element of {w.rs.cartan_type}")
            if sigma.rank != self.rs.n or not is_x_only(sigma):
                raise ValueError(f"sigma_{w} must be a polynomial in the x-variables, got {sigma}")

    def __getitem__(self, w: WeylElement) -> DoublePolynomial:
        try:
            return self.entries[w]
        except KeyError:
            raise MissingSigmaError(f"No sigma representative for {w} in this {self.method} table") from None

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.entries

    def __len__(self):
        return len(self.entries)

    @property
    def elements(self) -> List[WeylElement]:
        return sorted(self.entries, key=element_sort_key)

    def restrict(self, elements: Iterable[WeylElement]) -> "SigmaTable":
        return SigmaTable(self.rs, {w: self[w] for w in elements}, self.method)


def is_x_only(f: DoublePolynomial) -> bool:
    n = f.rank
    return all(not any(monom[:n]) for monom in f.poly.itermonoms())


@functools.lru_cache(maxsize=None)
def sigma_bgg(rs: RootSystem) -> SigmaTable:
    """
    The full table from the top class down.

    Raises:
        GroupTooLarge: if |W| is over the configured ``max_group_order``
    """
    elements = all_elements(rs)
    top = DoublePolynomial.one(rs.n)
    for beta in rs.positive_roots:
        top = top * linear_x(rs, -beta)
    top = top.scale(Fraction(1, len(elements)))

    entries: Dict[WeylElement, DoublePolynomial] = {longest_element(rs): top}
    for w in sorted(elements, key=element_sort_key, reverse=True):
        if w in entries:
            continue
        # the smallest ascent; w s_i is one longer, so it is already in the table
        i = next(i for i in range(1, rs.n + 1) if not descent(w, i))
        entries[w] = divided_difference(rs, i, entries[w * simple_reflection(rs, i)])
    logger.debug(f"Built the bgg sigma table for {rs.cartan_type} ({len(entries)} entries)")
    return SigmaTable(rs, entries, "bgg")


def _check_type_a(rs: RootSystem):
    if rs.cartan_type.family != "A":
        raise ValueError(f"ls sigma representatives are only defined in type A, not {rs.cartan_type}")


@functools.lru_cache(maxsize=None)
def _ls_top(rs: RootSystem) -> DoublePolynomial:
    n = rs.n
    staircase = "*".join(f"z{k}^{n + 1 - k}" for k in range(1, n + 1))
    return type_a_adapter(n, staircase, family="x")


@functools.lru_cache(maxsize=None)
def sigma_ls(w: WeylElement) -> DoublePolynomial:
    """
    The ordinary Schubert polynomial of w, walking up to w0 through the smallest right ascents. Only touches the
    elements on that chain, so it does not enumerate W.
    """
    rs = w.rs
    _check_type_a(rs)
    if w == longest_element(rs):
        return _ls_top(rs)
    i = next(i for i in range(1, rs.n + 1) if not descent(w, i))
    return divided_difference(rs, i, sigma_ls(w * simple_reflection(rs, i)))


def default_sigma_method(rs: RootSystem) -> str:
    return "ls" if rs.cartan_type.family == "A" else "linear-system"


def resolve_sigma_method(rs: RootSystem, method: Optional[str]) -> str:
    """``method``, or the default for the type when it is None."""
    if method is None:
        return default_sigma_method(rs)
    if method not in SIGMA_METHODS:
        raise ValueError(f"Unknown sigma method {method!r}; expected one of {SIGMA_METHODS}")
    if method == "ls":
        _check_type_a(rs)
    return method


def _x_monomials(rs: RootSystem, k: int) -> List[DoublePolynomial]:
    """Monomials of degree k in x_1..x_n, graded-lex descending."""
    n = rs.n
    exponents = set()
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for j in combo:
            e[j] += 1
        exponents.add(tuple(e))
    out = []
    for e in sorted(exponents, reverse=True):
        monomial = DoublePolynomial.one(n)
        for j, power in enumerate(e):
            if power:
                monomial = monomial * DoublePolynomial.x(n, j + 1) ** power
        out.append(monomial)
    return out


@functools.lru_cache(maxsize=None)
def sigma_linear_system(rs: RootSystem, k: int) -> SigmaTable:
    """
    sigma_v for every v of length k from x_J = sum_{l(v) = k} Delta_v(x_J) sigma_v.

    The system is underdetermined. The pivot monomials are the first linearly independent ones in graded-lex
    descending order, and each sigma_v is supported on them, so the answer is deterministic.

    Raises:
        InconsistentSystemError: if the matrix Delta_v(x_J) does not have full column rank
    """
    if k < 0:
        raise ValueError(f"Degree must be nonnegative, got {k}")
    n = rs.n
    if k == 0:
        return SigmaTable(rs, {identity(rs): DoublePolynomial.one(n)}, "linear-system")
    targets = elements_of_length(rs, k)
    if not targets:
        return SigmaTable(rs, {}, "linear-system")

    monomials = _x_monomials(rs, k)
    m = len(targets)
    # values[J][c] = Delta_{targets[c]}(x_J), a rational constant
    values: List[List] = []
    for x_J in monomials:
        table = divided_difference_table(rs, x_J, k)
        row = []
        for v in targets:
            c = table[v].constant_term()
            row.append(QQ(c.numerator, c.denominator))
        values.append(row)

    width = len(monomials)
    transposed = DomainMatrix([[values[J][c] for J in range(width)] for c in range(m)], (m, width), QQ)
    _, pivots = transposed.rref()
    if len(pivots) < m:
        raise InconsistentSystemError(
            f"Degree {k} system for {rs.cartan_type} has rank {len(pivots)} but {m} unknowns"
        )
    chosen = list(pivots)[:m]
    block = DomainMatrix([[values[J][c] for c in range(m)] for J in chosen], (m, m), QQ)
    inv = block.inv().to_Matrix()

    entries: Dict[WeylElement, DoublePolynomial] = {}
    for c, v in enumerate(targets):
        sigma = DoublePolynomial.zero(n)
        for p, J in enumerate(chosen):
            coeff = inv[c, p]
            if coeff != 0:
                sigma = sigma + monomials[J].scale(Fraction(int(coeff.p), int(coeff.q)))
        entries[v] = sigma
    logger.info(f"Solved the degree {k} sigma system for {rs.cartan_type}: {m} elements, {len(monomials)} monomials")
    return SigmaTable(rs, entries, "linear-system")


def _sigma_key(v: WeylElement) -> store.CacheKey:
    return store.CacheKey.of("sigma", v.rs.cartan_type, "linear-system", str(reduced_word(v)))


def _linear_system_entry(v: WeylElement) -> DoublePolynomial:
    rs = v.rs
    payload = store.get(_sigma_key(v))
    if payload is not None:
        return parse_polynomial(payload, rs.n)
    table = sigma_linear_system(rs, v.length)
    for u, sigma in table.entries.items():
        store.put(_sigma_key(u), str(sigma))
    return table[v]


def _derive_from_longer(v: WeylElement, entries: Mapping[WeylElement, DoublePolynomial]) -> Optional[DoublePolynomial]:
    """sigma_v = Delta_{v^{-1} w} sigma_w, valid only when l(v^{-1} w) = l(w) - l(v)."""
    v_inv = inverse(v)
    for w in sorted(entries, key=element_sort_key):
        if w.length <= v.length:
            continue
        u = v_inv * w
        if u.length == w.length - v.length:
            return divided_difference_word(v.rs, reduced_word(u), entries[w])
    return None


def complete_sigma(rs: RootSystem, table: SigmaTable, elements: Iterable[WeylElement]) -> SigmaTable:
    """
    Adds sigma_v for every requested v missing from ``table``. Longer elements are handled first, and each new entry
    comes from a longer one by divided differences when the lengths allow it, otherwise from the linear system for
    its degree.
    """
    entries = dict(table.entries)
    missing = {v for v in elements if v not in entries}
    for v in sorted(missing, key=element_sort_key, reverse=True):
        if v.rs.cartan_type != rs.cartan_type:
            raise RootSystemMismatch(f"Cannot add an element of {v.rs.cartan_type} to a {rs.cartan_type} table")
        derived = _derive_from_longer(v, entries)
        entries[v] = derived if derived is not None else _linear_system_entry(v)
    return SigmaTable(rs, entries, table.method)


def sigma_for(rs: RootSystem, elements: Iterable[WeylElement], method: Optional[str] = None) -> SigmaTable:
    """
    A table covering exactly ``elements``; the entries are a deterministic function of that set. ``method`` defaults
    to ``ls`` in type A and ``linear-system`` elsewhere.
    """
    method = resolve_sigma_method(rs, method)
    elements = list(elements)
    if method == "bgg":
        return sigma_bgg(rs).restrict(elements)
    if method == "ls":
        for w in elements:
            if w.rs.cartan_type != rs.cartan_type:
                raise RootSystemMismatch(f"Cannot add an element of {w.rs.cartan_type} to a {rs.cartan_type} table")
        return SigmaTable(rs, {w: sigma_ls(w) for w in elements}, "ls")
    return complete_sigma(rs, SigmaTable(rs, {}, "linear-system"), elements)


def sigma_duality_violations(table: SigmaTable) -> List[Tuple[WeylElement, WeylElement]]:
    """Pairs (v, w) with l(v) = l(w) where Delta_v(sigma_w) is not the Kronecker delta."""
    rs = table.rs
    bad = []
    for w in table.elements:
        dd = divided_difference_table(rs, table[w], w.length)
        for v in elements_of_length(rs, w.length):
            expected = DoublePolynomial.constant(rs.n, 1 if v == w else 0)
            if dd.get(v, DoublePolynomial.zero(rs.n)) != expected:
                bad.append((v, w))
    return bad
