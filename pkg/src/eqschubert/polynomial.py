"""
Exact polynomials in two families of degree-2 generators ``t_1..t_n`` and ``x_1..x_n``, where ``t_i`` and ``x_i``
stand for the fundamental weight omega_i. Arithmetic is delegated to sympy's sparse ``PolyElement`` over QQ with
graded-lex order, so coefficients are exact rationals throughout.
"""
import dataclasses
import functools
import logging
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from eqschubert.roots import RootSystem, RootSystemMismatch, Weight, check_index, fundamental_coords, simple_root
from eqschubert.weyl import WeylElement, fundamental_action


logger = logging.getLogger(__name__)


Scalar = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the remainder is nonzero. The remainder is kept on the exception."""

    def __init__(self, message: str, remainder: "DoublePolynomial"):
        super().__init__(message)
        self.remainder = remainder


class ParseError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def polynomial_ring(rank: int) -> PolyRing:
    """The canonical ring QQ[t_1..t_n, x_1..x_n], graded-lex with t before x."""
    names = [f"t{i}" for i in range(1, rank + 1)] + [f"x{i}" for i in range(1, rank + 1)]
    return ring(names, QQ, grlex)[0]


@dataclasses.dataclass(frozen=True)
class DoublePolynomial:
    rank: int
    poly: PolyElement

    @staticmethod
    def zero(rank: int) -> "DoublePolynomial":
        return DoublePolynomial(rank, polynomial_ring(rank).zero)

    @staticmethod
    def one(rank: int) -> "DoublePolynomial":
        return DoublePolynomial(rank, polynomial_ring(rank).one)

    @staticmethod
    def constant(rank: int, c: Scalar) -> "DoublePolynomial":
        return DoublePolynomial(rank, polynomial_ring(rank).ground_new(_qq(c)))

    @staticmethod
    def t(rank: int, i: int) -> "DoublePolynomial":
        return DoublePolynomial(rank, polynomial_ring(rank).gens[i - 1])

    @staticmethod
    def x(rank: int, i: int) -> "DoublePolynomial":
        return DoublePolynomial(rank, polynomial_ring(rank).gens[rank + i - 1])

    def _coerce(self, other) -> PolyElement:
        if isinstance(other, DoublePolynomial):
            if other.rank != self.rank:
                raise RootSystemMismatch(f"Polynomials of rank {self.rank} and {other.rank} cannot be combined")
            return other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly.ring.ground_new(_qq(other))
        raise TypeError(f"Cannot combine DoublePolynomial with {type(other).__name__}")

    def __add__(self, other) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, self.poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, self.poly - self._coerce(other))

    def __rsub__(self, other) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, self._coerce(other) - self.poly)

    def __mul__(self, other) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, self.poly * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, -self.poly)

    def __pow__(self, exponent: int) -> "DoublePolynomial":
        return DoublePolynomial(self.rank, self.poly**exponent)

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        return render(self.poly)

    def __repr__(self):
        return f"DoublePolynomial({self.rank}, {render(self.poly)!r})"

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def degree(self) -> int:
        """Total polynomial degree (half the cohomological degree); -1 for zero."""
        if not self.poly:
            return -1
        return max(sum(m) for m in self.poly.itermonoms())

    @property
    def x_degree(self) -> int:
        if not self.poly:
            return -1
        return max(sum(m[self.rank :]) for m in self.poly.itermonoms())

    @property
    def is_t_only(self) -> bool:
        return all(not any(m[self.rank :]) for m in self.poly.itermonoms())

    def terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms in canonical (graded-lex, descending) order with exact coefficients."""
        return [(m, _to_fraction(c)) for m, c in self.poly.terms(order=grlex)]

    def constant_term(self) -> Fraction:
        return _to_fraction(self.poly.get(self.poly.ring.zero_monom, QQ.zero))

    def scale(self, c: Scalar) -> "DoublePolynomial":
        return self * c


@dataclasses.dataclass(frozen=True)
class LinearForm:
    """lambda(t) + mu(x) for weights lambda, mu given in the simple-root basis."""

    t_part: Weight
    x_part: Weight

    @staticmethod
    def of_t(weight: Weight) -> "LinearForm":
        return LinearForm(weight, Weight.zero(weight.rank))

    @staticmethod
    def of_x(weight: Weight) -> "LinearForm":
        return LinearForm(Weight.zero(weight.rank), weight)

    def is_zero(self) -> bool:
        return self.t_part.is_zero() and self.x_part.is_zero()

    def to_polynomial(self, rs: RootSystem) -> DoublePolynomial:
        return linear_t(rs, self.t_part) + linear_x(rs, self.x_part)


def linear_t(rs: RootSystem, weight: Weight) -> DoublePolynomial:
    """lambda(t) = sum_i <lambda, alpha_i^vee> t_i"""
    return _linear(rs, weight, 0)


def linear_x(rs: RootSystem, weight: Weight) -> DoublePolynomial:
    return _linear(rs, weight, rs.n)


def _linear(rs: RootSystem, weight: Weight, offset: int) -> DoublePolynomial:
    R = polynomial_ring(rs.n)
    coords = fundamental_coords(rs, weight)
    out = R.zero
    for i, c in enumerate(coords):
        if c:
            out += R.gens[offset + i] * _qq(c)
    return DoublePolynomial(rs.n, out)


def _qq(c: Scalar):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _check_rank(rs: RootSystem, f: DoublePolynomial):
    if f.rank != rs.n:
        raise RootSystemMismatch(f"Polynomial of rank {f.rank} used with root system {rs.cartan_type}")


# Weyl action and evaluation


def weyl_act_x(w: WeylElement, f: DoublePolynomial) -> DoublePolynomial:
    """Substitutes x_i by (w omega_i)(x); t-variables are untouched."""
    _check_rank(w.rs, f)
    if w.is_identity or not f.poly:
        return f
    R = f.poly.ring
    n = f.rank
    F = fundamental_action(w)
    substitutions = []
    for i in range(n):
        image = R.zero
        for j in range(n):
            if F[j][i]:
                image += R.gens[n + j] * F[j][i]
        substitutions.append((R.gens[n + i], image))
    return DoublePolynomial(n, f.poly.compose(substitutions))


def weyl_act_t(w: WeylElement, f: DoublePolynomial) -> DoublePolynomial:
    """Same as weyl_act_x but on the t-variables."""
    _check_rank(w.rs, f)
    if w.is_identity or not f.poly:
        return f
    R = f.poly.ring
    n = f.rank
    F = fundamental_action(w)
    substitutions = []
    for i in range(n):
        image = R.zero
        for j in range(n):
            if F[j][i]:
                image += R.gens[j] * F[j][i]
        substitutions.append((R.gens[i], image))
    return DoublePolynomial(n, f.poly.compose(substitutions))


def evaluate_x_to_t(f: DoublePolynomial) -> DoublePolynomial:
    """Sets x_i = t_i."""
    if f.is_t_only:
        return f
    R = f.poly.ring
    n = f.rank
    return DoublePolynomial(n, f.poly.compose([(R.gens[n + i], R.gens[i]) for i in range(n)]))


def specialize_t_to_zero(f: DoublePolynomial) -> DoublePolynomial:
    R = f.poly.ring
    n = f.rank
    return DoublePolynomial(n, f.poly.compose([(R.gens[i], R.zero) for i in range(n)]))


def exact_divide(
    f: DoublePolynomial, d: Union[LinearForm, DoublePolynomial], rs: Optional[RootSystem] = None
) -> DoublePolynomial:
    """
    Returns q with q * d == f.

    Raises:
        ZeroDivisionError: if d is zero
        NotDivisibleError: if d does not divide f; the exception carries the remainder
    """
    if isinstance(d, LinearForm):
        if rs is None:
            raise ValueError("A root system is needed to divide by a LinearForm")
        d = d.to_polynomial(rs)
    if d.is_zero:
        raise ZeroDivisionError("Division by the zero linear form")
    if f.rank != d.rank:
        raise RootSystemMismatch(f"Cannot divide a rank {f.rank} polynomial by a rank {d.rank} one")
    if f.is_zero:
        return f
    q, r = f.poly.div(d.poly)
    if r:
        remainder = DoublePolynomial(f.rank, r)
        raise NotDivisibleError(f"{render(d.poly)} does not divide {render(f.poly)}; remainder {remainder}", remainder)
    return DoublePolynomial(f.rank, q)


# divided differences


_fast_divided_difference = True


def set_fast_divided_difference(enabled: bool):
    global _fast_divided_difference
    _fast_divided_difference = enabled


def simple_reflection_x(rs: RootSystem, i: int, f: DoublePolynomial) -> DoublePolynomial:
    """s_i on the x-variables: x_i -> x_i - alpha_i(x), other x_j fixed."""
    check_index(rs, i)
    _check_rank(rs, f)
    R = f.poly.ring
    xi = R.gens[rs.n + i - 1]
    return DoublePolynomial(rs.n, f.poly.compose(xi, xi - _alpha_x(rs, i)))


@functools.lru_cache(maxsize=None)
def _alpha_x(rs: RootSystem, i: int) -> PolyElement:
    return linear_x(rs, simple_root(rs, i)).poly


def divided_difference(rs: RootSystem, i: int, f: DoublePolynomial) -> DoublePolynomial:
    if _fast_divided_difference:
        return divided_difference_fast(rs, i, f)
    return divided_difference_borel(rs, i, f)


def divided_difference_borel(rs: RootSystem, i: int, f: DoublePolynomial) -> DoublePolynomial:
    """Delta_i(f) = (f - s_i f) / (-alpha_i(x))"""
    check_index(rs, i)
    _check_rank(rs, f)
    if f.is_zero:
        return f
    numerator = f - simple_reflection_x(rs, i, f)
    return exact_divide(numerator, DoublePolynomial(rs.n, -_alpha_x(rs, i)))


def divided_difference_fast(rs: RootSystem, i: int, f: DoublePolynomial) -> DoublePolynomial:
    """
    Delta_i through the power rule: f is grouped by powers of x_i = omega_i(x) and each group g * x_i^m maps to
    g * L_m, where L_m = Delta_i(x_i^m) is cached per (type, i, m).
    """
    check_index(rs, i)
    _check_rank(rs, f)
    R = f.poly.ring
    k = rs.n + i - 1
    groups: Dict[int, Dict[Tuple[int, ...], object]] = {}
    for monom, coeff in f.poly.items():
        m = monom[k]
        if m:
            groups.setdefault(m, {})[monom[:k] + (0,) + monom[k + 1 :]] = coeff
    out = R.zero
    for m, terms in groups.items():
        out += R.from_dict(terms) * _power_rule_factor(rs, i, m)
    return DoublePolynomial(rs.n, out)


@functools.lru_cache(maxsize=None)
def _power_rule_factor(rs: RootSystem, i: int, m: int) -> PolyElement:
    # Delta_i(x_i^m) = -sum_{k=1}^m (x_i - alpha_i(x))^(k-1) x_i^(m-k)
    R = polynomial_ring(rs.n)
    xi = R.gens[rs.n + i - 1]
    shifted = xi - _alpha_x(rs, i)
    out = R.zero
    for k in range(1, m + 1):
        out += shifted ** (k - 1) * xi ** (m - k)
    return -out


def leibniz_power_rule(rs: RootSystem, i: int, g: DoublePolynomial, m: int) -> DoublePolynomial:
    """
    Delta_i(g * omega_i(x)^m) for g free of omega_i(x). Agrees with divided_difference_borel, including its sign.

    Raises:
        ValueError: if g involves x_i or m is negative
    """
    check_index(rs, i)
    _check_rank(rs, g)
    if m < 0:
        raise ValueError(f"Exponent must be nonnegative, got {m}")
    if g.poly.degree(rs.n + i - 1) > 0:
        raise ValueError(f"g must not involve x{i}")
    if m == 0 or g.is_zero:
        return DoublePolynomial.zero(rs.n)
    return DoublePolynomial(rs.n, g.poly * _power_rule_factor(rs, i, m))


def divided_difference_word(rs: RootSystem, word: Sequence[int], f: DoublePolynomial) -> DoublePolynomial:
    """Delta_{i_1} o ... o Delta_{i_l}: the last letter is applied first."""
    for i in reversed(word):
        if f.is_zero:
            break
        f = divided_difference(rs, i, f)
    return f


# text format


def render(poly: PolyElement) -> str:
    """Canonical text: graded-lex descending, rational literals like ``3/2``, ``^`` for powers."""
    if not poly:
        return "0"
    names = [str(s) for s in poly.ring.symbols]
    pieces = []
    for monom, coeff in poly.terms(order=grlex):
        c = _to_fraction(coeff)
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
        mag = abs(c)
        mag_text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if not factors:
            body = mag_text
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = mag_text + "*" + "*".join(factors)
        pieces.append((c < 0, body))
    first_neg, first = pieces[0]
    text = ("-" if first_neg else "") + first
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


_EXPR_RE = re.compile(r"^[A-Za-z0-9\s+\-*/^().]*$")
_IDENT_RE = re.compile(r"[A-Za-z_]+\d*")


def parse_in_ring(text: str, R: PolyRing) -> PolyElement:
    """Parses an expression over the generators of ``R`` (operators ``+ - * ^ /`` and rational literals)."""
    if not text.strip():
        raise ParseError("Empty polynomial expression")
    if not _EXPR_RE.match(text):
        raise ParseError(f"Unexpected characters in polynomial expression {text!r}")
    names = {str(s) for s in R.symbols}
    for ident in _IDENT_RE.findall(text):
        if ident not in names:
            raise ParseError(f"Unknown variable {ident!r}; expected one of {sorted(names)}")
    local = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
        return R.from_expr(expr)
    except Exception as e:  # sympy raises a zoo of exception types here
        raise ParseError(f"Cannot parse polynomial {text!r}: {e}") from e


def parse_polynomial(text: str, rank: int) -> DoublePolynomial:
    return DoublePolynomial(rank, parse_in_ring(text, polynomial_ring(rank)))


def ring_hom(poly: PolyElement, target: PolyRing, images: Sequence[PolyElement]) -> PolyElement:
    """The ring map sending generator k of ``poly.ring`` to ``images[k]`` in ``target``."""
    out = target.zero
    for monom, coeff in poly.items():
        term = target.ground_new(coeff)
        for k, e in enumerate(monom):
            if e:
                term = term * images[k] ** e
        out += term
    return out


