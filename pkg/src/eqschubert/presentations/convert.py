"""
Conversions among the Schubert, GKM and Borel presentations, plus the operations that take a class in any of them
(``dd_word``, ``weyl_act``, ``convert``).
"""
import functools
import logging
from typing import Dict, Optional, Sequence, Union

from eqschubert.polynomial import DoublePolynomial, divided_difference_word, evaluate_x_to_t, weyl_act_x
from eqschubert.presentations.borel import BorelClass, divided_difference_table, weyl_act_borel
from eqschubert.presentations.double_schubert import double_schubert_polynomial
from eqschubert.presentations.gkm import GKMClass, InsufficientCutoff, dd_gkm, weyl_act_gkm
from eqschubert.presentations.localization import billey_localize
from eqschubert.presentations.schubert import SchubertSum, dd_schubert, weyl_act_schubert
from eqschubert.roots import RootSystem
from eqschubert.weyl import (
    WeylElement,
    enumerate_up_to_length,
    from_word,
    identity,
    is_reduced,
    reduced_word,
    simple_reflection,
)


logger = logging.getLogger(__name__)


PRESENTATIONS = ("schubert", "gkm", "borel")

AnyClass = Union[SchubertSum, GKMClass, BorelClass]


class NonReducedWord(ValueError):
    pass


def presentation_of(cls: AnyClass) -> str:
    if isinstance(cls, SchubertSum):
        return "schubert"
    if isinstance(cls, GKMClass):
        return "gkm"
    if isinstance(cls, BorelClass):
        return "borel"
    raise TypeError(f"Not a cohomology class: {type(cls).__name__}")


# to GKM


def borel_to_gkm(f: BorelClass, cutoff: int) -> GKMClass:
    """h_v = ev(v . f) for every v with l(v) <= cutoff."""
    if cutoff < 0:
        raise InsufficientCutoff(f"cutoff must be nonnegative, got {cutoff}")
    return GKMClass.from_function(f.rs, cutoff, lambda v: evaluate_x_to_t(weyl_act_x(v, f.rep)))


def schubert_to_gkm(s: SchubertSum, cutoff: int) -> GKMClass:
    """h_v = sum_w d_w i*_v(X_w), with the localizations from Billey's formula."""
    if cutoff < 0:
        raise InsufficientCutoff(f"cutoff must be nonnegative, got {cutoff}")
    rs = s.rs

    def value(v: WeylElement) -> DoublePolynomial:
        out = DoublePolynomial.zero(rs.n)
        for w, d in s.coeffs.items():
            if w.length <= v.length:
                loc = billey_localize(w, v)
                if not loc.is_zero:
                    out = out + d * loc
        return out

    return GKMClass.from_function(rs, cutoff, value)


# to Schubert


def gkm_to_schubert(h: GKMClass) -> SchubertSum:
    """
    d_w = (Delta_w h)_e, for w up to the degree of h. Delta_w is built from Delta_{s_i w} with i the first letter of
    the reduced word of w, so every w costs one dd_gkm.

    Raises:
        InsufficientCutoff: if h is truncated below its degree
    """
    rs = h.rs
    if h.is_zero:
        return SchubertSum.zero(rs)
    degree = h.degree
    if not h.complete and h.cutoff < degree:
        raise InsufficientCutoff(f"A class of degree {degree} needs cutoff >= {degree}, got {h.cutoff}")
    max_length = min(degree, rs.num_positive_roots)
    e = identity(rs)
    table: Dict[WeylElement, GKMClass] = {}
    coeffs: Dict[WeylElement, DoublePolynomial] = {}
    for w in enumerate_up_to_length(rs, max_length):
        if w.is_identity:
            current = h
        else:
            i = reduced_word(w)[0]
            shorter = table.get(simple_reflection(rs, i) * w)
            if shorter is None:
                continue
            current = dd_gkm(i, shorter)
        if current.is_zero:
            continue
        # anything below a zero class stays zero, so only nonzero classes are kept
        table[w] = current
        coeffs[w] = current[e]
    return SchubertSum(rs, coeffs)


def borel_to_schubert(f: BorelClass) -> SchubertSum:
    """d_w = ev(Delta_w f); only w with l(w) <= deg_x(f) can contribute."""
    rs = f.rs
    if f.rep.is_zero:
        return SchubertSum.zero(rs)
    table = divided_difference_table(rs, f.rep, f.rep.x_degree)
    return SchubertSum(rs, {w: evaluate_x_to_t(g) for w, g in table.items() if not g.is_zero})


# to Borel


def schubert_to_borel(s: SchubertSum, method: Optional[str] = None) -> BorelClass:
    """sum_w d_w S_w with the double Schubert polynomials built from ``method`` sigma representatives."""
    rs = s.rs
    out = DoublePolynomial.zero(rs.n)
    for w, d in s.terms():
        out = out + d * double_schubert_polynomial(w, method).rep
    return BorelClass(rs, out)


def gkm_to_borel(h: GKMClass, method: Optional[str] = None) -> BorelClass:
    return schubert_to_borel(gkm_to_schubert(h), method)


# any presentation


def _check_reduced(rs: RootSystem, word: Sequence[int]):
    if not is_reduced(rs, word):
        raise NonReducedWord(f"{tuple(word)} is not a reduced word of {rs.cartan_type}")


@functools.singledispatch
def dd_word(cls, word: Sequence[int]):
    """Delta_{i_1} o ... o Delta_{i_l} for a reduced word (i_1, ..., i_l); the last letter is applied first."""
    raise TypeError(f"Divided differences are not defined on {type(cls).__name__}")


@dd_word.register
def _(cls: SchubertSum, word: Sequence[int]) -> SchubertSum:
    _check_reduced(cls.rs, word)
    for i in reversed(word):
        cls = dd_schubert(i, cls)
    return cls


@dd_word.register
def _(cls: GKMClass, word: Sequence[int]) -> GKMClass:
    _check_reduced(cls.rs, word)
    for i in reversed(word):
        cls = dd_gkm(i, cls)
    return cls


@dd_word.register
def _(cls: BorelClass, word: Sequence[int]) -> BorelClass:
    _check_reduced(cls.rs, word)
    return BorelClass(cls.rs, divided_difference_word(cls.rs, word, cls.rep))


def _as_element(rs: RootSystem, w: Union[WeylElement, Sequence[int]]) -> WeylElement:
    return w if isinstance(w, WeylElement) else from_word(rs, w)


@functools.singledispatch
def weyl_act(cls, w: Union[WeylElement, Sequence[int]]):
    """The action of w on the x-side of a class, in the class's own presentation."""
    raise TypeError(f"The Weyl action is not defined on {type(cls).__name__}")


@weyl_act.register
def _(cls: SchubertSum, w: Union[WeylElement, Sequence[int]]) -> SchubertSum:
    for i in reversed(reduced_word(_as_element(cls.rs, w))):
        cls = weyl_act_schubert(i, cls)
    return cls


@weyl_act.register
def _(cls: GKMClass, w: Union[WeylElement, Sequence[int]]) -> GKMClass:
    return weyl_act_gkm(_as_element(cls.rs, w), cls)


@weyl_act.register
def _(cls: BorelClass, w: Union[WeylElement, Sequence[int]]) -> BorelClass:
    return weyl_act_borel(_as_element(cls.rs, w), cls)


def convert(cls: AnyClass, target: str, cutoff: Optional[int] = None, method: Optional[str] = None) -> AnyClass:
    """
    Converts between any two presentations. ``cutoff`` bounds the vertex set of GKM output and defaults to the whole
    group; ``method`` picks the sigma representatives used on the way to the Borel presentation.
    """
    if target not in PRESENTATIONS:
        raise ValueError(f"Unknown presentation {target!r}; expected one of {PRESENTATIONS}")
    source = presentation_of(cls)
    if source == target:
        return cls
    if target == "gkm":
        cutoff = cls.rs.num_positive_roots if cutoff is None else cutoff
        if source == "schubert":
            return schubert_to_gkm(cls, cutoff)
        return borel_to_gkm(cls, cutoff)
    if target == "schubert":
        if source == "gkm":
            return gkm_to_schubert(cls)
        return borel_to_schubert(cls)
    if source == "schubert":
        return schubert_to_borel(cls, method)
    return gkm_to_borel(cls, method)
