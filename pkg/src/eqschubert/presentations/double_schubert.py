import functools
import logging
from typing import FrozenSet, Optional, Set, Tuple

from eqschubert import store
from eqschubert.polynomial import DoublePolynomial, divided_difference_word, evaluate_x_to_t, parse_polynomial
from eqschubert.presentations.borel import BorelClass
from eqschubert.presentations.sigma import SigmaTable, resolve_sigma_method, sigma_bgg, sigma_for
from eqschubert.weyl import (
    WeylElement,
    descents,
    element_sort_key,
    inverse,
    longest_element,
    reduced_word,
    simple_reflection,
)


logger = logging.getLogger(__name__)


Decomposition = Tuple[WeylElement, ...]


@functools.lru_cache(maxsize=None)
def factor_decompositions(w: WeylElement, k: int) -> FrozenSet[Decomposition]:
    """
    P_k(w), built over the right descents i of w: every (w_1, ..., w_k) in P_k(w s_i) contributes
    (w_1, ..., w_k s_i), and every (w_1, ..., w_{k-1}) in P_{k-1}(w s_i) contributes (w_1, ..., w_{k-1}, s_i).
    P_0(e) = {()} and P_0(w) is empty otherwise.
    """
    if k < 0 or k > w.length:
        return frozenset()
    if w.is_identity:
        return frozenset({()}) if k == 0 else frozenset()
    if k == 0:
        return frozenset()
    rs = w.rs
    out: Set[Decomposition] = set()
    for i in descents(w):
        si = simple_reflection(rs, i)
        shorter = w * si
        for dec in factor_decompositions(shorter, k):
            out.add(dec[:-1] + (dec[-1] * si,))
        for dec in factor_decompositions(shorter, k - 1):
            out.add(dec + (si,))
    return frozenset(out)


def sorted_decompositions(w: WeylElement, k: int):
    return sorted(factor_decompositions(w, k), key=lambda dec: [element_sort_key(u) for u in dec])


def required_sigma(w: WeylElement) -> Set[WeylElement]:
    """Every factor appearing in some P_k(w); these are the sigma entries double_schubert reads."""
    out: Set[WeylElement] = set()
    for k in range(1, w.length + 1):
        for dec in factor_decompositions(w, k):
            out.update(dec)
    return out


def double_schubert(w: WeylElement, sigma: SigmaTable) -> BorelClass:
    """
    S_w = sum_k (-1)^k sum_{P_k(w)} sigma_{w_1}(t) ... sigma_{w_{k-1}}(t) (sigma_{w_k}(t) - sigma_{w_k}(x))

    where sigma(t) is sigma with x_i replaced by t_i.

    Raises:
        MissingSigmaError: if ``sigma`` lacks a factor of some decomposition
    """
    rs = w.rs
    n = rs.n
    total = DoublePolynomial.zero(n) if not w.is_identity else DoublePolynomial.one(n)
    t_images = {}

    def sigma_t(u: WeylElement) -> DoublePolynomial:
        if u not in t_images:
            t_images[u] = evaluate_x_to_t(sigma[u])
        return t_images[u]

    for k in range(1, w.length + 1):
        sign = -1 if k % 2 else 1
        for dec in sorted_decompositions(w, k):
            term = sigma_t(dec[-1]) - sigma[dec[-1]]
            for u in dec[:-1]:
                term = term * sigma_t(u)
            total = total + term.scale(sign)
    return BorelClass(rs, total)


def _double_schubert_key(w: WeylElement, method: str) -> store.CacheKey:
    return store.CacheKey.of("double-schubert", w.rs.cartan_type, method, str(reduced_word(w)))


def double_schubert_polynomial(w: WeylElement, method: Optional[str] = None) -> BorelClass:
    """
    S_w with sigma representatives from ``method``, read from the current store when present. With the type A default
    ``ls`` this is the classical double Schubert polynomial.
    """
    method = resolve_sigma_method(w.rs, method)
    key = _double_schubert_key(w, method)
    payload = store.get(key)
    if payload is not None:
        return BorelClass(w.rs, parse_polynomial(payload, w.rs.n))
    sigma = sigma_for(w.rs, required_sigma(w), method)
    result = double_schubert(w, sigma)
    store.put(key, str(result.rep))
    logger.debug(f"S_{w} has {len(result.rep.terms())} terms")
    return result


def double_schubert_from_top(w: WeylElement) -> BorelClass:
    """S_w = Delta_{w^{-1} w0} S_{w0}, with S_{w0} from the bgg table. Needs all of W."""
    rs = w.rs
    w0 = longest_element(rs)
    top = double_schubert(w0, sigma_bgg(rs))
    return BorelClass(rs, divided_difference_word(rs, reduced_word(inverse(w) * w0), top.rep))
