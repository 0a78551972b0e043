import functools
import logging
from typing import Dict, List, Tuple

from eqschubert import store
from eqschubert.polynomial import DoublePolynomial, linear_t, parse_polynomial
from eqschubert.weyl import WeylElement, descent, inversion_roots, reduced_word, simple_reflection


logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def billey_localize(w: WeylElement, v: WeylElement) -> DoublePolynomial:
    """
    i*_v(X_w): with (i_1, ..., i_l) the canonical reduced word of v and
    beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}), sums prod_k beta_{j_k}(t) over index subsequences
    j_1 < ... < j_{l(w)} whose letters multiply to w.

    The sum runs as a memoized scan G(j, u) over positions j and the element u still to be produced, where letter j
    can only be taken if it is a left descent of u.
    """
    rs = w.rs
    n = rs.n
    if w.length > v.length:
        return DoublePolynomial.zero(n)
    if w.is_identity:
        return DoublePolynomial.one(n)

    word = reduced_word(v)
    betas = _beta_polynomials(v)
    one = DoublePolynomial.one(n)
    zero = DoublePolynomial.zero(n)
    memo: Dict[Tuple[int, WeylElement], DoublePolynomial] = {}

    def G(j: int, u: WeylElement) -> DoublePolynomial:
        if u.is_identity:
            return one
        if len(word) - j < u.length:
            return zero
        key = (j, u)
        if key in memo:
            return memo[key]
        out = G(j + 1, u)
        i = word[j]
        if descent(u, i, "left"):
            rest = G(j + 1, simple_reflection(rs, i) * u)
            if not rest.is_zero:
                out = out + betas[j] * rest
        memo[key] = out
        return out

    return G(0, w)


@functools.lru_cache(maxsize=None)
def _beta_polynomials(v: WeylElement) -> List[DoublePolynomial]:
    return [linear_t(v.rs, beta) for beta in inversion_roots(v)]


def localize_top(w: WeylElement) -> DoublePolynomial:
    """i*_w(X_w): the product of the inversion roots of w^{-1}."""
    out = DoublePolynomial.one(w.rs.n)
    for beta in _beta_polynomials(w):
        out = out * beta
    return out


def localize(w: WeylElement, v: WeylElement) -> DoublePolynomial:
    """billey_localize(w, v), read from and written to the current store."""
    if w.length > v.length:
        return DoublePolynomial.zero(w.rs.n)
    key = store.CacheKey.of("localization", w.rs.cartan_type, str(reduced_word(w)), str(reduced_word(v)))
    payload = store.get(key)
    if payload is not None:
        return parse_polynomial(payload, w.rs.n)
    out = billey_localize(w, v)
    store.put(key, str(out))
    return out
