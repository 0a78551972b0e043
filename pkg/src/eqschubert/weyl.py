import dataclasses
import functools
import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np

from eqschubert.roots import (
    CartanType,
    RootSystem,
    RootSystemMismatch,
    Weight,
    check_index,
    coroot_pair,
    is_root,
)


logger = logging.getLogger(__name__)


DEFAULT_MAX_ELEMENTS = 200_000


class EnumerationLimitExceeded(RuntimeError):
    pass


class GroupTooLarge(EnumerationLimitExceeded):
    """Raised when a computation needs all of W and |W| is over ``max_group_order``."""


@dataclasses.dataclass
class EnumerationLimits:
    """Process-wide caps on how much of W a single computation may materialize."""

    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_group_order: int = 2000


_limits = EnumerationLimits()


def current_limits() -> EnumerationLimits:
    return _limits


def set_limits(max_elements: Optional[int] = None, max_group_order: Optional[int] = None):
    if max_elements is not None:
        _limits.max_elements = max_elements
    if max_group_order is not None:
        _limits.max_group_order = max_group_order


class Word(tuple):
    """
    A finite sequence of simple-reflection indices. ``Word.parse("4,2")`` is the product s4*s2 (left to right).
    ``""`` and ``"e"`` are the empty word, and the letter syntax ``s4s2`` is accepted too.
    """

    _LETTERS_RE = re.compile(r"^(s\d+)+$")

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, tuple(int(i) for i in letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if text in ("", "e", "()"):
            return cls()
        compact = text.replace(" ", "")
        if cls._LETTERS_RE.match(compact):
            return cls(int(m) for m in re.findall(r"s(\d+)", compact))
        compact = compact.strip("[]()")
        try:
            return cls(int(tok) for tok in compact.split(","))
        except ValueError:
            raise ValueError(f"Cannot parse word {text!r}; expected e.g. '4,2' or 's4s2'")

    def __str__(self):
        return ",".join(str(i) for i in self)

    def to_text(self) -> str:
        return "".join(f"s{i}" for i in self) if self else "e"


@dataclasses.dataclass(frozen=True, eq=False)
class WeylElement:
    """
    An element of W, stored canonically as its integer matrix on the simple-root basis (column j is the image of
    alpha_j). Equality and hashing go through the matrix.
    """

    rs: RootSystem
    matrix: np.ndarray = dataclasses.field(repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.int64)
        if m.shape != (self.rs.n, self.rs.n):
            raise RootSystemMismatch(f"Matrix of shape {m.shape} is not a {self.rs.cartan_type} Weyl element")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_key", (self.rs.cartan_type, m.tobytes()))
        images = m @ self.rs.positive_root_array.T
        object.__setattr__(self, "_length", int(np.count_nonzero((images <= 0).all(axis=0))))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._key == other._key  # type: ignore

    def __hash__(self):
        return hash(self._key)  # type: ignore

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __repr__(self):
        return f"WeylElement({self.rs.cartan_type}, {reduced_word(self).to_text()})"

    def __str__(self):
        return reduced_word(self).to_text()

    @property
    def length(self) -> int:
        return self._length  # type: ignore

    @property
    def is_identity(self) -> bool:
        return self._length == 0  # type: ignore


def _check_same(u: WeylElement, v: WeylElement):
    if u.rs.cartan_type != v.rs.cartan_type:
        raise RootSystemMismatch(f"Cannot combine elements of {u.rs.cartan_type} and {v.rs.cartan_type}")


@functools.lru_cache(maxsize=None)
def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, np.eye(rs.n, dtype=np.int64))


@functools.lru_cache(maxsize=None)
def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    check_index(rs, i)
    m = np.eye(rs.n, dtype=np.int64)
    # s_i(alpha_j) = alpha_j - C[i][j] alpha_i
    m[i - 1, :] -= rs.cartan_array[i - 1, :]
    return WeylElement(rs, m)


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    m = np.eye(rs.n, dtype=np.int64)
    for i in word:
        m = m @ simple_reflection(rs, i).matrix
    return WeylElement(rs, m)


def length(w: WeylElement) -> int:
    return w.length


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return from_word(rs, word).length == len(word)


def descent(w: WeylElement, i: int, side: Literal["left", "right"] = "right") -> bool:
    """Right descent: l(w s_i) < l(w). Left descent: l(s_i w) < l(w)."""
    check_index(w.rs, i)
    if side == "right":
        # w(alpha_i) is negative
        return bool((w.matrix[:, i - 1] <= 0).all())
    elif side == "left":
        return bool((inverse(w).matrix[:, i - 1] <= 0).all())
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def descents(w: WeylElement, side: Literal["left", "right"] = "right") -> List[int]:
    return [i for i in range(1, w.rs.n + 1) if descent(w, i, side)]


@functools.lru_cache(maxsize=None)
def reduced_word(w: WeylElement) -> Word:
    """Peels the smallest right descent until the identity is reached."""
    letters = []
    current = w
    while not current.is_identity:
        i = next(i for i in range(1, w.rs.n + 1) if descent(current, i))
        letters.append(i)
        current = multiply(current, simple_reflection(w.rs, i))
    return Word(reversed(letters))


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    _check_same(u, v)
    return WeylElement(u.rs, u.matrix @ v.matrix)


@functools.lru_cache(maxsize=None)
def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.rs, tuple(reversed(reduced_word(w))))


@functools.lru_cache(maxsize=None)
def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    _check_same(u, w)
    if u.is_identity:
        return True
    if u.length > w.length:
        return False
    if u.length == w.length:
        return u == w
    i = next(i for i in range(1, w.rs.n + 1) if descent(w, i))
    ws = multiply(w, simple_reflection(w.rs, i))
    if descent(u, i):
        return bruhat_leq(multiply(u, simple_reflection(u.rs, i)), ws)
    return bruhat_leq(u, ws)


def enumerate_up_to_length(rs: RootSystem, max_length: int, max_elements: Optional[int] = None) -> List[WeylElement]:
    """
    All elements of length <= max_length, each exactly once, grouped by length and ordered by reduced word inside
    each length.

    Raises:
        EnumerationLimitExceeded: if more than ``max_elements`` (default: the process-wide limit) would be produced
    """
    if max_length < 0:
        raise ValueError(f"max_length must be nonnegative, got {max_length}")
    cap = max_elements if max_elements is not None else _limits.max_elements
    max_length = min(max_length, rs.num_positive_roots)
    out: List[WeylElement] = []
    for stratum in _strata(rs, max_length, cap):
        out.extend(stratum)
    return out


def elements_of_length(rs: RootSystem, k: int, max_elements: Optional[int] = None) -> List[WeylElement]:
    if k < 0 or k > rs.num_positive_roots:
        return []
    cap = max_elements if max_elements is not None else _limits.max_elements
    return list(_strata(rs, k, cap)[k])


# levels of W by length, extended lazily and shared by every caller
_strata_cache: Dict[CartanType, List[Tuple[WeylElement, ...]]] = {}


def _strata(rs: RootSystem, max_length: int, cap: int) -> List[Tuple[WeylElement, ...]]:
    levels = _strata_cache.setdefault(rs.cartan_type, [(identity(rs),)])
    total = sum(len(s) for s in levels[: max_length + 1])
    while len(levels) <= max_length:
        if total > cap:
            break
        level = _next_level(rs, levels[-1])
        logger.debug(f"{rs.cartan_type}: {len(level)} elements of length {len(levels)}")
        levels.append(level)
        total += len(level)
    if total > cap:
        raise EnumerationLimitExceeded(
            f"Elements of {rs.cartan_type} up to length {max_length} exceed the cap of {cap}"
        )
    return levels[: max_length + 1]


def _next_level(rs: RootSystem, level: Tuple[WeylElement, ...]) -> Tuple[WeylElement, ...]:
    seen = {}
    for w in level:
        for i in range(1, rs.n + 1):
            if not descent(w, i):
                ws = multiply(w, simple_reflection(rs, i))
                seen.setdefault(ws, ws)
    return tuple(sorted(seen, key=reduced_word))


def longest_element(rs: RootSystem) -> WeylElement:
    w = identity(rs)
    while True:
        ascents = [i for i in range(1, rs.n + 1) if not descent(w, i)]
        if not ascents:
            return w
        w = multiply(w, simple_reflection(rs, ascents[0]))


def all_elements(rs: RootSystem) -> List[WeylElement]:
    """The whole group, guarded by the process-wide ``max_group_order``."""
    order = rs.cartan_type.weyl_group_order
    if order > _limits.max_group_order:
        raise GroupTooLarge(
            f"|W({rs.cartan_type})| = {order} exceeds max_group_order={_limits.max_group_order}"
        )
    return enumerate_up_to_length(rs, rs.num_positive_roots, max_elements=max(order, _limits.max_elements))


@functools.lru_cache(maxsize=None)
def reflection(rs: RootSystem, beta: Weight) -> WeylElement:
    """s_beta(lambda) = lambda - <lambda, beta^vee> beta, for a root beta."""
    if not is_root(rs, beta):
        raise ValueError(f"{beta.to_text()} is not a root of {rs.cartan_type}")
    m = np.zeros((rs.n, rs.n), dtype=np.int64)
    for j in range(rs.n):
        alpha_j = Weight.of(*[1 if k == j else 0 for k in range(rs.n)])
        image = alpha_j - beta * coroot_pair(rs, alpha_j, beta)
        m[:, j] = [int(c) for c in image.coords]
    return WeylElement(rs, m)


def act(w: WeylElement, weight: Weight) -> Weight:
    if weight.rank != w.rs.n:
        raise RootSystemMismatch(f"Weight of rank {weight.rank} acted on by {w.rs.cartan_type}")
    n = w.rs.n
    return Weight(
        tuple(sum((int(w.matrix[r, c]) * weight.coords[c] for c in range(n)), Fraction(0)) for r in range(n))
    )


@functools.lru_cache(maxsize=None)
def fundamental_action(w: WeylElement) -> Tuple[Tuple[int, ...], ...]:
    """
    Matrix of w on the fundamental-weight basis: column i holds the fundamental coordinates of w(omega_i).
    This is C M C^{-1}, which is integral.
    """
    rs = w.rs
    n = rs.n
    cm = rs.cartan_array @ w.matrix
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            value = sum((int(cm[r, k]) * rs.cartan_inverse[k][c] for k in range(n)), Fraction(0))
            assert value.denominator == 1, "fundamental action must be integral"
            row.append(int(value))
        out.append(tuple(row))
    return tuple(out)


def inversion_roots(w: WeylElement) -> List[Weight]:
    """beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) along the canonical reduced word; these are the positive roots
    sent to negative roots by w^{-1}."""
    rs = w.rs
    out = []
    prefix = identity(rs)
    for i in reduced_word(w):
        out.append(act(prefix, Weight.of(*[1 if k == i - 1 else 0 for k in range(rs.n)])))
        prefix = multiply(prefix, simple_reflection(rs, i))
    return out


# one-line notation (type A only)


def _check_type_a(rs: RootSystem):
    if rs.cartan_type.family != "A":
        raise ValueError(f"One-line notation is only available in type A, not {rs.cartan_type}")


def one_line(w: WeylElement) -> Tuple[int, ...]:
    """(w(1), ..., w(n+1)) for w acting on {1..n+1} with s_i = (i, i+1); s1s2 is (2, 3, 1)."""
    _check_type_a(w.rs)
    p = list(range(1, w.rs.n + 2))
    for i in reduced_word(w):
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def one_line_text(w: WeylElement) -> str:
    p = one_line(w)
    sep = "," if len(p) >= 10 else ""
    return "(" + sep.join(str(k) for k in p) + ")"


def from_one_line(rs: RootSystem, perm: Sequence[int]) -> WeylElement:
    _check_type_a(rs)
    if sorted(perm) != list(range(1, rs.n + 2)):
        raise ValueError(f"{tuple(perm)} is not a permutation of 1..{rs.n + 1}")
    p = list(perm)
    letters = []
    while True:
        i = next((k for k in range(1, len(p)) if p[k - 1] > p[k]), None)
        if i is None:
            break
        p[i - 1], p[i] = p[i], p[i - 1]
        letters.append(i)
    return from_word(rs, tuple(reversed(letters)))


_ONE_LINE_RE = re.compile(r"^\(([\d,\s]+)\)$")


def parse_element(rs: RootSystem, text: str) -> WeylElement:
    """Accepts ``e``, ``s1s2``, ``1,2`` and, in type A, one-line notation such as ``(231)``."""
    text = text.strip()
    m = _ONE_LINE_RE.match(text)
    if m is not None and rs.cartan_type.family == "A":
        body = m.group(1)
        digits = [int(t) for t in body.split(",")] if "," in body else [int(c) for c in body.replace(" ", "")]
        return from_one_line(rs, digits)
    word = Word.parse(text)
    for i in word:
        check_index(rs, i)
    return from_word(rs, word)


def element_sort_key(w: WeylElement) -> Tuple[int, Word]:
    return (w.length, reduced_word(w))
