"""
Line-oriented text format for the three presentations.

* Schubert and GKM classes: ``word: polynomial`` lines in (length, reduced word) order, ``e`` for the identity.
* Borel classes: a single polynomial expression.

Blank lines and lines starting with ``#`` are ignored on input.
"""
from typing import Dict, Iterable, Mapping, Optional, Tuple

from eqschubert.coords import CanonicalCoordinates, Coordinates
from eqschubert.polynomial import DoublePolynomial, ParseError
from eqschubert.presentations.borel import BorelClass
from eqschubert.presentations.gkm import GKMClass
from eqschubert.presentations.schubert import SchubertSum
from eqschubert.roots import RootSystem
from eqschubert.weyl import WeylElement, element_sort_key, parse_element


def _coords(rs: RootSystem, coords: Optional[Coordinates] = None) -> Coordinates:
    return coords if coords is not None else CanonicalCoordinates(rs)


def dump_element_map(
    rs: RootSystem, entries: Mapping[WeylElement, DoublePolynomial], coords: Optional[Coordinates] = None
) -> str:
    coords = _coords(rs, coords)
    lines = [f"{w}: {coords.render(entries[w])}" for w in sorted(entries, key=element_sort_key)]
    return "\n".join(lines)


def _content_lines(text: str) -> Iterable[Tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def load_element_map(
    rs: RootSystem, text: str, coords: Optional[Coordinates] = None
) -> Dict[WeylElement, DoublePolynomial]:
    coords = _coords(rs, coords)
    out: Dict[WeylElement, DoublePolynomial] = {}
    for lineno, line in _content_lines(text):
        word, sep, expr = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'word: polynomial', got {line!r}")
        try:
            w = parse_element(rs, word)
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from e
        if w in out:
            raise ParseError(f"line {lineno}: element {w} listed twice")
        out[w] = coords.parse(expr)
    return out


def dump_schubert(s: SchubertSum, coords: Optional[Coordinates] = None) -> str:
    if s.is_zero:
        return "0"
    return dump_element_map(s.rs, s.coeffs, coords)


def load_schubert(rs: RootSystem, text: str, coords: Optional[Coordinates] = None) -> SchubertSum:
    if text.strip() == "0":
        return SchubertSum.zero(rs)
    try:
        return SchubertSum(rs, load_element_map(rs, text, coords))
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


def dump_gkm(h: GKMClass, coords: Optional[Coordinates] = None) -> str:
    return dump_element_map(h.rs, h.values, coords)


def load_gkm(rs: RootSystem, text: str, coords: Optional[Coordinates] = None) -> GKMClass:
    """The cutoff is the largest length among the listed vertices; every vertex up to it must be present."""
    values = load_element_map(rs, text, coords)
    if not values:
        raise ParseError("A GKM class needs at least the identity vertex")
    cutoff = max(v.length for v in values)
    try:
        return GKMClass(rs, cutoff, values)
    except ValueError as e:
        raise ParseError(str(e)) from e


def dump_borel(f: BorelClass, coords: Optional[Coordinates] = None) -> str:
    return _coords(f.rs, coords).render(f.rep)


def load_borel(rs: RootSystem, text: str, coords: Optional[Coordinates] = None) -> BorelClass:
    lines = [line for _, line in _content_lines(text)]
    if not lines:
        raise ParseError("Empty Borel class")
    return BorelClass(rs, _coords(rs, coords).parse(" ".join(lines)))


def load_class(rs: RootSystem, presentation: str, text: str, coords: Optional[Coordinates] = None):
    if presentation == "schubert":
        return load_schubert(rs, text, coords)
    if presentation == "gkm":
        return load_gkm(rs, text, coords)
    if presentation == "borel":
        return load_borel(rs, text, coords)
    raise ValueError(f"Unknown presentation {presentation!r}; expected one of ('schubert', 'gkm', 'borel')")


def dump_class(cls, coords: Optional[Coordinates] = None) -> str:
    if isinstance(cls, SchubertSum):
        return dump_schubert(cls, coords)
    if isinstance(cls, GKMClass):
        return dump_gkm(cls, coords)
    if isinstance(cls, BorelClass):
        return dump_borel(cls, coords)
    raise TypeError(f"Not a cohomology class: {type(cls).__name__}")
