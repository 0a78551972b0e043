import dataclasses
from typing import Dict, Union

from eqschubert.polynomial import DoublePolynomial, divided_difference, weyl_act_x
from eqschubert.roots import RootSystem, RootSystemMismatch
from eqschubert.weyl import WeylElement, enumerate_up_to_length, reduced_word, simple_reflection


@dataclasses.dataclass(frozen=True, eq=False)
class BorelClass:
    """
    A class in the double coinvariant ring, held as one polynomial representative. Representatives are only unique
    modulo the ideal, so ``==`` compares Schubert expansions rather than polynomials.
    """

    rs: RootSystem
    rep: DoublePolynomial

    def __post_init__(self):
        if self.rep.rank != self.rs.n:
            raise RootSystemMismatch(f"Representative of rank {self.rep.rank} used with {self.rs.cartan_type}")

    def __eq__(self, other):
        if not isinstance(other, BorelClass):
            return NotImplemented
        if other.rs.cartan_type != self.rs.cartan_type:
            return False
        if self.rep == other.rep:
            return True
        from eqschubert.presentations.convert import borel_to_schubert

        return borel_to_schubert(self - other).is_zero

    __hash__ = None  # type: ignore

    def _coerce(self, other: Union["BorelClass", DoublePolynomial, int]) -> DoublePolynomial:
        if isinstance(other, BorelClass):
            if other.rs.cartan_type != self.rs.cartan_type:
                raise RootSystemMismatch(f"Cannot combine classes of {self.rs.cartan_type} and {other.rs.cartan_type}")
            return other.rep
        if isinstance(other, DoublePolynomial):
            return other
        return DoublePolynomial.constant(self.rs.n, other)

    def __add__(self, other) -> "BorelClass":
        return BorelClass(self.rs, self.rep + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "BorelClass":
        return BorelClass(self.rs, self.rep - self._coerce(other))

    def __mul__(self, other) -> "BorelClass":
        return BorelClass(self.rs, self.rep * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "BorelClass":
        return BorelClass(self.rs, -self.rep)

    def __str__(self):
        return str(self.rep)


def dd_borel(i: int, f: BorelClass) -> BorelClass:
    return BorelClass(f.rs, divided_difference(f.rs, i, f.rep))


def weyl_act_borel(w: WeylElement, f: BorelClass) -> BorelClass:
    """W acts on the x-variables of the representative."""
    return BorelClass(f.rs, weyl_act_x(w, f.rep))


def divided_difference_table(
    rs: RootSystem, f: DoublePolynomial, max_length: int
) -> Dict[WeylElement, DoublePolynomial]:
    """
    Delta_w(f) for every w with l(w) <= max_length. Each entry reuses a shorter one through
    Delta_w = Delta_i o Delta_{s_i w}, where i is the first letter of the reduced word of w.
    """
    table: Dict[WeylElement, DoublePolynomial] = {}
    for w in enumerate_up_to_length(rs, max_length):
        if w.is_identity:
            table[w] = f
            continue
        i = reduced_word(w)[0]
        shorter = table[simple_reflection(rs, i) * w]
        table[w] = shorter if shorter.is_zero else divided_difference(rs, i, shorter)
    return table
