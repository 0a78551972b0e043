from eqschubert.presentations.borel import BorelClass
from eqschubert.presentations.convert import PRESENTATIONS, convert, dd_word, weyl_act
from eqschubert.presentations.double_schubert import double_schubert, double_schubert_polynomial
from eqschubert.presentations.gkm import GKMClass
from eqschubert.presentations.localization import billey_localize, localize, localize_top
from eqschubert.presentations.schubert import SchubertSum
from eqschubert.presentations.sigma import SigmaTable, sigma_bgg, sigma_for, sigma_linear_system


__all__ = [
    "BorelClass",
    "GKMClass",
    "SchubertSum",
    "SigmaTable",
    "PRESENTATIONS",
    "convert",
    "dd_word",
    "weyl_act",
    "double_schubert",
    "double_schubert_polynomial",
    "billey_localize",
    "localize",
    "localize_top",
    "sigma_bgg",
    "sigma_for",
    "sigma_linear_system",
]
