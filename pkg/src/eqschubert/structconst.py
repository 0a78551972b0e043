"""
Equivariant structure constants X_u X_v = sum_w c_{uv}^w X_w.

* ``gkm``: localize both sides at w and peel off lower terms,
  c_{uv}^w = (i*_w(X_u) i*_w(X_v) - sum_{q < w} c_{uv}^q i*_w(X_q)) / i*_w(X_w),
  over the Bruhat-bounded candidates {w : u <= w, v <= w, l(w) <= l(u) + l(v)} in increasing length.
* ``borel``: multiply double Schubert polynomials and expand the product with divided differences.
* ``oracle``: multiply full-group localizations pointwise and convert back. Small types only.
"""
import dataclasses
import itertools
import logging as pylogging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Protocol, Tuple, Union

from dataclasses_json import dataclass_json
from rich.progress import BarColumn, Progress, TaskID, TaskProgressColumn, TextColumn, TimeElapsedColumn

from eqschubert import store
from eqschubert.coords import AlphaCoordinates, Coordinates, coordinates
from eqschubert.logging import capture_time, format_elapsed
from eqschubert.polynomial import DoublePolynomial, exact_divide
from eqschubert.presentations.convert import borel_to_schubert, gkm_to_schubert, schubert_to_gkm
from eqschubert.presentations.double_schubert import double_schubert_polynomial
from eqschubert.presentations.localization import localize, localize_top
from eqschubert.presentations.schubert import SchubertSum
from eqschubert.roots import RootSystemMismatch
from eqschubert.serialization import dump_schubert, load_schubert
from eqschubert.weyl import WeylElement, all_elements, bruhat_leq, enumerate_up_to_length, reduced_word


logger = pylogging.getLogger(__name__)


MULTIPLY_METHODS = ("gkm", "borel", "both", "oracle")


class MethodDisagreement(ArithmeticError):
    pass


@dataclass(frozen=True)
class StructConstResult:
    u: WeylElement
    v: WeylElement
    expansion: SchubertSum
    method: str

    def coefficient(self, w: WeylElement):
        return self.expansion.coefficient(w)


@dataclass_json
@dataclass
class TermRecord:
    element: str
    coefficient: str


@dataclass_json
@dataclass
class StructConstRecord:
    """The text output of ``multiply``, field for field."""

    cartan_type: str
    u: str
    v: str
    method: str
    coords: str
    terms: List[TermRecord] = dataclasses.field(default_factory=list)


def to_record(result: StructConstResult, coords: Optional[Coordinates] = None) -> StructConstRecord:
    coords = coords or coordinates(result.u.rs)
    return StructConstRecord(
        cartan_type=str(result.u.rs.cartan_type),
        u=str(result.u),
        v=str(result.v),
        method=result.method,
        coords=coords.name,
        terms=[TermRecord(str(w), coords.render(c)) for w, c in result.expansion.terms()],
    )


# progress reporting


@dataclass
class StratumProgress:
    cartan_type: str
    length: int
    strata_finished: int
    strata_total: int
    candidates: int
    nonzero_terms: int
    elapsed: float

    @property
    def is_finished(self) -> bool:
        return self.strata_finished >= self.strata_total


class StratumMonitor(Protocol):
    def __call__(self, progress: StratumProgress):
        ...


class RichStratumMonitor(StratumMonitor):

    progress: Optional[Progress]  # type: ignore
    task: Optional[TaskID]

    def __init__(self, **kwargs):
        """kwargs are passed to rich.progress.Progress"""
        self.kwargs = kwargs
        self.progress: Optional[Progress] = None
        self.task = None

    def __call__(self, progress: StratumProgress):
        if self.progress is None:
            self._init_progress(progress)

        fields = dataclasses.asdict(progress)
        self.progress.update(self.task, completed=progress.strata_finished, **fields)  # type: ignore
        self.progress.refresh()  # type: ignore

        if progress.is_finished:
            self.progress.stop()  # type: ignore

    def _init_progress(self, progress: StratumProgress):
        columns = [
            BarColumn(),
            TaskProgressColumn(),
            TextColumn("| length {task.fields[length]}", justify="center"),
            TextColumn("| {task.fields[nonzero_terms]} terms", justify="center"),
            TimeElapsedColumn(),
        ]
        self.progress = Progress(*columns, **self.kwargs)
        self.task = self.progress.add_task(
            "Strata", total=progress.strata_total, completed=0, **dataclasses.asdict(progress)
        )
        self.progress.start()


class LoggerStratumMonitor(StratumMonitor):
    def __init__(self, logger: Optional[Union[pylogging.Logger, str]] = None, level=pylogging.INFO):
        if isinstance(logger, str):
            logger = pylogging.getLogger(logger)
        self.logger = logger or pylogging.getLogger(__name__)
        self.level = level

    def __call__(self, progress: StratumProgress):
        self.logger.log(
            self.level,
            f"{progress.cartan_type}: length {progress.length} done ({progress.strata_finished}/"
            f"{progress.strata_total}) | {progress.candidates} candidates | {progress.nonzero_terms} terms |"
            f" {format_elapsed(progress.elapsed)}",
        )


# the methods


def _check_pair(u: WeylElement, v: WeylElement):
    if u.rs.cartan_type != v.rs.cartan_type:
        raise RootSystemMismatch(f"Cannot multiply classes of {u.rs.cartan_type} and {v.rs.cartan_type}")


def bruhat_candidates(u: WeylElement, v: WeylElement) -> List[WeylElement]:
    """{w : u <= w, v <= w, l(w) <= l(u) + l(v)} in (length, reduced word) order."""
    _check_pair(u, v)
    lower = max(u.length, v.length)
    return [
        w
        for w in enumerate_up_to_length(u.rs, u.length + v.length)
        if w.length >= lower and bruhat_leq(u, w) and bruhat_leq(v, w)
    ]


def multiply_via_gkm(u: WeylElement, v: WeylElement, monitor: Optional[StratumMonitor] = None) -> StructConstResult:
    """
    Raises:
        NotDivisibleError: if some right-hand side is not divisible by i*_w(X_w)
    """
    rs = u.rs
    candidates = bruhat_candidates(u, v)
    strata = [(k, list(ws)) for k, ws in itertools.groupby(candidates, key=lambda w: w.length)]
    coeffs: Dict[WeylElement, DoublePolynomial] = {}
    with capture_time() as elapsed:
        for finished, (k, stratum) in enumerate(strata, start=1):
            for w in stratum:
                rhs = localize(u, w) * localize(v, w)
                for q, c in coeffs.items():
                    if q.length < w.length and bruhat_leq(q, w):
                        rhs = rhs - c * localize(q, w)
                if not rhs.is_zero:
                    coeffs[w] = exact_divide(rhs, localize_top(w))
            if monitor is not None:
                monitor(
                    StratumProgress(
                        cartan_type=str(rs.cartan_type),
                        length=k,
                        strata_finished=finished,
                        strata_total=len(strata),
                        candidates=len(stratum),
                        nonzero_terms=len(coeffs),
                        elapsed=elapsed(),
                    )
                )
    return StructConstResult(u, v, SchubertSum(rs, coeffs), "gkm")


def multiply_via_borel(u: WeylElement, v: WeylElement, sigma_method: Optional[str] = None) -> StructConstResult:
    _check_pair(u, v)
    product = double_schubert_polynomial(u, sigma_method) * double_schubert_polynomial(v, sigma_method)
    return StructConstResult(u, v, borel_to_schubert(product), "borel")


def multiply_via_oracle(u: WeylElement, v: WeylElement) -> StructConstResult:
    """
    Raises:
        GroupTooLarge: if |W| is over ``max_group_order``
    """
    _check_pair(u, v)
    rs = u.rs
    all_elements(rs)
    cutoff = rs.num_positive_roots
    product = schubert_to_gkm(SchubertSum.basis(u), cutoff) * schubert_to_gkm(SchubertSum.basis(v), cutoff)
    return StructConstResult(u, v, gkm_to_schubert(product), "oracle")


def _structconst_key(u: WeylElement, v: WeylElement, method: str) -> store.CacheKey:
    return store.CacheKey.of("structconst", u.rs.cartan_type, method, str(reduced_word(u)), str(reduced_word(v)))


def multiply(
    u: WeylElement,
    v: WeylElement,
    method: str = "gkm",
    sigma_method: Optional[str] = None,
    monitor: Optional[StratumMonitor] = None,
) -> StructConstResult:
    """
    X_u X_v by ``method``. ``both`` runs the gkm and borel methods and fails unless they agree. Single-method
    results go through the current store.

    Raises:
        MethodDisagreement: if ``both`` finds different expansions
    """
    if method not in MULTIPLY_METHODS:
        raise ValueError(f"Unknown method {method!r}; expected one of {MULTIPLY_METHODS}")
    _check_pair(u, v)
    if method == "both":
        via_gkm = multiply(u, v, "gkm", sigma_method, monitor)
        via_borel = multiply(u, v, "borel", sigma_method, monitor)
        if via_gkm.expansion != via_borel.expansion:
            raise MethodDisagreement(
                f"gkm and borel disagree on X_{u} X_{v}:\n{dump_schubert(via_gkm.expansion)}\n"
                f"vs\n{dump_schubert(via_borel.expansion)}"
            )
        return dataclasses.replace(via_gkm, method="both")

    # expansions do not depend on the sigma representatives, so the key leaves them out
    key = _structconst_key(u, v, method)
    payload = store.get(key)
    if payload is not None:
        return StructConstResult(u, v, load_schubert(u.rs, payload), method)

    with capture_time() as elapsed:
        if method == "gkm":
            result = multiply_via_gkm(u, v, monitor)
        elif method == "borel":
            result = multiply_via_borel(u, v, sigma_method)
        else:
            result = multiply_via_oracle(u, v)
    logger.info(f"X_{u} X_{v} via {method}: {len(result.expansion.coeffs)} terms in {format_elapsed(elapsed())}")
    store.put(key, dump_schubert(result.expansion))
    return result


# checks


@dataclass
class GrahamReport:
    """Coefficients that have a negative coefficient once written in the simple roots."""

    violations: List[Tuple[WeylElement, str]] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_graham_positivity(result: StructConstResult) -> GrahamReport:
    alpha = AlphaCoordinates(result.u.rs)
    report = GrahamReport()
    for w, c in result.expansion.terms():
        poly = alpha.from_canonical(c)
        if any(coeff < 0 for _, coeff in poly.terms()):
            report.violations.append((w, alpha.render(c)))
    if not report.ok:
        logger.warning(f"{len(report.violations)} coefficients of X_{result.u} X_{result.v} fail positivity")
    return report


def specialize_ordinary(result: StructConstResult) -> Dict[WeylElement, int]:
    """
    The ordinary structure constants: every coefficient at t = 0.

    Raises:
        ArithmeticError: if a surviving constant is not an integer
    """
    out: Dict[WeylElement, int] = {}
    for w, c in result.expansion.terms():
        constant: Fraction = c.constant_term()
        if constant == 0:
            continue
        if constant.denominator != 1:
            raise ArithmeticError(f"Ordinary structure constant at {w} is not an integer: {constant}")
        out[w] = int(constant)
    return out

