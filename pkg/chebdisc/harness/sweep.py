import logging
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat
from typing import Dict, Iterable, List, Optional, TextIO, Tuple

import numpy as np

from chebdisc.base.common import (ErrorRow, ExpansionResult, PolyParams, ScaledParams,
                                  SlopeFit, SweepSpec)
from chebdisc.base.exceptions import ChebDiscException
from chebdisc.base.regime import Regime
from chebdisc.base.scaled import ScaledReal
from chebdisc.base.table import ResultTableContext
from chebdisc.exact import eval_scaled
from chebdisc.expansion import asymptotic_value
from chebdisc.harness.writers import write_rows
from chebdisc.saddle import classify_regime, default_delta

logger = logging.getLogger(__name__)

MIN_SLOPE_POINTS = 3

# (n, N, x) of a single sweep point
GridPoint = Tuple[int, int, Fraction]


def _ratio(numerator: ScaledReal, denominator: ScaledReal) -> Optional[float]:
    if not denominator:
        return None
    return (abs(numerator) / abs(denominator)).to_float()


def error_ratios(exact: ScaledReal, result: ExpansionResult
                 ) -> Tuple[Optional[float], Optional[float]]:
    """
    Relative error |exact - asym| / |exact| and envelope-normalized error
    |exact - asym| / envelope; either is None when its denominator vanishes.
    """
    difference = exact - result.value
    return _ratio(difference, exact), _ratio(difference, result.envelope)


def evaluate_point(n: int, N: int, x: Fraction, delta: Optional[float] = None
                   ) -> ErrorRow:
    """
    Compare the exact value of t_n(x, N+1) with its asymptotic approximation.
    Failures of the asymptotic path are recorded on the row instead of raised.

    :param n: degree, 0 < n < N
    :param N: scale; the support size is N + 1
    :param x: evaluation point
    :param delta: half-width of the transition window; defaults to 0.5 N^(-2/3)
    :return: row with exact and asymptotic values and normalized errors
    """
    x = Fraction(x)
    a, b = x / N, Fraction(n, N)
    exact = eval_scaled(PolyParams(n, N + 1, x))
    delta = delta or default_delta(N)
    regime: Optional[Regime] = None
    try:
        regime = classify_regime(ScaledParams(float(a), float(b), N), delta)
        result = asymptotic_value(n, N, x, delta)
    except ChebDiscException as e:
        logger.warning(f"No asymptotic value for `n`={n} `N`={N} `x`={x}: {e}")
        return ErrorRow(a=a, b=b, N=N, x=x, regime=regime, exact=exact,
                        error=f"{type(e).__name__}: {e}")
    rel_err, env_err = error_ratios(exact, result)
    return ErrorRow(
        a=a,
        b=b,
        N=N,
        x=x,
        regime=result.regime,
        exact=exact,
        asym=result.value,
        envelope=result.envelope,
        rel_err=rel_err,
        env_err=env_err,
    )


def fit_slopes(rows: Iterable[ErrorRow]) -> List[SlopeFit]:
    """
    Least-squares slope of log env_err against log N for every (a, b) group with
    at least three usable rows. Rows without a finite positive env_err are ignored.

    :return: slopes ordered by (b, a)
    """
    groups: Dict[Tuple[Fraction, Fraction], List[Tuple[int, float]]] = \
        defaultdict(list)
    for row in rows:
        if row.env_err is None or not math.isfinite(row.env_err) or row.env_err <= 0:
            continue
        groups[(row.b, row.a)].append((row.N, row.env_err))
    slopes = []
    for (b, a), points in sorted(groups.items()):
        if len({N for N, _ in points}) < MIN_SLOPE_POINTS:
            logger.debug(f"Skipping slope for `a`={a} `b`={b}: only {len(points)} "
                         f"points")
            continue
        log_n = np.log([float(N) for N, _ in points])
        log_err = np.log([err for _, err in points])
        slope = float(np.polyfit(log_n, log_err, 1)[0])
        logger.info(f"Fitted slope {slope:.4f} for `a`={a} `b`={b} over "
                    f"{len(points)} points")
        slopes.append(SlopeFit(a=a, b=b, points=len(points), slope=slope))
    return slopes


class VerifySweep:
    def __init__(self, spec: SweepSpec,
                 table_context: Optional[ResultTableContext] = None):
        """
        Verification sweep over a grid of scaled parameters. Every point is
        evaluated exactly and asymptotically; errors are fitted against N per
        (a, b) group and written to a file, a stream and/or a result table.

        :param spec: grid, filters and output settings.
        :param table_context: optional database table receiving the rows.
        """
        self.spec = spec
        self.table_context = table_context
        self.rows: List[ErrorRow] = []
        self.slopes: List[SlopeFit] = []
        self.skipped: List[str] = []

    def _skip(self, note: str) -> None:
        logger.info(f"Skipping {note}")
        self.skipped.append(note)

    def grid(self) -> List[GridPoint]:
        """
        Enumerate the sweep points. A point is skipped with a note if b N is not
        an integer degree in (0, N), if a N is not an integer while only integer
        points are requested, or if its regime is filtered out.
        """
        spec = self.spec
        points: List[GridPoint] = []
        for b in spec.b_values:
            for N in spec.N_values:
                n = Fraction(b) * N
                if n.denominator != 1 or not 0 < n < N:
                    self._skip(f"`b`={b} at `N`={N}: degree {n} is not an integer "
                               f"in (0, N)")
                    continue
                for a in spec.a_values:
                    x = Fraction(a) * N
                    if spec.integer_x_only and x.denominator != 1:
                        self._skip(f"`a`={a} at `N`={N}: x={x} is not an integer")
                        continue
                    if spec.regimes is not None:
                        delta = spec.delta or default_delta(N)
                        regime = classify_regime(
                            ScaledParams(float(a), float(b), N), delta)
                        if regime not in spec.regimes:
                            self._skip(f"`a`={a} `b`={b} `N`={N}: regime "
                                       f"`{regime.value}` filtered out")
                            continue
                    points.append((int(n), N, x))
        logger.debug(f"Sweep grid has {len(points)} points, {len(self.skipped)} "
                     f"skipped")
        return points

    def transform(self) -> None:
        points = self.grid()
        ns = [point[0] for point in points]
        Ns = [point[1] for point in points]
        xs = [point[2] for point in points]
        if self.spec.jobs > 1 and len(points) > 1:
            with ProcessPoolExecutor(max_workers=self.spec.jobs) as executor:
                rows = list(executor.map(evaluate_point, ns, Ns, xs,
                                         repeat(self.spec.delta)))
        else:
            rows = list(map(evaluate_point, ns, Ns, xs, repeat(self.spec.delta)))
        self.rows = sorted(rows, key=lambda row: row.sort_key)

    def validate(self) -> None:
        self.slopes = fit_slopes(self.rows)
        failed = sum(1 for row in self.rows if row.error is not None)
        if failed:
            logger.warning(f"{failed} of {len(self.rows)} sweep rows have no "
                           f"asymptotic value")

    def write(self, stream: Optional[TextIO] = None) -> None:
        """
        Write rows and slopes to `output_path` if set, otherwise to `stream`.
        """
        if self.spec.output_path is not None:
            with open(self.spec.output_path, "w", newline="") as fp:
                write_rows(self.rows, self.slopes, self.spec.format, fp)
            logger.info(f"Wrote {len(self.rows)} rows to `{self.spec.output_path}`")
        elif stream is not None:
            write_rows(self.rows, self.slopes, self.spec.format, stream)

    def migrate_schema(self) -> None:
        if self.table_context is not None:
            self.table_context.migrate_schema()

    def delete_rows(self) -> None:
        if self.table_context is not None:
            self.table_context.delete_rows()

    def insert_rows(self) -> None:
        if self.table_context is not None:
            self.table_context.add_error_rows(self.rows)
            self.table_context.insert_rows()

    def execute(self, stream: Optional[TextIO] = None) -> None:
        logger.debug("Start schema migrate")
        self.migrate_schema()
        logger.debug("Start transform")
        self.transform()
        logger.debug("Start validate")
        self.validate()
        logger.debug("Start write")
        self.write(stream)
        logger.debug("Start delete")
        self.delete_rows()
        logger.debug("Start insert")
        self.insert_rows()
        logger.debug("Finish sweep")
