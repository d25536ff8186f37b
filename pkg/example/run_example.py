import logging
import os
import sys
from fractions import Fraction

from chebdisc import SweepSpec
from chebdisc.base.engine import EngineContext
from chebdisc.base.table import ResultTableContext
from chebdisc.harness.sweep import VerifySweep

if __name__ == "__main__":
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logger = logging.getLogger("chebdisc")
    logger.setLevel(logging.DEBUG)

    engine_context = EngineContext(
        "results", os.getenv("CHEBDISC_RESULTS", "sqlite:///results.db"))
    table_context = ResultTableContext(
        name="chebdisc_errors",
        engine_context=engine_context,
        comment="Exact against asymptotic values",
        batch_params={"sweep_id": "example"},
    )

    # one point per regime at b = 1/2, each on a doubling ladder of N
    spec = SweepSpec(
        b_values=[Fraction(1, 2)],
        a_values=[Fraction(-1, 2), Fraction(1, 50), Fraction(2, 5), Fraction(3, 5)],
        N_values=[50, 100, 200],
    )
    sweep = VerifySweep(spec, table_context)
    sweep.execute(sys.stdout)
    for slope in sweep.slopes:
        print(f"a={float(slope.a)} b={float(slope.b)} slope={slope.slope:.3f}")
