"""
CSV and JSON emission of sweep results. Output is deterministic: fixed field order
and 17 significant digits for measured quantities. The point coordinates a, b and x
are written as exact rationals (`p/q` or an integer) so that every row can be
replayed with `chebdisc eval --n bN --N N --x x`.
"""
import csv
import json
from typing import Any, Dict, List, Optional, Sequence, TextIO

from chebdisc.base.common import ErrorRow, SlopeFit
from chebdisc.base.exceptions import ParameterException
from chebdisc.base.regime import OutputFormat
from chebdisc.base.table import scaled_fields

CSV_COLUMNS = (
    "a",
    "b",
    "N",
    "x",
    "regime",
    "exact_sign",
    "exact_mantissa",
    "exact_exp10",
    "asym_sign",
    "asym_mantissa",
    "asym_exp10",
    "env_err",
)


def format_float(value: Optional[float]) -> str:
    if value is None:
        return ""
    return format(value, ".17g")


def row_to_dict(row: ErrorRow) -> Dict[str, Any]:
    """
    Flatten an `ErrorRow` to the CSV field names, with numbers left unformatted.
    """
    record: Dict[str, Any] = {
        "a": str(row.a),
        "b": str(row.b),
        "N": row.N,
        "x": str(row.x),
        "regime": row.regime.value if row.regime else None,
    }
    record.update(scaled_fields("exact", row.exact))
    record.update(scaled_fields("asym", row.asym))
    record["env_err"] = row.env_err
    return record


def write_csv(rows: Sequence[ErrorRow], fp: TextIO) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        record = row_to_dict(row)
        cells = []
        for column in CSV_COLUMNS:
            value = record[column]
            if value is None:
                cells.append("")
            elif isinstance(value, float):
                cells.append(format_float(value))
            else:
                cells.append(str(value))
        writer.writerow(cells)


def write_json(rows: Sequence[ErrorRow], slopes: Sequence[SlopeFit], fp: TextIO
               ) -> None:
    rows_out: List[Dict[str, Any]] = []
    for row in rows:
        record = row_to_dict(row)
        if row.error is not None:
            record["error"] = row.error
        rows_out.append(record)
    slopes_out = [
        {"a": str(slope.a), "b": str(slope.b), "points": slope.points,
         "slope": slope.slope}
        for slope in slopes
    ]
    json.dump({"rows": rows_out, "slopes": slopes_out}, fp, indent=2)
    fp.write("\n")


def write_rows(rows: Sequence[ErrorRow], slopes: Sequence[SlopeFit],
               output_format: OutputFormat, fp: TextIO) -> None:
    """
    Write rows in the requested format. CSV carries the rows only; slopes are
    reported by the caller.
    """
    if output_format is OutputFormat.CSV:
        write_csv(rows, fp)
    elif output_format is OutputFormat.JSON:
        write_json(rows, slopes, fp)
    else:
        raise ParameterException(f"Unsupported output format `{output_format}`")
