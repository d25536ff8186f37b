import logging
from collections import UserDict
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Optional

import sqlalchemy as sa
from sqlalchemy.schema import Column, Table
from sqlalchemy.types import BigInteger, Float, Integer, String

from chebdisc.base.common import ErrorRow
from chebdisc.base.exceptions import ParameterException
from chebdisc.base.scaled import ScaledReal
from chebdisc.utils.config import is_developer_mode

if TYPE_CHECKING:
    from chebdisc.base.engine import EngineContext

logger = logging.getLogger(__name__)


def get_result_columns() -> List[Column]:
    """
    Columns of a result table; mirrors the CSV layout plus the sweep id and the
    failure message of rows that could not be expanded.
    """
    return [
        Column("sweep_id", String(64), comment="Identifier of the sweep"),
        Column("a", Float, comment="Scaled point x/N"),
        Column("b", Float, comment="Scaled degree n/N"),
        Column("N", Integer, comment="Scale; support size is N + 1"),
        Column("x", String(64), comment="Evaluation point as exact rational"),
        Column("regime", String(16), nullable=True),
        Column("exact_sign", Integer),
        Column("exact_mantissa", Float),
        Column("exact_exp10", BigInteger),
        Column("asym_sign", Integer, nullable=True),
        Column("asym_mantissa", Float, nullable=True),
        Column("asym_exp10", BigInteger, nullable=True),
        Column("env_err", Float, nullable=True),
        Column("error", String(256), nullable=True),
    ]


class ResultTableContext:
    """
    Target table for sweep results, with schema creation, deletion of the rows of
    a previous run with the same batch parameters and chunked inserts.
    """
    insert_chunksize = 10000

    def __init__(
            self,
            name: str,
            engine_context: "EngineContext",
            columns: Optional[List[Column]] = None,
            comment: Optional[str] = None,
            batch_params: Optional[Dict[str, Any]] = None,
    ):
        """
        :param name: Name of target table in database.
        :param engine_context: engine to bind table to.
        :param columns: All columns in table; defaults to `get_result_columns()`.
        :param comment: Table comment.
        :param batch_params: Mapping between column names and values that are used to
        delete old rows in the table.
        """
        columns = columns or get_result_columns()
        table_params = {"comment": comment} if comment else {}
        self.name = name
        self.engine_context = engine_context
        self.columns = {column.name: column for column in columns}
        self.table = Table(name, engine_context.metadata, *columns, **table_params)
        self.batch_params = batch_params or {}
        for key in self.batch_params:
            if key not in self.columns:
                raise ParameterException(f"Batch parameter `{key}` is not a column of "
                                         f"table `{name}`")
        self.output_rows: List[Dict[str, Any]] = []

    def get_new_row(self) -> "ResultOutputRow":
        """
        Get a new row intended to be added to the table.
        """
        return ResultOutputRow(self)

    def migrate_schema(self) -> None:
        """
        Create the table if it does not exist.
        """
        engine = self.engine_context.engine
        if sa.inspect(engine).has_table(self.name, schema=self.engine_context.schema):
            logger.debug(f"Table `{self.name}` already exists")
            return
        logger.info(f"Create new table `{self.name}`")
        self.engine_context.metadata.create_all(engine, tables=[self.table])

    def delete_rows(self) -> None:
        """
        Delete old rows from target table that match batch parameters.
        """
        stmt = self.table.delete()
        for key, value in self.batch_params.items():
            stmt = stmt.where(self.table.c[key] == value)
        with self.engine_context.engine.begin() as conn:
            result = conn.execute(stmt)
        logger.info(f"Deleted {result.rowcount} rows from `{self.name}`")

    def insert_rows(self) -> None:
        """
        Insert rows into target table in chunks.
        """
        row_count = len(self.output_rows)
        with self.engine_context.engine.begin() as conn:
            while self.output_rows:
                insert_chunk = self.output_rows[:self.insert_chunksize]
                del self.output_rows[:self.insert_chunksize]
                conn.execute(self.table.insert(), insert_chunk)
        logger.info(f"Inserted {row_count} rows into `{self.name}`")

    def add_error_rows(self, rows: Iterable[ErrorRow]) -> None:
        for error_row in rows:
            output_row = self.get_new_row()
            output_row.map_error_row(error_row)
            output_row.append()


def scaled_fields(prefix: str, value: Optional[ScaledReal]) -> Dict[str, Any]:
    if value is None:
        return {f"{prefix}_sign": None, f"{prefix}_mantissa": None,
                f"{prefix}_exp10": None}
    sign, mantissa, exp10 = value.as_tuple()
    return {f"{prefix}_sign": sign, f"{prefix}_mantissa": mantissa,
            f"{prefix}_exp10": exp10}


class ResultOutputRow(UserDict):
    """
    Cell values for a single row of a :class:`ResultTableContext`. Batch parameters
    are prepopulated.
    """
    def __init__(self, table_context: ResultTableContext):
        self.table_context = table_context
        super().__init__(table_context.batch_params)

    def __setitem__(self, key, value):
        if is_developer_mode() and key not in self.table_context.columns:
            raise KeyError(f"Column not found in target schema: {key}")
        super().__setitem__(key, value)

    def map_error_row(self, row: ErrorRow) -> None:
        self.update({
            "a": float(row.a),
            "b": float(row.b),
            "N": row.N,
            "x": str(row.x),
            "regime": row.regime.value if row.regime else None,
            "env_err": row.env_err,
            "error": row.error[:256] if row.error else None,
        })
        self.update(scaled_fields("exact", row.exact))
        self.update(scaled_fields("asym", row.asym))

    def append(self) -> None:
        """
        Append the row to the target table once all cell values are populated.
        """
        if is_developer_mode():
            for column in self.table_context.columns.values():
                if column.name not in self:
                    raise ParameterException(
                        f"No column `{column.name}` in output row for table "
                        f"`{self.table_context.name}`")
        self.table_context.output_rows.append(dict(self))
