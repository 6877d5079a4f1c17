"""
In-memory DuckDB store for run tables.

Run tables live in CSV files; the store loads them (or freshly produced
records) into an in-memory database for grouping and aggregation. Nothing is
written to disk.
"""
import logging
import uuid
from typing import Any, List, Optional, Sequence

import duckdb
import pandas as pd
from pandas import DataFrame

from .errors import ConfigError
from .schema import RUN_RECORD_TABLE, TableDefinition

# Columns whose value is only meaningful when the run reached its stop target
STOP_TARGET_COLUMNS = ("iterations", "iterations_to_full_front")


class ResultStore:
    """A run table held in an in-memory DuckDB connection."""

    def __init__(self, table: TableDefinition = RUN_RECORD_TABLE):
        self.table = table
        self.conn = None
        self.loaded = False
        self.logger = logging.getLogger(__name__)

    def connect(self):
        """Opens the in-memory database and creates the run table on first use."""
        if not self.loaded:
            self.conn = duckdb.connect(":memory:")
            self.conn.execute(self.table.to_sql())
            self.loaded = True
            self.logger.debug(f"Created in-memory table {self.table.name}")
        return self.conn

    def disconnect(self):
        if self.loaded and self.conn is not None:
            try:
                self.conn.close()
            except Exception as e:
                self.logger.warning(f"Error during disconnect: {e}")
            finally:
                self.loaded = False
                self.conn = None

    def __enter__(self):
        self.connect()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.disconnect()
        return False

    @classmethod
    def from_csv(cls, path: str, table: TableDefinition = RUN_RECORD_TABLE) -> "ResultStore":
        """
        Load a run table written by :class:`~upaes.writers.CsvRecordWriter`.

        :raises ConfigError: if the file lacks a column of the table
        """
        frame = pd.read_csv(path, true_values=["true"], false_values=["false"])
        missing = [name for name in table.column_names if name not in frame.columns]
        if missing:
            raise ConfigError(f"{path} is missing run table columns: {missing}")
        store = cls(table)
        store.insert_frame(frame)
        store.logger.debug(f"Loaded {len(frame)} rows from {path}")
        return store

    @classmethod
    def from_records(cls, records: Sequence[Any], table: TableDefinition = RUN_RECORD_TABLE) -> "ResultStore":
        store = cls(table)
        store.insert_frame(DataFrame([record.to_row() for record in records], columns=table.column_names))
        return store

    def insert_frame(self, frame: DataFrame) -> int:
        """
        Append the table's columns of ``frame`` through a temporary registration.

        :return: Number of rows inserted
        """
        conn = self.connect()
        if frame.empty:
            return 0
        frame = frame[self.table.column_names].astype(self.table.pandas_dtypes())
        temp_name = f"incoming_{uuid.uuid4().hex[:8]}"
        conn.register(temp_name, frame)
        try:
            columns = ", ".join(self.table.column_names)
            conn.execute(f"INSERT INTO {self.table.name} ({columns}) SELECT {columns} FROM {temp_name}")
        except Exception as e:
            self.logger.error(f"Failed to insert {len(frame)} rows into {self.table.name}: {e}")
            raise
        finally:
            conn.unregister(temp_name)
        return len(frame)

    def run_query(self, query: str, parameters: Optional[List[Any]] = None):
        """
        :param query: SQL over the run table
        :param parameters: Optional positional parameters
        :return: All result rows
        """
        return self.connect().execute(query, parameters or []).fetchall()

    def to_dataframe(self, query: Optional[str] = None, parameters: Optional[List[Any]] = None) -> DataFrame:
        query = query or f"SELECT * FROM {self.table.name} ORDER BY n, replicate"
        return self.connect().execute(query, parameters or []).df()

    def row_count(self) -> int:
        return self.run_query(f"SELECT COUNT(*) FROM {self.table.name}")[0][0]

    def mean_by_n(self, column: str = "iterations_to_full_front") -> DataFrame:
        """
        Per problem size: run count, uncensored count and the mean of ``column`` over uncensored runs.

        The ``censored`` flag marks runs that missed their stop target; it only
        censors the columns measuring that target. Other columns, such as
        ``iterations_to_first_pareto``, count a run as uncensored whenever they hold a value.

        :raises ConfigError: for a column the table does not have
        """
        if self.table.column(column) is None:
            raise ConfigError(f"Unknown run table column: {column}")
        observed = f"{column} IS NOT NULL"
        if column in STOP_TARGET_COLUMNS:
            observed = f"NOT censored AND {observed}"
        query = (
            f"SELECT n, COUNT(*) AS runs, "
            f"COUNT(*) FILTER (WHERE {observed}) AS uncensored, "
            f"AVG({column}) FILTER (WHERE {observed}) AS mean "
            f"FROM {self.table.name} GROUP BY n ORDER BY n"
        )
        return self.to_dataframe(query)

    def summary(self) -> DataFrame:
        """Per problem size: censoring, coverage and hypervolume means."""
        query = (
            f"SELECT n, COUNT(*) AS runs, SUM(CAST(censored AS INTEGER)) AS censored, "
            f"AVG(iterations_to_first_pareto) AS mean_first_pareto, "
            f"AVG(iterations_to_full_front) AS mean_full_front, "
            f"AVG(coverage_fraction) AS mean_coverage, MIN(coverage_fraction) AS min_coverage, "
            f"AVG(hv_fraction) AS mean_hv_fraction, SUM(wall_time) AS wall_time "
            f"FROM {self.table.name} GROUP BY n ORDER BY n"
        )
        return self.to_dataframe(query)
