"""
Column layout of the run table shared by the CSV writer and the DuckDB result store.
"""
from typing import Dict, List, Optional, Union
from enum import Enum


class ColumnType(Enum):
    """DuckDB column types used by the run table."""
    INTEGER = "INTEGER"
    BIGINT = "BIGINT"
    UBIGINT = "UBIGINT"
    DOUBLE = "DOUBLE"
    VARCHAR = "VARCHAR"
    BOOLEAN = "BOOLEAN"


_PANDAS_DTYPES = {
    ColumnType.INTEGER.value: "int64",
    ColumnType.BIGINT.value: "int64",
    ColumnType.UBIGINT.value: "uint64",
    ColumnType.DOUBLE.value: "float64",
    ColumnType.VARCHAR.value: "object",
    ColumnType.BOOLEAN.value: "bool",
}


class ColumnDefinition:
    """
    One column of a result table.
    """

    def __init__(self, name: str, column_type: Union[ColumnType, str],
                 nullable: bool = True, description: str = ""):
        """
        :param name: Column name, also the CSV header
        :param column_type: DuckDB column type
        :param nullable: Whether an empty CSV cell is allowed
        :param description: One line for the README column table
        """
        self.name = name
        self.column_type = column_type if isinstance(column_type, str) else column_type.value
        self.nullable = nullable
        self.description = description

    def to_sql(self) -> str:
        sql = f"{self.name} {self.column_type}"
        if not self.nullable:
            sql += " NOT NULL"
        return sql

    @property
    def pandas_dtype(self) -> str:
        # missing integers need the nullable extension dtype
        if self.nullable and self.column_type in (ColumnType.INTEGER.value, ColumnType.BIGINT.value):
            return "Int64"
        return _PANDAS_DTYPES[self.column_type]

    def format_value(self, value) -> str:
        """CSV cell text: empty for missing values, ``true``/``false`` for booleans."""
        if value is None:
            if not self.nullable:
                raise ValueError(f"Column {self.name} does not accept missing values")
            return ""
        if self.column_type == ColumnType.BOOLEAN.value:
            return "true" if value else "false"
        if self.column_type == ColumnType.DOUBLE.value:
            return repr(float(value))
        return str(value)


class TableDefinition:
    """
    An ordered set of columns.
    """

    def __init__(self, name: str, columns: List[ColumnDefinition]):
        self.name = name
        self.columns = columns
        self._by_name: Dict[str, ColumnDefinition] = {column.name: column for column in columns}
        if len(self._by_name) != len(columns):
            raise ValueError(f"Duplicate column names in table {name}")

    @property
    def column_names(self) -> List[str]:
        return [column.name for column in self.columns]

    def column(self, name: str) -> Optional[ColumnDefinition]:
        return self._by_name.get(name)

    def to_sql(self) -> str:
        """
        :return: CREATE TABLE statement for DuckDB
        """
        columns_sql = ", ".join(column.to_sql() for column in self.columns)
        return f"CREATE TABLE {self.name} ({columns_sql})"

    def pandas_dtypes(self) -> Dict[str, str]:
        return {column.name: column.pandas_dtype for column in self.columns}

    def format_row(self, row: Dict[str, object]) -> List[str]:
        """
        Cells of ``row`` in column order.

        :raises ValueError: for unknown keys or missing non-nullable values
        """
        unknown = set(row) - set(self._by_name)
        if unknown:
            raise ValueError(f"Unknown columns for table {self.name}: {sorted(unknown)}")
        return [column.format_value(row.get(column.name)) for column in self.columns]


RUN_RECORD_TABLE = TableDefinition("runs", [
    ColumnDefinition("benchmark", ColumnType.VARCHAR, nullable=False, description="mlotz, omm or cocz"),
    ColumnDefinition("m", ColumnType.INTEGER, nullable=False, description="number of objectives"),
    ColumnDefinition("n", ColumnType.INTEGER, nullable=False, description="problem size"),
    ColumnDefinition("mutation", ColumnType.VARCHAR, nullable=False, description="one-bit or standard-bit"),
    ColumnDefinition("archiver", ColumnType.VARCHAR, nullable=False, description="aga, hva, mga or none"),
    ColumnDefinition("archive_size", ColumnType.INTEGER, nullable=False, description="archive capacity L"),
    ColumnDefinition("replicate", ColumnType.INTEGER, nullable=False, description="replicate index within n"),
    ColumnDefinition("seed", ColumnType.UBIGINT, nullable=False, description="64-bit run seed"),
    ColumnDefinition("budget", ColumnType.BIGINT, nullable=False, description="iteration budget"),
    ColumnDefinition("stop", ColumnType.VARCHAR, nullable=False, description="full-front, coverage or budget"),
    ColumnDefinition("iterations", ColumnType.BIGINT, nullable=False, description="iterations performed"),
    ColumnDefinition("iterations_to_first_pareto", ColumnType.BIGINT,
                     description="first iteration with a Pareto-optimal current solution"),
    ColumnDefinition("iterations_to_full_front", ColumnType.BIGINT,
                     description="first iteration at which the archive equals the front"),
    ColumnDefinition("censored", ColumnType.BOOLEAN, nullable=False, description="stop target not reached within budget"),
    ColumnDefinition("coverage_fraction", ColumnType.DOUBLE, nullable=False, description="|archive fitness & front| / |front|"),
    ColumnDefinition("hv_fraction", ColumnType.DOUBLE, nullable=False, description="hv(archive) / hv(front), h = (-1,...,-1)"),
    ColumnDefinition("archive_count", ColumnType.INTEGER, nullable=False, description="final number of archive members"),
    ColumnDefinition("wall_time", ColumnType.DOUBLE, nullable=False, description="seconds spent in the run"),
])
