"""
Batched CSV output for run tables and JSON-lines output for traces.
"""
import csv
import json
import logging
import os
from typing import Any, Dict, List, Optional, TextIO

from .schema import RUN_RECORD_TABLE, TableDefinition


class CsvRecordWriter:
    """
    Writes rows of a :class:`TableDefinition` to a CSV file in batches.

    A row that cannot be formatted is logged and counted, the remaining rows of
    the batch are still written; the file is flushed after every batch so an
    interrupted sweep leaves every completed batch on disk.
    """

    def __init__(self, path: str, table: TableDefinition = RUN_RECORD_TABLE, batch_size: int = 64):
        """
        :param path: Output CSV path; parent directories are created
        :param table: Column layout
        :param batch_size: Rows buffered before a flush
        """
        if batch_size < 1:
            raise ValueError("batch_size must be positive")
        self.path = path
        self.table = table
        self.batch_size = batch_size
        self.rows_written = 0
        self.failed_rows = 0
        self._pending: List[Dict[str, Any]] = []
        self._handle: Optional[TextIO] = None
        self._writer = None
        self.logger = logging.getLogger(__name__)

    def open(self):
        if self._handle is None:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            self._handle = open(self.path, "w", newline="", encoding="utf-8")
            self._writer = csv.writer(self._handle)
            self._writer.writerow(self.table.column_names)
            self.logger.debug(f"Opened run table: {self.path}")
        return self

    def write(self, row: Dict[str, Any]):
        self._pending.append(row)
        if len(self._pending) >= self.batch_size:
            self.flush()

    def flush(self):
        self.open()
        batch, self._pending = self._pending, []
        for row in batch:
            try:
                self._writer.writerow(self.table.format_row(row))
                self.rows_written += 1
            except (ValueError, OSError) as e:
                self.failed_rows += 1
                self.logger.error(f"Failed to write row (n={row.get('n')}, replicate={row.get('replicate')}): {e}")
        self._handle.flush()
        if batch:
            self.logger.debug(f"Wrote batch of {len(batch)} rows to {self.path}")

    def close(self):
        if self._handle is not None:
            try:
                self.flush()
            finally:
                self._handle.close()
                self._handle = None
                self._writer = None
                self.logger.debug(f"Closed run table: {self.path} ({self.rows_written} rows, {self.failed_rows} failed)")

    def __enter__(self):
        return self.open()

    def __exit__(self, exc_type, exc, tb):
        self.close()
        return False


class TraceWriter:
    """
    One JSON object per line.

    ``every='event'`` keeps only the iterations that changed the archive,
    ``every='iteration'`` keeps all of them.
    """

    def __init__(self, path: str, every: str = "event"):
        if every not in ("event", "iteration"):
            raise ValueError(f"every must be event or iteration, got {every!r}")
        self.path = path
        self.every = every
        self.records_written = 0
        self._handle: Optional[TextIO] = None
        self.logger = logging.getLogger(__name__)

    def wants(self, changed: bool) -> bool:
        return self.every == "iteration" or changed

    def write(self, record: Dict[str, Any]):
        if self._handle is None:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            self._handle = open(self.path, "w", encoding="utf-8")
        self._handle.write(json.dumps(record, separators=(",", ":")) + "\n")
        self.records_written += 1

    def close(self):
        if self._handle is not None:
            self._handle.close()
            self._handle = None
            self.logger.debug(f"Trace {self.path}: {self.records_written} records")

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()
        return False


def read_trace(path: str) -> List[Dict[str, Any]]:
    with open(path, "r", encoding="utf-8") as handle:
        return [json.loads(line) for line in handle if line.strip()]
