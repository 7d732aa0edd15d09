"""
Tabular output for censuses, density tables and orbits.
"""

import sys
from typing import IO, Iterable, Sequence

import pandas as pd

TABLE_FORMATS = ("tsv", "csv", "json")


def make_frame(rows: Iterable[Sequence], columns: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=list(columns))


def render_table(df: pd.DataFrame, fmt: str = "tsv") -> str:
    """
    Render a frame as TSV, CSV or JSON lines (one record per row).

    Args:
        df: Table to render
        fmt: One of tsv, csv, json

    Returns:
        The rendered text, newline terminated
    """
    if fmt == "tsv":
        return df.to_csv(sep="\t", index=False)
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "json":
        if df.empty:
            return ""
        return df.to_json(orient="records", lines=True).rstrip("\n") + "\n"
    raise ValueError(f"unknown table format {fmt!r}, expected one of {TABLE_FORMATS}")


def write_table(df: pd.DataFrame, fmt: str = "tsv", stream: IO[str] = None):
    (stream or sys.stdout).write(render_table(df, fmt))
