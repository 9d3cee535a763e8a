"""Reader for the simulator's long-format sweep CSVs.

The exchange schema is `axis1,axis2,delta,quantity,value`, one row per
(cell, quantity, detuning).  This module is the only place the file format
is interpreted.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

EXPECTED_HEADER = ["axis1", "axis2", "delta", "quantity", "value"]


class SchemaError(Exception):
    """The CSV does not follow the sweep export schema."""


@dataclass(frozen=True)
class SweepTable:
    """One quantity on an (axis1, axis2, delta) grid."""

    axis1: tuple
    axis2: tuple  # empty when the sweep had a single axis
    deltas: np.ndarray
    quantity: str
    values: np.ndarray  # shape (n1, max(n2,1), n_delta)

    def curve(self, i1: int, i2: int = 0) -> np.ndarray:
        return self.values[i1, i2]


def _check_header(header, path) -> None:
    if header is None:
        raise SchemaError(f"{path}: empty CSV, nothing to render")
    if header != EXPECTED_HEADER:
        for got, want in zip(header, EXPECTED_HEADER):
            if got != want:
                raise SchemaError(f"{path}: expected column {want!r}, found {got!r}")
        raise SchemaError(
            f"{path}: expected {len(EXPECTED_HEADER)} columns, found {len(header)}"
        )


def read_sweep_csv(path) -> SweepTable:
    """Load a sweep CSV; raises SchemaError on header or shape problems."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        _check_header(header, path)
        rows = [row for row in reader]
    if not rows:
        raise SchemaError(f"{path}: header-only CSV, nothing to render")

    axis1, axis2, deltas, quantities = [], [], [], []
    parsed = []
    for row in rows:
        if len(row) != 5:
            raise SchemaError(f"{path}: row with {len(row)} fields: {row!r}")
        v1 = float(row[0])
        v2 = None if row[1] == "" else float(row[1])
        d = float(row[2])
        parsed.append((v1, v2, d, row[3], float(row[4])))
        if v1 not in axis1:
            axis1.append(v1)
        if v2 is not None and v2 not in axis2:
            axis2.append(v2)
        if d not in deltas:
            deltas.append(d)
        if row[3] not in quantities:
            quantities.append(row[3])
    if len(quantities) != 1:
        raise SchemaError(f"{path}: expected one quantity per file, found {quantities}")

    n1, n2, nd = len(axis1), max(len(axis2), 1), len(deltas)
    values = np.full((n1, n2, nd), np.nan)
    i1 = {v: i for i, v in enumerate(axis1)}
    i2 = {v: i for i, v in enumerate(axis2)}
    idx = {v: i for i, v in enumerate(deltas)}
    for v1, v2, d, _, value in parsed:
        values[i1[v1], i2[v2] if v2 is not None else 0, idx[d]] = value
    return SweepTable(
        axis1=tuple(axis1),
        axis2=tuple(axis2),
        deltas=np.asarray(deltas),
        quantity=quantities[0],
        values=values,
    )
