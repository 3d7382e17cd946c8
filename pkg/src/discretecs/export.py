"""CSV and JSON serialisation of grids and axis orders.

CSV floats are written with 17 significant digits (JSON uses the shortest
round-trip repr), so a text round trip reproduces every 64-bit value.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .gf2n import FieldSpec
from .ordering import AxisOrder, order_axis

FLOAT_FMT = "{:.17g}"
CORNER = "alpha\\beta"


def _orders(field, rows, cols):
    rows = order_axis(field) if rows is None else rows
    cols = rows if cols is None else cols
    return rows, cols


def grid_to_csv(values: np.ndarray, field: FieldSpec, rows: AxisOrder | None = None,
                cols: AxisOrder | None = None) -> str:
    """Rows follow the ordered alpha labels, columns the ordered beta labels."""
    rows, cols = _orders(field, rows, cols)
    ordered = values[np.ix_(rows.array(), cols.array())]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([CORNER] + cols.label_strings())
    for label, row in zip(rows.label_strings(), ordered):
        w.writerow([label] + [FLOAT_FMT.format(v) for v in row])
    return buf.getvalue()


def grid_from_csv(text: str, field: FieldSpec) -> np.ndarray:
    """Parse a grid written by :func:`grid_to_csv` back into field-integer order."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    cols = [field.parse(t) for t in header[1:]]
    out = np.full((field.order, field.order), np.nan)
    for row in reader:
        if not row:
            continue
        a = field.parse(row[0])
        out[a, cols] = [float(v) for v in row[1:]]
    if np.isnan(out).any():
        raise ValueError("CSV grid is incomplete")
    return out


def grid_to_json(values: np.ndarray, field: FieldSpec, rows: AxisOrder | None = None,
                 cols: AxisOrder | None = None, **extra) -> str:
    rows, cols = _orders(field, rows, cols)
    ordered = values[np.ix_(rows.array(), cols.array())]
    doc = {
        "field": field.to_dict(),
        "ordering": {
            "rows": rows.label_strings(),
            "cols": cols.label_strings(),
            "scheme": [rows.scheme, cols.scheme],
        },
        "values": ordered.tolist(),
    }
    doc.update(extra)
    return json.dumps(doc, indent=1)


def grid_from_json(text: str, field: FieldSpec) -> np.ndarray:
    doc = json.loads(text)
    rows = [field.parse(t) for t in doc["ordering"]["rows"]]
    cols = [field.parse(t) for t in doc["ordering"]["cols"]]
    out = np.empty((field.order, field.order))
    out[np.ix_(rows, cols)] = np.asarray(doc["values"], dtype=float)
    return out


def order_to_json(order: AxisOrder) -> str:
    return order.to_json()
