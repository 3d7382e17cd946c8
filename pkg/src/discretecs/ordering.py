"""Axis orderings of the discrete phase space by the h-function."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .gf2n import FieldSpec

SCHEMES = ("h_ascending", "h_symmetric")


@dataclass(frozen=True)
class AxisOrder:
    """``labels[i]`` is the field element placed at axis position ``i``."""

    labels: tuple[int, ...]
    scheme: str
    field: FieldSpec

    def __post_init__(self):
        if sorted(self.labels) != list(range(self.field.order)):
            raise ValueError("axis labels must be a permutation of the field elements")

    def __len__(self):
        return len(self.labels)

    def array(self) -> np.ndarray:
        return np.asarray(self.labels, dtype=np.int64)

    def position(self, element: int) -> int:
        return self.labels.index(element)

    def h_profile(self) -> np.ndarray:
        return self.field.h_table[self.array()]

    def label_strings(self) -> list[str]:
        return [self.field.label(x) for x in self.labels]

    def to_json(self) -> str:
        return json.dumps(self.label_strings())


def order_axis(field: FieldSpec, scheme: str = "h_ascending") -> AxisOrder:
    """Order field elements by h; ties by ascending exponent (0 first)."""
    if scheme == "h_symmetric":
        return symmetrize(order_axis(field, "h_ascending"))
    if scheme != "h_ascending":
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    nonzero = sorted(range(1, field.order), key=lambda x: (field.h(x), field.exponent(x)))
    return AxisOrder(tuple([0] + nonzero), scheme, field)


def recenter(order: AxisOrder, gamma: int) -> AxisOrder:
    """Shift every label by ``gamma`` so a hump displaced by ``gamma`` sits where 0 did."""
    f = order.field
    scheme = order.scheme if gamma == 0 else f"{order.scheme}+recentered({f.label(gamma)})"
    return AxisOrder(tuple(x ^ gamma for x in order.labels), scheme, f)


def symmetrize(order: AxisOrder) -> AxisOrder:
    """Spread each h-strip on both sides of the peak.

    The peak goes to position ``2^{n-1}`` and the remaining elements are
    dealt alternately left and right of it, starting on the left, in the
    order given. The left side therefore ends up one element longer.
    """
    f = order.field
    q = f.order
    center = q // 2
    out = [None] * q
    out[center] = order.labels[0]
    left, right = center - 1, center + 1
    for k, x in enumerate(order.labels[1:]):
        if k % 2 == 0:
            out[left] = x
            left -= 1
        else:
            out[right] = x
            right += 1
    return AxisOrder(tuple(out), "h_symmetric", f)


def center_position(order: AxisOrder) -> int:
    """Axis position of the peak (where the element 0 sits before recentering)."""
    return len(order) // 2 if order.scheme.startswith("h_symmetric") else 0


def _peak_clusters(grid: np.ndarray, atol: float = 1e-12):
    """Plateau-merged local maxima under 8-neighbourhood, highest first."""
    rows, cols = grid.shape
    padded = np.pad(grid, 1, constant_values=-np.inf)
    is_max = np.ones_like(grid, dtype=bool)
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr or dc:
                nb = padded[1 + dr : 1 + dr + rows, 1 + dc : 1 + dc + cols]
                is_max &= grid >= nb - atol
    seen = np.zeros_like(is_max)
    clusters = []
    for r, c in zip(*np.nonzero(is_max)):
        if seen[r, c]:
            continue
        val = grid[r, c]
        stack, cells = [(r, c)], []
        seen[r, c] = True
        while stack:
            y, x = stack.pop()
            cells.append((int(y), int(x)))
            for dy in (-1, 0, 1):
                for dx in (-1, 0, 1):
                    yy, xx = y + dy, x + dx
                    if (
                        0 <= yy < rows
                        and 0 <= xx < cols
                        and is_max[yy, xx]
                        and not seen[yy, xx]
                        and abs(grid[yy, xx] - val) <= atol
                    ):
                        seen[yy, xx] = True
                        stack.append((yy, xx))
        clusters.append((float(val), min(cells)))
    clusters.sort(key=lambda t: (-t[0], t[1]))
    return clusters


def two_hump_layout_check(qgrid, order: AxisOrder | None = None) -> dict:
    """Locate the two highest peaks of an ordered Q grid.

    Returns a report with the peak positions (ordered coordinates), their
    heights, their separation and the grid diagonal length.
    """
    if order is None:
        order = order_axis(qgrid.field)
    g = qgrid.ordered(order)
    clusters = _peak_clusters(g)
    peaks = [{"position": pos, "height": h} for h, pos in clusters[:2]]
    diag = float((len(order) - 1) * np.sqrt(2.0))
    sep = 0.0
    if len(peaks) == 2:
        (r0, c0), (r1, c1) = peaks[0]["position"], peaks[1]["position"]
        sep = float(np.hypot(r1 - r0, c1 - c0))
    return {
        "peaks": peaks,
        "n_peaks": len(clusters),
        "separation": sep,
        "diagonal": diag,
        "labels": [
            tuple(order.field.label(order.labels[i]) for i in p["position"]) for p in peaks
        ],
    }
