import math

import numpy as np
import pytest

from discretecs import build_field
from discretecs.ordering import (
    AxisOrder,
    center_position,
    order_axis,
    recenter,
    symmetrize,
    two_hump_layout_check,
)
from discretecs.quasidist import profile_f, q_function
from discretecs.states import coherent_state, fiducial, superpose


@pytest.mark.parametrize("n", [1, 3, 5])
def test_h_ascending(n):
    f = build_field(n)
    o = order_axis(f)
    h = o.h_profile()
    assert o.labels[0] == 0
    assert np.all(np.diff(h) >= 0)
    for m in range(n + 1):
        assert np.count_nonzero(h <= m) == sum(math.comb(n, r) for r in range(m + 1))


def test_profile_matches_ordered_q():
    f = build_field(5)
    o = order_axis(f)
    g = q_function(fiducial(f)).ordered(o)
    assert np.allclose(g[0], [profile_f(k, 5) for k in range(32)], atol=1e-12)
    assert np.allclose(g[:, 0], g[0], atol=1e-12)


def test_symmetrize_n1_and_peak():
    f = build_field(1)
    assert symmetrize(order_axis(f)).labels == (1, 0)
    f3 = build_field(3)
    s = order_axis(f3, "h_symmetric")
    assert s.labels[4] == 0 and center_position(s) == 4
    h = s.h_profile()
    # h grows moving away from the centre on both sides
    assert np.all(np.diff(h[:5]) <= 0) and np.all(np.diff(h[4:]) >= 0)


def test_bad_orders():
    f = build_field(2)
    with pytest.raises(ValueError):
        AxisOrder((0, 0, 1, 2), "h_ascending", f)
    with pytest.raises(ValueError):
        order_axis(f, "spiral")


def test_recentered_peak():
    f = build_field(4)
    g, d = f.power(3), f.power(7)
    psi = coherent_state(f, (g, d))
    qg = q_function(psi)
    rows, cols = recenter(order_axis(f, "h_symmetric"), g), recenter(order_axis(f, "h_symmetric"), d)
    grid = qg.ordered(rows, cols)
    c = center_position(rows)
    assert grid[c, c] == pytest.approx(1.0, abs=1e-12)
    assert grid.max() == pytest.approx(1.0, abs=1e-12)
    assert "recentered" in rows.scheme


def test_two_hump_layout():
    f = build_field(3)
    a = coherent_state(f, (0, 0))
    b = coherent_state(f, (f.power(7), f.power(7)))
    report = two_hump_layout_check(q_function(superpose(a, b)))
    assert report["n_peaks"] >= 2
    assert 0 < report["separation"] <= report["diagonal"]


def test_order_json():
    f = build_field(2)
    assert order_axis(f).to_json() == '["0", "s1", "s2", "s3"]'
