import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from discretecs import build_field
from discretecs.export import grid_from_csv, grid_from_json, grid_to_csv, grid_to_json
from discretecs.ordering import order_axis
from discretecs.quasidist import q_function
from discretecs.states import fiducial


def test_csv_layout():
    f = build_field(2)
    text = grid_to_csv(q_function(fiducial(f)).values, f)
    lines = text.splitlines()
    assert lines[0] == "alpha\\beta,0,s1,s2,s3"
    assert lines[1].split(",")[0] == "0"
    assert float(lines[1].split(",")[1]) == pytest.approx(1.0)
    assert len(lines) == 5


@settings(max_examples=50, deadline=None)
@given(arrays(np.float64, (8, 8), elements=st.floats(allow_nan=False, allow_infinity=False)))
def test_csv_json_round_trip_bit_exact(values):
    f = build_field(3)
    for order in (order_axis(f), order_axis(f, "h_symmetric")):
        assert np.array_equal(grid_from_csv(grid_to_csv(values, f, order), f), values)
        assert np.array_equal(grid_from_json(grid_to_json(values, f, order), f), values)
