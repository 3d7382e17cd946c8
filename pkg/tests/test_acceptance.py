"""Acceptance criteria 1-14, each at its stated range and tolerance.

Every criterion prints one ``criterion N: PASS/FAIL`` line and the whole
table is repeated in the terminal summary.
"""

import time

import numpy as np
import pytest

from discretecs import build_field
from discretecs.quasidist import q_function
from discretecs.states import coherent_state, fiducial, squeezed_fiducial
from discretecs.verify import CHECKS, run_checks, squeeze_sweep

from conftest import record_criterion

MAX_N = 8
# wall-clock bounds stated per criterion (seconds)
RUNTIME = {1: 10.0, 2: 5.0, 8: 1.0}


def _run(number):
    t0 = time.perf_counter()
    results = run_checks(MAX_N, criteria={number})
    elapsed = time.perf_counter() - t0
    assert results, f"no checks registered for criterion {number}"
    for r in results:
        record_criterion(number, r.name, r.passed)
        print(r.line())
    if number in RUNTIME:
        within = elapsed < RUNTIME[number]
        record_criterion(number, f"runtime<{RUNTIME[number]:g}s", within)
    ok = all(r.passed for r in results) and (number not in RUNTIME or elapsed < RUNTIME[number])
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)")
    failed = [r.line() for r in results if not r.passed]
    assert not failed, "\n".join(failed)
    if number in RUNTIME:
        assert elapsed < RUNTIME[number], f"criterion {number} took {elapsed:.2f}s"
    return results


@pytest.mark.parametrize("number", range(1, 15))
def test_criterion(number):
    _run(number)


def test_every_criterion_has_a_check():
    assert {c.criterion for c in CHECKS} == set(range(1, 15))


def test_criterion_1_runtime_at_n8():
    f = build_field(8)
    t0 = time.perf_counter()
    totals = [
        q_function(s).total()
        for s in (fiducial(f), coherent_state(f, (3, 200)), squeezed_fiducial(f, f.power(7)))
    ]
    assert time.perf_counter() - t0 < 10.0
    assert np.allclose(totals, 256.0, rtol=0, atol=1e-9)


def test_criterion_13_sweep_table():
    sweep = squeeze_sweep(5)
    target = (4 / 3) ** 5
    print("zeta exponent -> sum Q^2")
    for e, v in sweep.items():
        print(f"  s{e:<2d} {v:.9f}")
    assert sweep[7] < target
