import numpy as np
import pytest

from permharmonic.counting import CountedScalar, OpCounter
from permharmonic.transform import (
    build_plan,
    transform,
    transform_counted,
    transform_counted_scalarwise,
)


def test_counter_tallies_each_operation():
    counter = OpCounter()
    a, b = counter.wrap(3.0), counter.wrap(4.0)
    assert float(a + b) == 7.0
    assert float(a - b) == -1.0
    assert float(a * b) == 12.0
    assert float(a / b) == 0.75
    assert (counter.mult, counter.add) == (2, 2)


def test_negation_and_wrapping_are_free():
    counter = OpCounter()
    a = counter.wrap(5.0)
    assert float(-a) == -5.0
    counter.wrap(-a.value)
    assert (counter.mult, counter.add) == (0, 0)


def test_counter_reset():
    counter = OpCounter()
    _ = counter.wrap(1.0) + counter.wrap(2.0)
    counter.reset()
    assert (counter.mult, counter.add) == (0, 0)


def test_plain_numbers_are_rejected():
    counter = OpCounter()
    a = counter.wrap(1.0)
    for op in (lambda: a + 1.0, lambda: a - 1, lambda: a * 2.0, lambda: a / 2.0):
        with pytest.raises(TypeError):
            op()
    for op in (lambda: 1.0 + a, lambda: 1 - a, lambda: 2.0 * a, lambda: 2.0 / a):
        with pytest.raises(TypeError):
            op()


def test_foreign_counters_are_rejected():
    a = OpCounter().wrap(1.0)
    b = OpCounter().wrap(2.0)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_counts_are_exactly_2n_minus_2():
    for n in (2, 3, 5, 17, 256, 1024):
        x = np.arange(1.0, n + 1.0)
        _, mult, add = transform_counted(x)
        assert (mult, add) == (2 * n - 2, 2 * n - 2)
        _, mult, add = transform_counted_scalarwise(x)
        assert (mult, add) == (2 * n - 2, 2 * n - 2)


def test_counted_routes_agree_exactly():
    # The vectorized tally and the scalar-by-scalar execution must agree on
    # both values and counts; this keeps the declared counts honest.
    rng = np.random.default_rng(0)
    for n in (2, 3, 4, 9, 40):
        x = rng.uniform(-5, 5, n)
        plan = build_plan(n)
        fast, mult_fast, add_fast = transform_counted(x, plan)
        slow, mult_slow, add_slow = transform_counted_scalarwise(x, plan)
        assert (mult_fast, add_fast) == (mult_slow, add_slow)
        assert np.array_equal(fast, slow)
        assert np.array_equal(fast, transform(x, plan))


def test_counted_values_match_plain_transform():
    rng = np.random.default_rng(1)
    x = rng.uniform(-1, 1, 33)
    counted, _, _ = transform_counted(x)
    assert np.array_equal(counted, transform(x))


def test_shared_counter_reports_per_call_counts():
    counter = OpCounter()
    x = np.ones(6)
    _, mult1, add1 = transform_counted(x, counter=counter)
    _, mult2, add2 = transform_counted(x, counter=counter)
    assert (mult1, add1) == (mult2, add2) == (10, 10)
    assert (counter.mult, counter.add) == (20, 20)


def test_counted_rejects_complex():
    z = np.ones(4) + 1j
    with pytest.raises(TypeError):
        transform_counted(z)
    with pytest.raises(TypeError):
        transform_counted_scalarwise(z)
