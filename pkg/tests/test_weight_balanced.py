import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ConstructionError
from src.weight_balanced import build_weight_balanced, depth_bound


@pytest.mark.parametrize("weights,expected", [
    ([1, 1, 1, 1], {0: 2, 1: 2, 2: 2, 3: 2}),
    ([1], {0: 0}),
    ([8, 1, 1], {0: 1, 1: 2, 2: 2}),
])
def test_leaf_depths(weights, expected):
    assert build_weight_balanced(weights).leaf_depths() == expected


def test_skewed_weights_stay_within_bound():
    # жадное деление по префиксу кладёт лист 0 на глубину 8 при границе 7
    weights = [1, 2, 1, 5, 1, 11, 1, 23, 1]
    depths = build_weight_balanced(weights).leaf_depths()
    assert all(depths[i] <= depth_bound(weights, i) for i in range(len(weights)))
    assert depth_bound(weights, 0) == 7


@pytest.mark.parametrize("weights", [[], [1, 0], [3, -1]])
def test_rejects_bad_weights(weights):
    with pytest.raises(ConstructionError):
        build_weight_balanced(weights)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=1000), min_size=1, max_size=40))
def test_leaves_in_order_and_depth_bound(weights):
    shape = build_weight_balanced(weights)
    assert shape.leaves() == list(range(len(weights)))
    depths = shape.leaf_depths()
    for i in range(len(weights)):
        assert depths[i] <= depth_bound(weights, i)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=50), min_size=2, max_size=30))
def test_every_internal_node_is_full(weights):
    shape = build_weight_balanced(weights)
    assert shape.internal_count == len(weights) - 1
