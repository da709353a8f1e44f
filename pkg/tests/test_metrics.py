import math
import random

import pytest

from golden import DISTANCE_TOLERANCE
from simrank import (
    EUCLIDEAN,
    MANHATTAN,
    DimensionMismatch,
    MetricChoice,
    PlayerVector,
    UnknownPlayer,
    distance_to_target,
    manhattan_distance,
    minkowski_distance,
    player_vector,
)


def test_metric_exponent_must_be_at_least_one():
    with pytest.raises(ValueError):
        MetricChoice(0.5)
    with pytest.raises(ValueError):
        MetricChoice(math.inf)
    assert MetricChoice(1.5).p == 1.5


def test_identical_points_have_zero_distance():
    v = (0.2, 0.9, 0.4)
    assert minkowski_distance(v, v, MANHATTAN) == 0.0
    assert minkowski_distance(v, v, EUCLIDEAN) == 0.0


def test_unit_square_corners():
    a, b = (0.0, 0.0), (1.0, 1.0)
    assert minkowski_distance(a, b, MANHATTAN) == 2.0
    assert minkowski_distance(a, b, EUCLIDEAN) == pytest.approx(math.sqrt(2.0), abs=1e-15)


def test_hand_computed_manhattan():
    a = (0.3, 0.7, 0.1)
    b = (0.5, 0.2, 0.4)
    assert minkowski_distance(a, b, MANHATTAN) == pytest.approx(1.0, abs=1e-15)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        manhattan_distance((1.0, 2.0), (1.0,))
    with pytest.raises(DimensionMismatch):
        minkowski_distance((1.0, 2.0), (1.0,), EUCLIDEAN)


def test_player_vector_inputs():
    a = PlayerVector("a", (0.0, 0.0))
    b = PlayerVector("b", (1.0, 1.0))
    assert manhattan_distance(a, b) == 2.0


def test_manhattan_equals_minkowski_p1():
    rng = random.Random(41)
    for _ in range(500):
        n = rng.randint(1, 17)
        a = [rng.random() for _ in range(n)]
        b = [rng.random() for _ in range(n)]
        assert abs(manhattan_distance(a, b) - minkowski_distance(a, b, MANHATTAN)) <= 1e-12


def test_axioms_sample():
    rng = random.Random(42)
    for metric in (MANHATTAN, EUCLIDEAN):
        for _ in range(300):
            x = [rng.random() for _ in range(17)]
            y = [rng.random() for _ in range(17)]
            z = [rng.random() for _ in range(17)]
            dxy = minkowski_distance(x, y, metric)
            assert dxy >= 0.0
            assert dxy == minkowski_distance(y, x, metric)
            assert dxy > 0.0  # random reals never collide
            assert minkowski_distance(x, z, metric) <= dxy + minkowski_distance(y, z, metric) + 1e-12


def test_permutation_invariance():
    rng = random.Random(43)
    x = [rng.random() for _ in range(17)]
    y = [rng.random() for _ in range(17)]
    order = list(range(17))
    rng.shuffle(order)
    xs = [x[i] for i in order]
    ys = [y[i] for i in order]
    for metric in (MANHATTAN, EUCLIDEAN):
        assert minkowski_distance(xs, ys, metric) == pytest.approx(
            minkowski_distance(x, y, metric), abs=1e-12
        )


def test_bundled_pairwise_distances(reference_matrix):
    messi = player_vector(reference_matrix, "Messi")
    coutinho = player_vector(reference_matrix, "Coutinho")
    lukaku = player_vector(reference_matrix, "Lukaku")
    assert manhattan_distance(messi, coutinho) == pytest.approx(3.769, abs=DISTANCE_TOLERANCE)
    assert manhattan_distance(messi, lukaku) == pytest.approx(7.489, abs=DISTANCE_TOLERANCE)


def test_manhattan_bound_on_unit_cube(reference_matrix):
    # each scaled coordinate contributes at most 1
    messi = reference_matrix.row("Messi")
    for other in reference_matrix.players:
        assert manhattan_distance(messi, reference_matrix.row(other)) <= 17.0


def test_distance_to_target_excludes_target(reference_matrix):
    distances = distance_to_target(reference_matrix, "Messi", MANHATTAN)
    assert len(distances) == 28
    assert "Messi" not in distances
    assert min(distances, key=distances.get) == "Coutinho"


def test_distance_to_target_ronaldo(reference_matrix):
    distances = distance_to_target(reference_matrix, "C. Ronaldo", MANHATTAN)
    assert distances["Aubameyang"] == pytest.approx(2.29, abs=DISTANCE_TOLERANCE)


def test_distance_to_target_unknown(reference_matrix):
    with pytest.raises(UnknownPlayer):
        distance_to_target(reference_matrix, "Nobody", MANHATTAN)
