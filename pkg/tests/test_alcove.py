"""Tests for the affine Weyl group combinatorics."""

import pytest

from tiltq.alcove import (
    NotTiltingCharacter,
    decompose_into_tiltings,
    indexed_weight,
    linked_lower_weight,
    orbit,
    reflect,
    tensor_power_factors,
    tensor_weyl_factors,
    tilting_weyl_factors,
)


def reflection_closure_orbit(x, l, cutoff):
    """Independent oracle: close under all reflections s_r, t_r directly."""
    seen = {x}
    frontier = [x]
    bound = cutoff + 8 * l
    while frontier:
        k = frontier.pop()
        for kind in ("s", "t"):
            for r in range(-cutoff // l - 4, cutoff // l + 5):
                img = reflect(kind, r, k, l)
                if -bound <= img <= bound and img not in seen:
                    seen.add(img)
                    frontier.append(img)
    return sorted(w for w in seen if -1 <= w <= cutoff)


def test_reflect_values():
    assert reflect("s", 0, -1, 3) == 5
    assert reflect("t", 0, -1, 3) == -1
    assert reflect("s", 0, 2, 3) == 2


def test_orbits_match_block_lists():
    assert orbit(0, 3, 12) == [0, 4, 6, 10, 12]
    assert orbit(1, 3, 9) == [1, 3, 7, 9]
    assert orbit(2, 3, 8) == [2, 8]
    assert orbit(-1, 3, 11) == [-1, 5, 11]


@pytest.mark.parametrize("l", [3, 4, 5])
def test_orbit_against_reflection_closure(l):
    for x in range(-1, l):
        assert orbit(x, l, 6 * l) == reflection_closure_orbit(x, l, 6 * l)


def test_indexed_weight_interior():
    assert indexed_weight(0, 3, 0) == 0
    assert indexed_weight(0, 3, 1) == 4
    assert indexed_weight(0, 3, 2) == 6
    assert indexed_weight(1, 3, 3) == 9


def test_indexed_weight_walls_double():
    assert indexed_weight(-1, 3, 0) == -1
    assert indexed_weight(-1, 3, 1) == 5
    assert indexed_weight(-1, 3, 2) == 5
    assert indexed_weight(2, 3, 0) == 2
    assert indexed_weight(2, 3, 1) == 2
    assert indexed_weight(2, 3, 2) == 8


def test_indexed_weight_bijectivity_interior():
    for l in (3, 4, 5):
        for base in range(0, l - 1):
            values = [indexed_weight(base, l, i) for i in range(8)]
            assert len(set(values)) == len(values)
            assert values == sorted(values)


def test_alternating_gap_pattern():
    values = [indexed_weight(0, 3, i) for i in range(6)]
    gaps = [b - a for a, b in zip(values, values[1:])]
    assert gaps == [4, 2, 4, 2, 4]


def test_tensor_weyl_factors():
    assert tensor_weyl_factors(1, 1) == {0: 1, 2: 1}
    assert tensor_weyl_factors(0, 7) == {7: 1}
    assert tensor_weyl_factors(2, 3) == {1: 1, 3: 1, 5: 1}
    assert tensor_weyl_factors(-1, 3) == {}


def test_tilting_weyl_factors():
    assert tilting_weyl_factors(4, 3) == {4: 1, 0: 1}
    assert tilting_weyl_factors(2, 3) == {2: 1}
    assert tilting_weyl_factors(6, 3) == {6: 1, 4: 1}
    assert tilting_weyl_factors(-2, 3) == {}


def test_linked_lower_weight():
    assert linked_lower_weight(4, 3) == 0
    assert linked_lower_weight(10, 3) == 6
    with pytest.raises(ValueError):
        linked_lower_weight(5, 3)  # wall weight


def test_decompose_round_trip():
    for l in (3, 4, 5):
        for i in range(0, 31):
            assert decompose_into_tiltings(tilting_weyl_factors(i, l), l) == {i: 1}


def test_decompose_examples():
    assert decompose_into_tiltings({0: 1, 2: 1}, 3) == {2: 1, 0: 1} or decompose_into_tiltings(
        {0: 1, 2: 1}, 3
    ) == {2: 1, 0: 1}
    assert decompose_into_tiltings({4: 1, 0: 1}, 3) == {4: 1}
    assert decompose_into_tiltings({}, 3) == {}


def test_decompose_rejects_non_character():
    with pytest.raises(NotTiltingCharacter):
        decompose_into_tiltings({4: 1}, 3)  # missing the forced factor at 0


def test_tensor_power_contains_top_tilting_once():
    for l in (3, 4, 5):
        for k in range(0, 11):
            factors = tensor_power_factors([1] * k, l)
            tiltings = decompose_into_tiltings(factors, l)
            assert tiltings.get(k, 0) == 1
