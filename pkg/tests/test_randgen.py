import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.exceptions import ConfigurationError
from core.models import induced_partition, is_coarser
from core.services.algebra import are_indiscernible
from core.services.entropy import mutual_information
from core.services.metric import distance_matrix
from core.services.randgen import (
    CorrelationMode,
    GenConfig,
    SplitMix64,
    designated_pair,
    gen_dataset,
    gen_population,
    gen_seeds,
    sampling_plan,
    tuples_for,
)
from core.settings import Config


def test_splitmix64_reference_outputs():
    rng = SplitMix64(0)

    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


@given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(1, 1000))
def test_bounded_draws_stay_in_range(seed, bound):
    rng = SplitMix64(seed)

    assert all(0 <= rng.below(bound) < bound for _ in range(20))


def test_shuffle_is_a_permutation():
    assert sorted(SplitMix64(9).shuffled(range(50))) == list(range(50))


def test_same_seed_same_dataset():
    cfg = GenConfig(seed=42)

    assert dict(gen_dataset(cfg, 4).columns) == dict(gen_dataset(cfg, 4).columns)
    assert gen_seeds(7, 5) == gen_seeds(7, 5)
    assert len(set(gen_seeds(7, 100))) == 100


def test_generated_shapes_respect_the_config():
    for _, dataset in gen_population(seed=1, count=200, columns=5):
        assert 2 <= dataset.row_count <= 12
        assert dataset.names == ("c0", "c1", "c2", "c3", "c4")
        assert all(
            1 <= len(variable.alphabet) <= 4 for variable in dataset.columns.values()
        )


def test_refined_mode_coarsens_the_designated_pair():
    coarse, fine = designated_pair()
    for _, dataset in gen_population(
        seed=3, count=300, columns=3, mode=CorrelationMode.REFINED
    ):
        assert is_coarser(
            induced_partition(dataset.column(coarse), dataset),
            induced_partition(dataset.column(fine), dataset),
        )


def test_independent_mode_has_no_shared_information():
    for _, dataset in gen_population(
        seed=4, count=200, columns=3, mode=CorrelationMode.INDEPENDENT
    ):
        partitions = [
            induced_partition(variable, dataset)
            for variable in dataset.columns.values()
        ]
        for first in partitions:
            for second in partitions:
                if first is not second:
                    assert mutual_information(first, second) == pytest.approx(
                        0.0, abs=1e-12
                    )


def test_population_mixes_modes():
    independent = refined = 0
    for _, dataset in gen_population(seed=6, count=300, columns=3):
        c0, c1, c2 = (
            induced_partition(variable, dataset)
            for variable in dataset.columns.values()
        )
        if is_coarser(c1, c0) and is_coarser(c2, c1):
            refined += 1
        if mutual_information(c0, c1) <= 1e-12:
            independent += 1

    assert refined > 0
    assert independent > 0


def test_population_covers_every_kind_of_pair():
    kinds = Counter()
    for _, dataset in gen_population(seed=11, count=1000, columns=3):
        for a, b in itertools.combinations(dataset.names, 2):
            x, y = dataset.column(a), dataset.column(b)
            if x.is_constant != y.is_constant:
                kinds["constant against nonconstant"] += 1
            if x.is_constant or y.is_constant:
                continue

            px, py = induced_partition(x, dataset), induced_partition(y, dataset)
            if mutual_information(px, py) <= 1e-12:
                kinds["independent"] += 1
            if is_coarser(px, py) or is_coarser(py, px):
                kinds["fully correlated"] += 1
            if are_indiscernible(x, y, dataset) and x.labels != y.labels:
                kinds["indiscernible relabeling"] += 1

    assert set(kinds) == {
        "constant against nonconstant",
        "independent",
        "fully correlated",
        "indiscernible relabeling",
    }
    assert min(kinds.values()) >= 1


def test_single_symbol_alphabets_give_zero_distances():
    for _, dataset in gen_population(
        seed=13, count=30, columns=4, alphabet_size=(1, 1)
    ):
        assert all(variable.is_constant for variable in dataset.columns.values())
        assert np.all(distance_matrix(dataset).values == 0.0)


def test_independence_that_cannot_fit_is_refused():
    cfg = GenConfig(
        seed=1, alphabet_size=(2, 3), correlation_mode=CorrelationMode.INDEPENDENT
    )

    with pytest.raises(ConfigurationError):
        gen_dataset(cfg, 4)
    # the arbitrary mix falls back to unconstrained draws instead
    population = gen_population(seed=2, count=50, columns=4, alphabet_size=(2, 3))
    assert len(list(population)) == 50


@pytest.mark.parametrize(
    "kwargs",
    [
        {"rows": (0, 4)},
        {"rows": (5, 4)},
        {"alphabet_size": (2, 1)},
        {"alphabet_size": (1, 40)},
        {"correlation_mode": "sideways"},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises((ConfigurationError, ValueError)):
        GenConfig(seed=1, **kwargs)


def test_tuples_exhaustive_and_sampled():
    pool = ["a", "b", "c"]

    assert len(list(tuples_for(pool, 3, True, 0, 0))) == 27
    sampled = list(tuples_for(pool, 4, False, 10, 5))
    assert len(sampled) == 10
    assert sampled == list(tuples_for(pool, 4, False, 10, 5))


def test_sampling_plan():
    assert sampling_plan(6, None, None) == (
        True,
        Config.DEFAULT_SAMPLES,
        Config.DEFAULT_SEED,
    )
    assert sampling_plan(Config.EXHAUSTIVE_COLUMN_LIMIT + 1, None, 3)[0] is False
    assert sampling_plan(6, 25, 3) == (False, 25, 3)
    with pytest.raises(ConfigurationError):
        sampling_plan(6, 0, None)
    with pytest.raises(ConfigurationError):
        list(gen_population(seed=1, count=0, columns=2))
