import math

import numpy as np
import pytest
from scipy.spatial.distance import pdist

from pruneclust.core.parallel import sub_seed
from pruneclust.core.selection import choose_k, gap_curve, log_dispersions, reference_sample
from pruneclust.core.simulate import gen_clustered
from pruneclust.errors import DegenerateDispersionError, DomainError
from pruneclust.schemas.pruning import SizePolicy
from pruneclust.schemas.selection import GapCurve, SelectionRule


def _curve(gap, se):
    k_values = list(range(1, len(gap) + 1))
    zeros = [0.0] * len(gap)
    return GapCurve(k_values=k_values, log_w=zeros, elog_w_ref=zeros, gap=gap, se=se, b=10, seed=0)


def test_reference_sample_stays_in_feature_ranges(random_data):
    data = random_data(1, 50, 3)
    reference = reference_sample(data, 99)
    assert reference.values.shape == (50, 3)
    assert np.all(reference.values >= data.values.min(axis=0))
    assert np.all(reference.values <= data.values.max(axis=0))
    np.testing.assert_array_equal(reference.values, reference_sample(data, 99).values)


def test_log_dispersions_five_points(five_points):
    assert log_dispersions(five_points, [1, 2, 3]) == pytest.approx([math.log(666), math.log(23), math.log(10)])


def test_log_dispersions_skip_policy(non_nested_points):
    values = log_dispersions(non_nested_points, [2, 3, 4], SizePolicy.SKIP)
    assert values[2] is None
    assert values[1] == pytest.approx(math.log(1536))


def test_zero_dispersion_is_an_error(five_points):
    with pytest.raises(DegenerateDispersionError) as excinfo:
        log_dispersions(five_points, [5])
    assert excinfo.value.k == 5


def test_gap_curve_is_seeded(four_blobs):
    data, _ = four_blobs(0)
    first = gap_curve(data, 6, 5, rng_seed=3, threads=1)
    second = gap_curve(data, 6, 5, rng_seed=3, threads=1)
    assert first == second
    assert first.k_values == [1, 2, 3, 4, 5, 6]
    assert all(s is not None and s >= 0 for s in first.se)


@pytest.mark.parametrize("seed", range(5))
def test_gap_finds_four_separated_clusters(four_blobs, seed):
    data, _ = four_blobs(seed)
    curve = gap_curve(data, 8, 10, rng_seed=seed, threads=1)
    best = choose_k(curve, SelectionRule.ARGMAX_GAP)
    assert best == 4
    assert choose_k(curve, SelectionRule.FIRST_SE) <= best


def test_choose_k_rules():
    curve = _curve([0.1, 0.5, 0.55, 0.3], [0.1, 0.1, 0.1, 0.1])
    assert choose_k(curve, SelectionRule.ARGMAX_GAP) == 3
    assert choose_k(curve, SelectionRule.FIRST_SE) == 2


def test_choose_k_ignores_skipped_sizes():
    curve = _curve([0.1, None, 0.4], [0.1, None, 0.1])
    assert choose_k(curve) == 3


def test_gap_curve_argument_checks(five_points):
    with pytest.raises(DomainError):
        gap_curve(five_points, 1, 5, rng_seed=0)
    with pytest.raises(DomainError):
        gap_curve(five_points, 3, 0, rng_seed=0)


@pytest.mark.slow
@pytest.mark.xfail(
    reason="gen_clustered puts the four centres one unit apart per coordinate; average linkage recovers them "
    "in about half of the replicates, see scripts/gap_calibration.py",
    strict=False,
)
def test_gap_recovers_four_clusters_in_most_replicates():
    rng = np.random.default_rng(20)
    hits = 0
    for replicate in range(20):
        n, p = int(rng.integers(20, 31)), int(rng.integers(1, 31))
        data, _ = gen_clustered(n, p, 4, int(rng.integers(0, 2**31)))
        curve = gap_curve(data, 8, 10, rng_seed=replicate)
        hits += choose_k(curve) == 4
    assert hits >= 16


def test_single_cluster_term_is_the_root_loss(random_data):
    data = random_data(8, 12, 2)
    curve = gap_curve(data, 4, 1, rng_seed=6, threads=1)
    reference = reference_sample(data, sub_seed(6, 0))
    assert curve.log_w[0] == pytest.approx(math.log(pdist(data.values, metric="sqeuclidean").sum()))
    assert curve.elog_w_ref[0] == pytest.approx(math.log(pdist(reference.values, metric="sqeuclidean").sum()))


def test_one_reference_gives_its_own_curve_and_zero_se(random_data):
    data = random_data(9, 15, 3)
    curve = gap_curve(data, 5, 1, rng_seed=4, threads=1)
    assert curve.elog_w_ref == log_dispersions(reference_sample(data, sub_seed(4, 0)), [1, 2, 3, 4, 5])
    assert curve.se == [0.0] * 5
    assert curve.gap == pytest.approx([ref - obs for ref, obs in zip(curve.elog_w_ref, curve.log_w)])


def test_dispersion_falls_along_the_sequence(random_data):
    for seed in range(10):
        values = log_dispersions(random_data(seed, 20, 2), list(range(1, 11)))
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))
