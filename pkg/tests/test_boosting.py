import itertools
from fractions import Fraction

import numpy as np
import pytest

from hamming_kfree.boosting import (
    boost,
    draw_translates,
    expected_size_exact,
    first_moment_bound,
    union_of_translates,
)
from hamming_kfree.cube import CubeParams
from hamming_kfree.exact import contains_ks
from hamming_kfree.pipeline import largest_fiber
from hamming_kfree.sets import CertifiedSet


def fiber(n):
    return largest_fiber(CubeParams(n, 2))


def test_first_moment_formula():
    assert first_moment_bound(32, 8, 3) == Fraction(2 * 32 * (1 - Fraction(32, 512)))
    assert first_moment_bound(32, 8, 3) == 60
    assert first_moment_bound(10, 6, 2) == 10


@pytest.mark.parametrize("n", [4, 5, 6])
def test_expected_size_by_enumeration_s3(n):
    I = fiber(n)
    base = I.as_array()
    total = sum(len(union_of_translates(base, [u])) for u in range(1 << n))
    exp = expected_size_exact(len(I), n, 3)
    assert Fraction(total, 1 << n) == exp.exact
    assert exp.exact >= exp.pairwise_lower == exp.closed_form_bound


@pytest.mark.parametrize("n", [4, 5])
def test_expected_size_by_enumeration_s4(n):
    I = fiber(n)
    base = I.as_array()
    total = sum(len(union_of_translates(base, [u, v])) for u, v in itertools.product(range(1 << n), repeat=2))
    exp = expected_size_exact(len(I), n, 4)
    assert Fraction(total, 1 << (2 * n)) == exp.exact
    assert exp.exact >= exp.pairwise_lower


def test_expected_size_for_arbitrary_sets():
    # the closed form only uses |I|, so it holds for any vertex set
    rng = np.random.default_rng(5)
    n = 6
    verts = rng.choice(1 << n, 11, replace=False)
    total = sum(len(union_of_translates(verts, [u])) for u in range(1 << n))
    assert Fraction(total, 1 << n) == expected_size_exact(11, n, 3).exact


def test_monte_carlo_mean_near_expectation():
    I = fiber(8)
    sizes = [len(union_of_translates(I.as_array(), draw_translates(8, 1, 11, k))) for k in range(2000)]
    exp = float(expected_size_exact(len(I), 8, 3).exact)
    assert abs(np.mean(sizes) - exp) < 4 * np.std(sizes) / np.sqrt(len(sizes)) + 0.5


@pytest.mark.parametrize("n,s", [(6, 3), (7, 4), (8, 3), (10, 3), (9, 5)])
def test_boost_is_ks_free(n, s):
    res = boost(fiber(n), s, trials=20, seed=1)
    assert contains_ks(res.set.vertices, n, 2, s) is None
    assert res.size == len(res.set)


def test_boost_contains_base_and_is_monotone_in_trials():
    I = fiber(8)
    prev = 0
    for trials in (1, 5, 25, 100):
        res = boost(I, 3, trials=trials, seed=0)
        assert set(I.vertices) <= set(res.set.vertices)
        assert res.size >= prev
        prev = res.size


def test_boost_deterministic():
    I = fiber(9)
    a, b = boost(I, 4, trials=30, seed=42), boost(I, 4, trials=30, seed=42)
    assert a.translates == b.translates and a.set.vertices == b.set.vertices
    assert draw_translates(20, 3, 0, 5) == draw_translates(20, 3, 0, 5)
    assert draw_translates(20, 3, 0, 5) != draw_translates(20, 3, 1, 5)


def test_trial_streams_do_not_depend_on_trial_count():
    I = fiber(8)
    short = boost(I, 3, trials=3, seed=9)
    long = boost(I, 3, trials=300, seed=9)
    assert long.size >= short.size


def test_boost_s2_is_identity():
    I = fiber(7)
    res = boost(I, 2)
    assert res.set is I and res.translates == ()


def test_boost_rejects_non_independent():
    bad = CertifiedSet(n=3, r=2, s=2, vertices=[0, 3], kind="unverified")
    with pytest.raises(ValueError):
        boost(bad, 3)
    with pytest.raises(ValueError):
        boost(fiber(4), 3, trials=0)


def test_translates_fit_cube():
    for n in (1, 5, 30):
        assert all(0 <= u < 1 << n for u in draw_translates(n, 50, 3, 0))
