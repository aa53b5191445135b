"""One test per acceptance criterion; the conftest summary prints a PASS/FAIL line for each."""

import time
from fractions import Fraction
from math import ceil, comb, log2

import pytest

from hamming_kfree.bch import build_fiber_coloring, kernel_min_weight
from hamming_kfree.boosting import boost
from hamming_kfree.bounds import frankl_wilson_bound, prime_power_upper_bound
from hamming_kfree.cli import main
from hamming_kfree.cube import CubeParams, subset_masks
from hamming_kfree.exact import (
    contains_ks,
    cube_graph,
    m_s_exact,
    max_ks_free,
    max_ks_free_graph,
    transfer_bounds,
    transfer_upper_bound,
)
from hamming_kfree.field import FieldTable, next_prime
from hamming_kfree.kernels import count_set_edges
from hamming_kfree.layer import build_cube_coloring, verify_layer_class_distance
from hamming_kfree.pipeline import ENGINES, construct, largest_fiber

# number of H_2(15) edges inside the union of the two largest fibers, derived as
# 2048 vertices * 7 field-element pairs summing to the class difference
EDGES_N15 = 14336


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion_1
@pytest.mark.parametrize("n,t", [(7, 1), (8, 1), (15, 1), (16, 1), (8, 2)])
def test_criterion_01_fiber_coloring_proper(n, t):
    with Timer() as clock:
        col = build_fiber_coloring(CubeParams(n, 2 * t))
        assert col.num_classes <= 2 ** (t * ceil(log2(n)))
        assert col.monochromatic_edges() == 0
    assert clock.elapsed <= 60


@pytest.mark.criterion_2
def test_criterion_02_kernel_distance():
    with Timer() as clock:
        assert kernel_min_weight(FieldTable(3), 1) == 3
        assert kernel_min_weight(FieldTable(4), 2) >= 5
    assert clock.elapsed <= 10


@pytest.mark.criterion_3
@pytest.mark.parametrize("n", [7, 8, 15, 16])
def test_criterion_03_equal_class_sizes(n):
    spectrum = build_fiber_coloring(CubeParams(n, 2)).size_spectrum()
    assert len(spectrum) == 1
    if n == 7:
        assert spectrum == {16: 8}


@pytest.mark.criterion_4
def test_criterion_04_layer_fingerprint_distance():
    with Timer() as clock:
        for n in range(1, 11):
            q = next_prime(n)
            for k in range(n + 1):
                for t in (1, 2):
                    assert verify_layer_class_distance(n, k, t, q), (n, k, t, q)
    assert clock.elapsed <= 120


@pytest.mark.criterion_5
def test_criterion_05_layer_coloring_proper():
    for n in range(1, 11):
        for t in (1, 2):
            col = build_cube_coloring(n, t)
            q = next_prime(n)
            assert col.monochromatic_edges() == 0, (n, t)
            assert col.num_classes <= (t + 1) * q**t


@pytest.mark.criterion_6
def test_criterion_06_exact_oracles():
    with Timer() as clock:
        assert max_ks_free(3, 2, 2).value == 2
        assert max_ks_free(3, 2, 3).value == 4
        for s in range(2, 6):
            for n in range(s - 1, 11):
                assert m_s_exact(n, 1, 0, s).value == s - 1
        for n in range(1, 7):
            for r in range(1, n + 1, 2):
                assert max_ks_free(n, r, 3).value == 2**n
                # same answer from the search itself, without the bipartite shortcut
                assert max_ks_free_graph(cube_graph(n, r), 3).value == 2**n
    assert clock.elapsed <= 60


@pytest.mark.criterion_7
@pytest.mark.parametrize("s", [2, 3])
@pytest.mark.parametrize("n", range(2, 9))
def test_criterion_07_sandwich(n, s):
    params = CubeParams(n, 2, s)
    exact = max_ks_free(n, 2, s)
    assert exact.exact
    upper = min(transfer_bounds(n, 1, s).values())
    for engine in ENGINES:
        assert len(construct(engine, params, seed=0, trials=50)) <= exact.value, engine
    assert exact.value <= upper


@pytest.mark.criterion_8
def test_criterion_08_leading_constant_n15():
    S = construct("bch", CubeParams(15, 2, 3))
    target = Fraction(85, 100) * 2 * Fraction(2**15, 15)
    assert len(S) >= target
    assert transfer_upper_bound(15, 1, 1, 3, m_s_exact(15, 1, 0, 3).value) == Fraction(2 * 2**15, 15)


@pytest.mark.criterion_9
def test_criterion_09_triangle_free_with_edges():
    S = construct("bch", CubeParams(15, 2, 3))
    assert contains_ks(S.vertices, 15, 2, 3) is None
    edges = count_set_edges(S.as_array(), 15, subset_masks(15, 2))
    assert edges >= 1000
    assert edges == EDGES_N15


@pytest.mark.criterion_10
def test_criterion_10_boosting():
    I = largest_fiber(CubeParams(8, 2))
    res = boost(I, 3, trials=1000, seed=0)
    size = len(I)
    floor_bound = (2 * size * (2**9 - size)) // 2**9
    assert floor_bound == 60
    assert res.size >= floor_bound
    assert contains_ks(res.set.vertices, 8, 2, 3) is None


@pytest.mark.criterion_11
def test_criterion_11_bound_evaluators():
    assert prime_power_upper_bound(20, 2, 0) == Fraction(6 * 2**20, 400)
    for n in range(3, 9):
        assert m_s_exact(n, 3, 1, 2).value <= frankl_wilson_bound(n, 2, 3) == comb(n, 1)


COMMANDS = [
    ["construct", "--n", "10", "--r", "2", "--s", "3", "--engine", "layer"],
    ["construct", "--n", "9", "--r", "2", "--s", "3", "--engine", "boost", "--trials", "50", "--seed", "3"],
    ["exact", "alpha", "--n", "5", "--r", "2", "--s", "3"],
    ["exact", "ms", "--n", "6", "--k", "2", "--l", "1", "--s", "3"],
    ["bounds", "--n", "7", "--r", "2", "--s", "3", "--exact"],
    ["report", "--n-range", "3..7", "--r", "2", "--s", "2", "--format", "csv"],
]


@pytest.mark.criterion_12
@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_criterion_12_deterministic_commands(argv, capsys, tmp_path):
    outputs = []
    for run in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


@pytest.mark.criterion_12
def test_criterion_12_deterministic_files(capsys, tmp_path):
    blobs = []
    for run in range(2):
        d = tmp_path / str(run)
        base = d / "i.hex"
        assert main(["construct", "--n", "8", "--r", "2", "--out", str(base), "--coloring", str(d / "c.csv")]) == 0
        assert main(["verify", "--input", str(base), "--out", str(d / "v.json")]) == 0
        argv = ["boost", "--input", str(base), "--s", "4", "--trials", "100", "--out", str(d / "b.hex")]
        assert main(argv + ["--json", str(d / "b.json")]) == 0
        blobs.append([(d / f).read_bytes() for f in ("i.hex", "c.csv", "v.json", "b.hex", "b.json")])
    capsys.readouterr()
    assert blobs[0] == blobs[1]
