import itertools
import random
import pytest

from hamming_kfree.bch import (
    build_fiber_coloring,
    coordinate_keys,
    embed,
    field_degree,
    fiber_distance_histogram,
    independent_set_from_fiber,
    kernel_basis,
    kernel_min_weight,
    pack,
    power_sum,
    power_sums,
)
from hamming_kfree.cube import CubeParams, from_bitstring
from hamming_kfree.field import FieldTable


def naive_min_weight(field, t, length):
    """Scan every vector on ``length`` coordinates through the scalar power sums."""
    N = field.order
    best = None
    for y in range(1, 1 << length):
        if power_sums(embed(y, length, N) if length < N else embed(y, N, N), field, t) == (0,) * t:
            w = bin(y).count("1")
            best = w if best is None else min(best, w)
    return best


def proper_by_pairs(coloring):
    n, r = coloring.n, coloring.r
    colors = coloring.colors
    for x in range(1 << n):
        for y in range(x + 1, 1 << n):
            if bin(x ^ y).count("1") == r and colors[x] == colors[y]:
                return False
    return True


def test_power_sum_examples():
    f4, f8 = FieldTable(2), FieldTable(3)
    assert power_sums(0, f8, 2) == (0, 0)
    assert power_sums(from_bitstring("1100"), f4, 1) == (1,)
    for i in range(1, 9):
        g = f8.gamma(i)
        assert power_sums(1 << (i - 1), f8, 2) == (g, f8.pow(g, 3))
    with pytest.raises(ValueError):
        power_sums(1 << 8, f8, 1)


@pytest.mark.parametrize("m", [2, 3])
def test_phi_linear_exhaustive(m):
    f = FieldTable(m)
    N = f.order
    for x, y in itertools.product(range(1 << N), repeat=2):
        px, py = power_sums(x, f, 2), power_sums(y, f, 2)
        assert power_sums(x ^ y, f, 2) == tuple(a ^ b for a, b in zip(px, py))


def test_phi_linear_random_n16():
    f = FieldTable(4)
    rng = random.Random(1)
    for _ in range(10**4 // 20):
        x, y = rng.getrandbits(16), rng.getrandbits(16)
        px, py = power_sums(x, f, 2), power_sums(y, f, 2)
        assert power_sums(x ^ y, f, 2) == tuple(a ^ b for a, b in zip(px, py))


@pytest.mark.parametrize("m", [3, 4])
def test_doubling_identity(m):
    f = FieldTable(m)
    rng = random.Random(m)
    for _ in range(200):
        y = rng.getrandbits(f.order)
        for j in range(1, 5):
            assert power_sum(y, f, 2 * j) == f.pow(power_sum(y, f, j), 2)


def test_field_degree():
    assert [field_degree(n) for n in (1, 2, 3, 4, 5, 8, 9, 16, 17)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]


def test_embedding_uses_nonzero_elements_first():
    N = 8
    assert embed(1, 7, N) == 0b10  # coordinate 1 -> gamma_2 = 1
    assert embed(1 << 7, 8, N) == 1  # coordinate 8 -> gamma_1 = 0 when n = N
    assert embed(0b1111111, 7, N) == 0b11111110


def test_coloring_matches_scalar_power_sums(backend):
    for n, t in [(5, 1), (7, 2), (8, 2), (9, 2)]:
        col = build_fiber_coloring(CubeParams(n, 2 * t))
        f = FieldTable(field_degree(n))
        keys = col.class_keys[col.colors]
        for x in range(1 << n):
            assert keys[x] == pack(power_sums(embed(x, n, f.order), f, t), f.m)


@pytest.mark.parametrize(
    "n,t,classes,size", [(7, 1, 8, 16), (8, 1, 8, 32), (15, 1, 16, 2048)]
)
def test_fiber_coloring_examples(backend, n, t, classes, size):
    col = build_fiber_coloring(CubeParams(n, 2 * t))
    assert col.num_classes == classes
    assert col.size_spectrum() == {size: classes}


def test_n4_t2_class_count():
    col = build_fiber_coloring(CubeParams(4, 4))
    assert col.num_classes <= 2 ** (2 * 2)
    assert col.color_bound == 16


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("t", [1, 2])
def test_properness_full_scan(backend, n, t):
    col = build_fiber_coloring(CubeParams(n, 2 * t))
    assert col.monochromatic_edges() == 0
    assert col.num_classes <= 2 ** (t * field_degree(n))


@pytest.mark.parametrize("n,t", [(5, 1), (6, 2), (7, 1), (8, 2)])
def test_properness_pair_oracle(n, t):
    assert proper_by_pairs(build_fiber_coloring(CubeParams(n, 2 * t)))


@pytest.mark.parametrize("n", [3, 4, 7, 8, 15, 16])
def test_equal_fibers(n):
    col = build_fiber_coloring(CubeParams(n, 2))
    assert len(col.size_spectrum()) == 1


@pytest.mark.parametrize("n,t", [(5, 1), (6, 1), (10, 2), (12, 1), (11, 2)])
def test_class_count_is_index_of_kernel(n, t):
    col = build_fiber_coloring(CubeParams(n, 2 * t))
    f = FieldTable(field_degree(n))
    kernel_dim = len(kernel_basis(coordinate_keys(f, t, n)))
    assert col.num_classes == 2 ** (n - kernel_dim)
    assert set(col.size_spectrum()) == {2**kernel_dim}


def test_kernel_min_weight_values(backend):
    assert kernel_min_weight(FieldTable(3), 1) == 3
    assert kernel_min_weight(FieldTable(4), 2) >= 5
    assert kernel_min_weight(FieldTable(4), 2) == 5
    assert kernel_min_weight(FieldTable(4), 3) == 7


def test_kernel_min_weight_against_scan():
    f = FieldTable(3)
    assert kernel_min_weight(f, 1) == naive_min_weight(f, 1, 7)
    f4 = FieldTable(4)
    assert kernel_min_weight(f4, 2) == naive_min_weight(f4, 2, 15)


def test_zero_element_coordinate_is_a_weight_one_kernel_word():
    # with every field element in use, gamma = 0 sits in the kernel by itself
    f = FieldTable(3)
    assert kernel_min_weight(f, 1, length=8) == 1
    assert naive_min_weight(f, 1, 8) == 1
    # but no kernel word has a weight in 2..2t, which is what properness needs
    basis = kernel_basis(coordinate_keys(f, 1, 8))
    weights = set()
    for combo in range(1, 1 << len(basis)):
        y = 0
        for i, v in enumerate(basis):
            if combo >> i & 1:
                y ^= v
        weights.add(bin(y).count("1"))
    assert not weights & {2}


def test_fiber_as_independent_set():
    col = build_fiber_coloring(CubeParams(7, 2))
    ind = independent_set_from_fiber(col, 0)
    assert len(ind) == 16 and ind.verified and ind.kind == "independent"
    verts = ind.vertices
    assert min(bin(a ^ b).count("1") for a, b in itertools.combinations(verts, 2)) >= 3
    hist = fiber_distance_histogram(col, 0)
    assert hist[:3].sum() == 0


def test_largest_fiber_n15(backend):
    col = build_fiber_coloring(CubeParams(15, 2))
    big = independent_set_from_fiber(col, col.largest_classes(1)[0])
    assert len(big) == 2**15 // 16


def test_singleton_fiber():
    col = build_fiber_coloring(CubeParams(2, 2))
    # n = 2 uses GF(2): coordinate 2 is the zero element, so classes are {0,2} and {1,3}
    for c in range(col.num_classes):
        assert independent_set_from_fiber(col, c).verified
    with pytest.raises(KeyError):
        independent_set_from_fiber(col, 99)
