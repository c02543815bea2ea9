"""Laplacian construction, exact inertia, eigenvalues, tree sum, limits."""

import random
from fractions import Fraction

import numpy as np
import pytest

from signedlap import (
    InputError,
    SpectralIndex,
    crossing_count,
    crossing_polynomial,
    eigenvalues,
    index_limits,
    inertia,
    laplacian,
    ray_crossings,
    spanning_trees,
    tree_sum,
)
from signedlap.spectral import LaplacianMatrix

from conftest import (
    k4_disjoint,
    k4_shared,
    kn_with_reds,
    random_connected_graph,
    swg,
    triangle_one_red,
)


def test_laplacian_single_black_edge():
    g = swg(2, [(0, 1, 2)])
    lap = laplacian(g)
    assert lap.rows == ((Fraction(-2), Fraction(2)), (Fraction(2), Fraction(-2)))


def test_laplacian_triangle_unit():
    g = swg(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    lap = laplacian(g)
    for i in range(3):
        assert lap.rows[i][i] == -2
        for j in range(3):
            if i != j:
                assert lap.rows[i][j] == 1


def test_laplacian_red_substitution_keeps_zero_row_sums():
    g = triangle_one_red()
    lap = laplacian(g, [Fraction(1, 2)])
    assert lap.rows[1][2] == Fraction(-1, 2)
    for row in lap.rows:
        assert sum(row) == 0


def test_laplacian_t_validation():
    g = triangle_one_red()
    with pytest.raises(InputError):
        laplacian(g, [1, 2])
    with pytest.raises(InputError):
        laplacian(g, [Fraction(-1, 2)])


def test_inertia_diagonal():
    m = [[-1, 0, 0], [0, 0, 0], [0, 0, 2]]
    assert inertia(m) == SpectralIndex(1, 1, 1)


def test_inertia_triangle():
    g = swg(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert inertia(laplacian(g)) == SpectralIndex(2, 1, 0)


def test_inertia_zero_diagonal_block():
    # [[0,b],[b,0]] has eigenvalues +-b
    assert inertia([[0, 3], [3, 0]]) == SpectralIndex(1, 0, 1)
    assert inertia([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == SpectralIndex(1, 1, 1)


def test_inertia_k4_shared_large_t():
    g = k4_shared()
    # t = (3,3) sits exactly on the upper diagonal crossing of 3t^2-10t+3
    assert inertia(laplacian(g, [3, 3])) == SpectralIndex(1, 2, 1)
    # beyond both crossings the large-t limit index holds
    assert inertia(laplacian(g, [4, 4])) == SpectralIndex(1, 1, 2)


def test_inertia_rejects_asymmetric():
    with pytest.raises(InputError):
        inertia([[0, 1], [2, 0]])


def test_inertia_matches_float_signs():
    rng = random.Random(11)
    for _ in range(50):
        g = random_connected_graph(rng, n_min=3, n_max=7)
        t = [Fraction(rng.randint(0, 40), rng.randint(1, 8)) for _ in range(g.red_count)]
        lap = laplacian(g, t)
        exact = inertia(lap)
        ev = eigenvalues(lap)
        scale = max(1.0, float(np.abs(ev).max()))
        tol = 1e-6 * scale
        if np.all(np.abs(ev) > tol) or exact.n_zero == np.sum(np.abs(ev) <= tol):
            n_minus = int(np.sum(ev < -tol))
            n_plus = int(np.sum(ev > tol))
            n_zero = len(ev) - n_minus - n_plus
            assert (n_minus, n_zero, n_plus) == tuple(exact)


def test_inertia_fuzz_general_symmetric():
    # arbitrary symmetric rational matrices, not just Laplacians; compare to
    # float eigenvalue signs whenever they are safely separated from zero
    rng = random.Random(97)
    for _ in range(150):
        n = rng.randint(1, 7)
        a = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                if rng.random() < 0.35:
                    x = Fraction(0)  # plant zero diagonals and blocks
                a[i][j] = a[j][i] = x
        exact = inertia(a)
        assert exact.n_minus + exact.n_zero + exact.n_plus == n
        ev = eigenvalues([[float(x) for x in row] for row in a])
        scale = max(1.0, float(np.abs(ev).max()))
        tol = 1e-9 * scale
        n_minus = int(np.sum(ev < -tol))
        n_plus = int(np.sum(ev > tol))
        n_zero = n - n_minus - n_plus
        if np.all((np.abs(ev) > 1e-6 * scale) | (np.abs(ev) <= tol)):
            assert (n_minus, n_zero, n_plus) == tuple(exact)


def test_eigenvalues_examples():
    assert np.allclose(eigenvalues([[-2, 2], [2, -2]]), [-4.0, 0.0])
    g = swg(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert np.allclose(eigenvalues(laplacian(g)), [-3.0, -3.0, 0.0])
    assert np.allclose(eigenvalues(np.zeros((3, 3))), 0.0)


def test_eigenvalue_tolerance_contract():
    # 2x2 closed form: eigenvalues of [[-a,a],[a,-a]] are 0 and -2a
    rng = random.Random(3)
    for _ in range(20):
        a = rng.uniform(0.1, 100.0)
        ev = eigenvalues([[-a, a], [a, -a]])
        norm = max(1.0, 2 * a)
        assert abs(ev[0] - (-2 * a)) <= 1e-9 * norm
        assert abs(ev[1]) <= 1e-9 * norm


def test_tree_sum_triangle():
    g = swg(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert tree_sum(g) == 3


def test_tree_sum_one_red_linear():
    g = triangle_one_red()
    for t in (Fraction(0), Fraction(1, 2), Fraction(7, 3)):
        assert tree_sum(g, [t]) == 1 - 2 * t


def test_tree_sum_disconnected_zero():
    g = swg(4, [(0, 1, 1), (2, 3, 1)])
    assert tree_sum(g) == 0


def test_tree_sum_equals_oracle_sum():
    rng = random.Random(13)
    for _ in range(60):
        g = random_connected_graph(rng, n_min=3, n_max=7, extra_max=2)
        assert tree_sum(g) == sum(t.pi for t in spanning_trees(g))


def test_tree_sum_nonzero_iff_simple_kernel():
    rng = random.Random(17)
    for _ in range(50):
        g = random_connected_graph(rng, n_min=3, n_max=6)
        t = [Fraction(rng.randint(0, 30), rng.randint(1, 6)) for _ in range(g.red_count)]
        m = tree_sum(g, t)
        idx = inertia(laplacian(g, t))
        assert (m != 0) == (idx.n_zero == 1)


def test_laplacian_row_sums_always_zero():
    rng = random.Random(19)
    for _ in range(30):
        g = random_connected_graph(rng, n_min=2, n_max=7)
        lap = laplacian(g)
        assert all(sum(row) == 0 for row in lap.rows)


def test_index_limits_examples():
    g = swg(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])  # all-black path
    small, large = index_limits(g)
    assert small == SpectralIndex(3, 1, 0)
    assert large == SpectralIndex(3, 1, 0)  # no red edges: both limits coincide

    g = k4_disjoint()
    small, large = index_limits(g)
    assert small == SpectralIndex(3, 1, 0)
    assert large.n_plus == 4 - 2 == 2

    with pytest.raises(InputError):
        index_limits(swg(4, [(0, 1, 1), (2, 3, 1)]))


def test_index_limits_dynamic_witnesses():
    # pick exact witnesses below the first / above the last ray crossing and
    # confirm the symbolic limits with exact inertia
    rng = random.Random(23)
    checked = 0
    for _ in range(40):
        g = random_connected_graph(rng, n_min=3, n_max=7, red_choices=(1, 2))
        if g.red_count == 0:
            continue
        small, large = index_limits(g)
        p = crossing_polynomial(g)
        alpha = [Fraction(1)] * g.red_count
        roots = ray_crossings(p, alpha).roots
        lo = Fraction(1, 100) if not roots else (roots[0].lo) / 2
        hi = Fraction(100) if not roots else (roots[-1].hi) * 2
        if lo == 0:
            continue
        assert inertia(laplacian(g, [lo] * g.red_count)) == small
        assert inertia(laplacian(g, [hi] * g.red_count)) == large
        checked += 1
    assert checked >= 30


def test_crossing_count_examples():
    assert crossing_count(k4_shared()) == 4 - 1 - 2 + 1 == 2
    assert crossing_count(k4_disjoint()) == 2
    g = swg(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)])
    assert crossing_count(g) == 5 - 1 - 5 + 1 == 0


def test_monotonicity_in_each_red_magnitude():
    rng = random.Random(29)
    for _ in range(60):
        g = random_connected_graph(rng, n_min=3, n_max=7)
        r = g.red_count
        if r == 0:
            continue
        t = [Fraction(rng.randint(0, 20), rng.randint(1, 6)) for _ in range(r)]
        k = rng.randrange(r)
        delta = Fraction(rng.randint(1, 10), rng.randint(1, 4))
        t2 = list(t)
        t2[k] = t[k] + delta
        ev1 = eigenvalues(laplacian(g, t))
        ev2 = eigenvalues(laplacian(g, t2))
        assert np.all(ev2 >= ev1 - 1e-9)


def test_laplacian_matrix_requires_square_symmetric():
    with pytest.raises(InputError):
        LaplacianMatrix([[1, 2]])
    with pytest.raises(InputError):
        LaplacianMatrix([[1, 2], [3, 4]])
