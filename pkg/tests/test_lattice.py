from fractions import Fraction

import pytest

from delsarte import (
    enumerate_group,
    group_order,
    homogenize,
    in_lambda,
    lattice_generators,
    lefschetz_number,
)
from delsarte.errors import SingularMatrixError
from delsarte.exact import qz

F = Fraction

TERMS_1D_60 = ((0, 0, 0), (60, 3, 0), (0, 3, 0), (0, 0, 2))
TERMS_1A_6 = ((0, 0, 0), (6, 0, 0), (0, 3, 0), (0, 0, 2))


def test_homogenize_worked_example():
    matrix = homogenize(TERMS_1D_60)
    assert matrix.degree == 63
    assert set(matrix.rows) == {(0, 0, 63, 0), (3, 0, 0, 60), (3, 0, 60, 0), (0, 2, 61, 0)}


def test_homogenize_simple():
    matrix = homogenize(TERMS_1A_6)
    assert matrix.degree == 6
    assert set(matrix.rows) == {(0, 0, 6, 0), (0, 0, 0, 6), (3, 0, 3, 0), (0, 2, 4, 0)}
    assert matrix.determinant != 0


def test_homogenize_errors():
    with pytest.raises(SingularMatrixError):
        homogenize(((0, 0, 0), (0, 1, 0), (0, 2, 0), (0, 3, 0)))
    with pytest.raises(ValueError):
        homogenize(((0, 0, 0), (0, 0, 0), (0, 1, 0), (0, 2, 0)))
    with pytest.raises(ValueError):
        homogenize(((0, 0, 0), (0, 1, 0), (0, 2, 0)))


def test_generators_worked_example():
    gens = lattice_generators(homogenize(TERMS_1D_60))
    assert gens[2] == (F(0), F(59, 60), F(1, 60), F(0))
    assert gens[1] == (F(1, 2), F(59, 60), F(1, 60), F(1, 2))
    assert gens[0] == (F(2, 3), F(59, 60), F(7, 20), F(0))


def test_generators_integral_inverse():
    # X + Y + 1 + t has the identity as exponent matrix, so every
    # generator reduces to zero and the group is trivial.
    matrix = homogenize(((0, 1, 0), (0, 0, 1), (0, 0, 0), (1, 0, 0)))
    gens = lattice_generators(matrix)
    assert all(g == (0, 0, 0, 0) for g in gens)
    assert group_order(matrix) == 1
    assert lefschetz_number(matrix) == 0


def test_enumerate_group_sizes():
    gens = lattice_generators(homogenize(TERMS_1D_60))
    group = enumerate_group(gens)
    assert len(group.elements) == 360
    assert set(gens) <= group.elements
    assert (F(0), F(0), F(0), F(0)) in group.elements

    single = enumerate_group([(F(1, 2), F(1, 2), 0, 0)])
    assert single.elements == {
        (F(0), F(0), F(0), F(0)),
        (F(1, 2), F(1, 2), F(0), F(0)),
    }

    terms_1b_4 = ((0, 0, 0), (4, 1, 0), (0, 3, 0), (0, 0, 2))
    assert group_order(homogenize(terms_1b_4)) == 24


def test_in_lambda_zero_coordinate():
    assert not in_lambda((F(2, 3), F(0), F(1, 3), F(0)))


def test_in_lambda_always_two():
    # (1/2, <-i/n>, <i/n>, 1/2): every multiplier sums the lifts to 2
    for i in (1, 2, 7, 30, 59):
        vec = (F(1, 2), qz(-i, 60), qz(i, 60), F(1, 2))
        assert not in_lambda(vec)


def test_in_lambda_member():
    gens = lattice_generators(homogenize(TERMS_1D_60))
    v1 = tuple((a - b) % 1 for a, b in zip(gens[0], gens[2]))
    v2 = tuple((a - b) % 1 for a, b in zip(gens[1], gens[2]))
    total = tuple((a + b + c) % 1 for a, b, c in zip(v1, v2, gens[2]))
    assert total == (F(1, 6), F(59, 60), F(7, 20), F(1, 2))
    assert in_lambda(total)


def test_lefschetz_worked_example():
    assert lefschetz_number(homogenize(TERMS_1D_60)) == 98


def test_lefschetz_family_1a_360():
    terms = ((0, 0, 0), (360, 0, 0), (0, 3, 0), (0, 0, 2))
    assert lefschetz_number(homogenize(terms)) == 648


def test_lefschetz_small_inadmissible():
    # no closed form applies at n = 6; value frozen from the brute-force oracle
    terms = ((0, 0, 0), (6, 3, 0), (0, 3, 0), (0, 0, 2))
    assert lefschetz_number(homogenize(terms)) == 2


# Known reduced generating sets of the character groups of the 11 bundled
# representative families (coordinates follow the catalog term order).
# Both presentations must span the same subgroup of (Q/Z)^4.
def _reduced_generators(n):
    return {
        "1a": [(F(-1, 3), 0, F(1, 3), 0), (F(-1, 2), 0, 0, F(1, 2)), (F(1, n), F(-1, n), 0, 0)],
        "1b": [(F(-1, 2), 0, 0, F(1, 2)), (F(2, 3 * n), F(-1, n), F(1, 3 * n), 0)],
        "1c": [(F(-1, 2), 0, 0, F(1, 2)), (F(1, 3 * n), F(-1, n), F(2, 3 * n), 0)],
        "1d": [(F(-1, 3), 0, F(1, 3), 0), (F(-1, 2), 0, 0, F(1, 2)), (0, F(-1, n), F(1, n), 0)],
        "1g": [(F(-1, 3), F(1, 3), 0, 0), (F(-1, 2), 0, F(1, 2), 0), (0, 0, F(1, n), F(-1, n))],
        "2a": [(F(-3, 4), 0, F(1, 4), F(1, 2)), (F(1, n), F(-1, n), 0, 0)],
        "2b": [(0, F(-1, 2), 0, F(1, 2)), (F(-1, n), F(2, n), F(-1, n), 0)],
        "2e": [(F(1, 4), F(1, 4), F(1, 2), 0), (0, 0, F(1, n), F(-1, n))],
        "3d": [(F(1, 3 * n), F(-1, n), F(1, 3 * n), F(1, 3 * n))],
        "11": [(0, F(1, 2), F(1, 2), 0), (F(-1, n), F(-3, n), F(1, n), F(3, n))],
        "12": [(0, 0, F(1, 2), F(1, 2)), (0, F(1, 2), 0, F(1, 2)), (F(-1, n), F(1, n), F(1, n), F(-1, n))],
    }


def test_reduced_generator_presentations(catalog):
    n = 12
    for rep_id, reduced in _reduced_generators(n).items():
        matrix = homogenize(catalog.family_terms(rep_id, n))
        from_matrix = enumerate_group(lattice_generators(matrix))
        from_reduced = enumerate_group([tuple(qz(f) for f in g) for g in reduced])
        assert from_matrix.elements == from_reduced.elements, rep_id


def test_in_lambda_depends_on_coordinate_multiset_only():
    import itertools
    import random

    rng = random.Random(3)
    for _ in range(30):
        vec = tuple(qz(rng.randrange(0, 12), rng.randrange(1, 13)) for _ in range(4))
        verdicts = {in_lambda(perm) for perm in itertools.permutations(vec)}
        assert len(verdicts) == 1, vec


def test_workers_do_not_change_result(monkeypatch):
    matrix = homogenize(TERMS_1D_60)
    baseline = lefschetz_number(matrix)
    for workers in ("2", "3", "7"):
        monkeypatch.setenv("DELSARTE_WORKERS", workers)
        assert lefschetz_number(matrix) == baseline
