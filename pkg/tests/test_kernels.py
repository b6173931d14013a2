import random

import pytest

from delsarte import _kernels, _speedups_py
from delsarte.lattice import _group_cells, homogenize, lattice_generators

_speedups = pytest.importorskip("delsarte._speedups")


def test_implementation_names():
    assert _speedups_py.implementation() == "python"
    assert _speedups.implementation() == "c"


def test_count_lambda_agreement_on_group():
    terms = ((0, 0, 0), (12, 3, 0), (0, 3, 0), (0, 0, 2))
    cells, modulus = _group_cells(lattice_generators(homogenize(terms)))
    assert _speedups.count_lambda(cells, modulus) == _speedups_py.count_lambda(cells, modulus)


def test_count_lambda_agreement_on_random_cells():
    rng = random.Random(5)
    for modulus in (2, 6, 12, 30, 60, 90):
        cells = [
            tuple(rng.randrange(0, modulus) for _ in range(4)) for _ in range(200)
        ]
        assert _speedups.count_lambda(cells, modulus) == _speedups_py.count_lambda(
            cells, modulus
        ), modulus


def test_census_agreement():
    for bound in (3, 4):
        assert _speedups.one_interior_polygons(bound) == _speedups_py.one_interior_polygons(
            bound
        ), bound


def test_census_kernel_bound_guard():
    with pytest.raises(ValueError):
        _speedups.one_interior_polygons(8)
