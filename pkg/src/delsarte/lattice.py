"""Exponent matrices of four-term polynomials and their character groups.

A four-term polynomial sum of t^a X^b Y^c homogenizes to a surface in P^3
whose exponents form a 4x4 matrix A (columns X, Y, Z, T; every row sums
to the degree). When A is nonsingular, the rows (1,0,0,-1)A^-1,
(0,1,0,-1)A^-1 and (0,0,1,-1)A^-1 generate a finite subgroup L of
(Q/Z)^4. The Lefschetz number of the surface is the number of elements
of L with all four coordinates nonzero for which some integer t,
preserving every coordinate order, makes the fractional lifts of the
scaled coordinates sum to something other than 2.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import _kernels
from .errors import SingularMatrixError
from .exact import QZVec4, mat4_det, mat4_inverse, qzvec, row_vec_apply

#: One exponent triple (t_exp, x_exp, y_exp).
Term = tuple[int, int, int]


def validate_terms(terms) -> tuple[Term, ...]:
    """Check and canonicalize a four-term support."""
    terms = tuple((int(a), int(b), int(c)) for a, b, c in terms)
    if len(terms) != 4:
        raise ValueError(f"need exactly 4 terms, got {len(terms)}")
    if len(set(terms)) != 4:
        raise ValueError("the 4 terms must be pairwise distinct")
    if any(e < 0 for term in terms for e in term):
        raise ValueError("exponents must be nonnegative")
    return terms


@dataclass(frozen=True)
class ExponentMatrix:
    """4x4 matrix of homogenized exponents, columns ordered (X, Y, Z, T)."""

    rows: tuple[tuple[int, int, int, int], ...]
    degree: int

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        if any(e < 0 for row in rows for e in row):
            raise ValueError("exponents must be nonnegative")
        if any(sum(row) != self.degree for row in rows):
            raise ValueError("every row must sum to the degree")
        if mat4_det(rows) == 0:
            raise SingularMatrixError(
                "exponent matrix is singular; the character-group method does not apply"
            )

    @property
    def determinant(self) -> int:
        return mat4_det(self.rows)


def homogenize(terms) -> ExponentMatrix:
    """Exponent matrix of the homogenization of a four-term polynomial.

    The degree is d = max(a+b+c) over the terms t^a X^b Y^c; each term
    becomes the row (b, c, d-a-b-c, a). Raises SingularMatrixError when
    the matrix is singular and ValueError for malformed supports.
    """
    terms = validate_terms(terms)
    degree = max(a + b + c for a, b, c in terms)
    rows = tuple((b, c, degree - a - b - c, a) for a, b, c in terms)
    return ExponentMatrix(rows, degree)


_SELECTORS = ((1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1))


def lattice_generators(matrix: ExponentMatrix) -> tuple[QZVec4, QZVec4, QZVec4]:
    """The three generators of L, reduced coordinatewise into [0, 1)."""
    inverse = mat4_inverse(matrix.rows)
    return tuple(row_vec_apply(sel, inverse) for sel in _SELECTORS)


def _group_cells(generators):
    """Closure of the generators as numerator tuples mod a common denominator.

    Returns (sorted cells, modulus); cell[i]/modulus is the i-th coordinate.
    """
    denoms = [f.denominator for g in generators for f in g]
    modulus = lcm(*denoms) if denoms else 1
    gen_cells = [
        tuple(int(f * modulus) % modulus for f in qzvec(g)) for g in generators
    ]
    zero = (0, 0, 0, 0)
    seen = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for element in frontier:
            for gen in gen_cells:
                s = (
                    (element[0] + gen[0]) % modulus,
                    (element[1] + gen[1]) % modulus,
                    (element[2] + gen[2]) % modulus,
                    (element[3] + gen[3]) % modulus,
                )
                if s not in seen:
                    seen.add(s)
                    new.append(s)
        frontier = new
    return sorted(seen), modulus


@dataclass(frozen=True)
class LatticeGroup:
    """A finite subgroup of (Q/Z)^4 together with its generating set."""

    generators: tuple[QZVec4, ...]
    elements: frozenset


def enumerate_group(generators) -> LatticeGroup:
    """The full finite subgroup generated by the given vectors."""
    generators = tuple(qzvec(g) for g in generators)
    cells, modulus = _group_cells(generators)
    elements = frozenset(
        tuple(Fraction(c, modulus) for c in cell) for cell in cells
    )
    return LatticeGroup(generators, elements)


def in_lambda(vector) -> bool:
    """Admissibility of a single character vector.

    True iff all four coordinates are nonzero in Q/Z and some t in [1, N]
    with gcd(t, N) = 1 (N the lcm of the coordinate orders; this is
    exactly order preservation) has lifts summing to something other
    than 2.
    """
    vector = qzvec(vector)
    modulus = lcm(*(f.denominator for f in vector))
    cell = tuple(int(f * modulus) for f in vector)
    return _kernels.count_lambda([cell], modulus) == 1


@lru_cache(maxsize=128)
def _matrix_cells(matrix: ExponentMatrix):
    return _group_cells(lattice_generators(matrix))


def group_order(matrix: ExponentMatrix) -> int:
    """Number of elements of the character group L of the matrix."""
    cells, _ = _matrix_cells(matrix)
    return len(cells)


def lefschetz_number(matrix: ExponentMatrix) -> int:
    """Count of admissible characters in L.

    DELSARTE_WORKERS > 1 splits the elements across threads; the count is
    a sum of per-chunk counts and does not depend on the split.
    """
    cells, modulus = _matrix_cells(matrix)
    workers = int(os.environ.get("DELSARTE_WORKERS", "1") or "1")
    if workers <= 1 or len(cells) < 2 * workers:
        return _kernels.count_lambda(cells, modulus)
    chunks = [cells[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda c: _kernels.count_lambda(c, modulus), chunks)
    return sum(parts)
