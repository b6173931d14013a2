"""Exact arithmetic: Q/Z residues and 4x4 rational linear algebra.

Residues of Q/Z are plain ``fractions.Fraction`` values reduced into
[0, 1); ``Fraction`` already keeps numerator/denominator coprime with a
positive denominator, so the canonical form is free. No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrixError

#: A residue in Q/Z: a Fraction in [0, 1).
QZ = Fraction

#: An element of (Q/Z)^4: a 4-tuple of QZ.
QZVec4 = tuple


def qz(num, den=1) -> QZ:
    """Reduce num/den into the canonical representative in [0, 1).

    A zero denominator raises ZeroDivisionError.
    """
    return Fraction(num, den) % 1


def qz_add(a, b) -> QZ:
    return (a + b) % 1


def qz_scale(t, a) -> QZ:
    """Image of a under multiplication by the integer t."""
    return (t * a) % 1


def qz_order(a) -> int:
    """Order of a in the additive group Q/Z; the identity has order 1."""
    return (a % 1).denominator


def qz_lift(a) -> Fraction:
    """The lift of a to the unique rational representative in [0, 1)."""
    return a % 1


def qzvec(coords) -> QZVec4:
    """Normalize a length-4 iterable of rationals into (Q/Z)^4."""
    vec = tuple(Fraction(c) % 1 for c in coords)
    if len(vec) != 4:
        raise ValueError(f"expected 4 coordinates, got {len(vec)}")
    return vec


def _det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def mat4_det(rows) -> int:
    """Determinant of a 4x4 integer matrix, computed exactly."""
    det = 0
    for col in range(4):
        minor = [[rows[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        term = rows[0][col] * _det3(minor)
        det += term if col % 2 == 0 else -term
    return det


def mat4_inverse(rows):
    """Exact inverse of a 4x4 matrix as a tuple of Fraction rows.

    Raises SingularMatrixError when the determinant vanishes.
    """
    work = [[Fraction(rows[i][j]) for j in range(4)] for i in range(4)]
    inv = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    for col in range(4):
        pivot = next((r for r in range(col, 4) if work[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(4):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(r) for r in inv)


def row_vec_apply(vec, matrix) -> QZVec4:
    """Row vector times 4x4 matrix, each entry reduced into [0, 1)."""
    return tuple(
        sum(Fraction(vec[k]) * matrix[k][j] for k in range(4)) % 1 for j in range(4)
    )
