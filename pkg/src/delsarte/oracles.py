"""Independent brute-force validators.

Everything here deliberately uses the naive formulation — full product
enumeration of the character group, full multiplier scans with exact
Fraction lifts and no early exit, bounding-box scans for lattice points,
trial-division primes — so a bug shared with the optimized paths is
implausible. Slow by design; used by the test suite and `delsarte verify`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .lattice import ExponentMatrix, lattice_generators
from .polygon import lattice_counts, polygon_edges
from . import polygon as _polygon


def _vector_order(vec) -> int:
    return lcm(*(f.denominator for f in vec))


def _naive_member(vec) -> bool:
    # Full scan over every admissible multiplier; the verdict is taken at
    # the end rather than short-circuited.
    if any(f == 0 for f in vec):
        return False
    modulus = _vector_order(vec)
    sums = []
    for t in range(1, modulus + 1):
        if gcd(t, modulus) != 1:
            continue
        sums.append(sum((t * f) % 1 for f in vec))
    return any(s != 2 for s in sums)


def brute_lambda(matrix: ExponentMatrix) -> int:
    """Lefschetz number by exhaustive triple-product enumeration.

    Walks i, j, k over the full generator-order ranges (vectorized with
    numpy, deduplicated as a set) and counts members with the naive
    Fraction scan.
    """
    gens = lattice_generators(matrix)
    modulus = lcm(*(f.denominator for g in gens for f in g))
    scaled = [np.array([int(f * modulus) for f in g], dtype=np.int64) for g in gens]
    orders = [_vector_order(g) for g in gens]

    # i runs over the outer generator; the inner two are materialized once.
    inner = (
        np.arange(orders[1], dtype=np.int64)[:, None, None] * scaled[1][None, None, :]
        + np.arange(orders[2], dtype=np.int64)[None, :, None] * scaled[2][None, None, :]
    ) % modulus
    inner = inner.reshape(-1, 4)
    blocks = []
    for i in range(orders[0]):
        block = (inner + i * scaled[0]) % modulus
        blocks.append(np.unique(block, axis=0))
    elements = np.unique(np.concatenate(blocks), axis=0)

    count = 0
    for cell in elements:
        vec = tuple(Fraction(int(c), modulus) for c in cell)
        if _naive_member(vec):
            count += 1
    return count


def _point_location(polygon, point):
    """-1 outside, 0 on the boundary, +1 strictly inside (convex CCW input)."""
    location = 1
    px, py = point
    for (x1, y1), (x2, y2) in polygon_edges(polygon):
        cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
        if cross < 0:
            return -1
        if cross == 0:
            location = 0
    return location


def scan_points(polygon):
    """(interior points, boundary points) by bounding-box scan."""
    xs = [x for x, _ in polygon]
    ys = [y for _, y in polygon]
    interior = []
    boundary = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            where = _point_location(polygon, (x, y))
            if where > 0:
                interior.append((x, y))
            elif where == 0:
                boundary.append((x, y))
    return interior, boundary


def interior_scan(polygon):
    """(interior count, boundary count) by bounding-box scan."""
    interior, boundary = scan_points(polygon)
    return len(interior), len(boundary)


def _primes_up_to(limit: int):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p, flag in enumerate(sieve) if flag]


def prime_gap_scan(limit: int):
    """Multiples of 3 in (3, limit] with no prime p = 2 (mod 3), 3p < n, p not | n.

    These n are the reduced denominators for which the multiplier search
    of the admissibility test finds no witness below 1/3; the search only
    ever reaches denominators divisible by 3, and without that restriction
    a handful of small n (4, 5, 8, 10, 14, 20) qualify vacuously because
    no prime satisfies 3p < n at all. A scan up to 51 already determines
    the full answer; larger limits certify stability.
    """
    if limit < 4:
        raise ValueError("limit must be at least 4")
    primes = [p for p in _primes_up_to(limit) if p % 3 == 2]
    hits = []
    for n in range(6, limit + 1, 3):
        if not any(3 * p < n and n % p for p in primes):
            hits.append(n)
    return hits


def class_census(bound: int):
    """Census report: the one-interior-point classes inside [0, bound]^2.

    Every class representative is cross-checked against the scanning
    counts (and hence against Pick's identity).
    """
    classes = _polygon.enumerate_one_interior_classes(bound)
    histogram = {}
    for cls in classes:
        interior, boundary = interior_scan(cls.vertices)
        counted_interior, counted_boundary, _ = lattice_counts(cls.vertices)
        if (interior, boundary) != (counted_interior, counted_boundary):
            raise AssertionError(
                f"census class {cls.label}: scan {(interior, boundary)} != "
                f"counts {(counted_interior, counted_boundary)}"
            )
        if interior != 1:
            raise AssertionError(f"census class {cls.label} has {interior} interior points")
        corners = len(cls.vertices)
        histogram[corners] = histogram.get(corners, 0) + 1
    return classes, histogram
