"""Lattice polygons: hulls, point counts, unimodular equivalence and the
classification of polygons with exactly one interior lattice point.

Polygons are tuples of integer (x, y) vertex pairs in counterclockwise
order, corners only, starting at the lexicographically smallest vertex.
Maps act on points as row vectors: image = p @ M + shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _kernels
from .errors import (
    ClassificationError,
    DegenerateSupportError,
    NotOneInteriorError,
)

Point = tuple[int, int]
Polygon = tuple[Point, ...]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> Polygon:
    """Canonical convex hull of a finite point set.

    Corners only (no three consecutive collinear), counterclockwise,
    first vertex lexicographically smallest. Collinear or too-small
    inputs raise DegenerateSupportError.
    """
    pts = sorted({(int(x), int(y)) for x, y in points})
    if len(pts) < 3:
        raise DegenerateSupportError("support has fewer than 3 distinct points")
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = tuple(lower[:-1] + upper[:-1])
    if len(hull) < 3:
        raise DegenerateSupportError("support is collinear")
    return hull


def polygon_edges(polygon: Polygon):
    """Consecutive vertex pairs, wrapping around."""
    for i in range(len(polygon)):
        yield polygon[i], polygon[(i + 1) % len(polygon)]


def lattice_counts(polygon: Polygon):
    """(interior, boundary, area) of a canonical polygon, all exact.

    Boundary is a gcd sum over edges, area the shoelace value, interior
    the Pick rearrangement interior = area - boundary/2 + 1; the triple
    therefore satisfies Pick's identity by construction and is
    cross-checked against the scanning oracle in the test suite.
    """
    area2 = 0
    boundary = 0
    for (x1, y1), (x2, y2) in polygon_edges(polygon):
        area2 += x1 * y2 - x2 * y1
        boundary += gcd(abs(x2 - x1), abs(y2 - y1))
    if area2 <= 0:
        raise DegenerateSupportError("polygon is not in counterclockwise order")
    interior = (area2 - boundary + 2) // 2
    return interior, boundary, Fraction(area2, 2)


def to_default_position(polygon: Polygon) -> Polygon:
    """Unique translate in the first quadrant touching both axes."""
    minx = min(x for x, _ in polygon)
    miny = min(y for _, y in polygon)
    return tuple((x - minx, y - miny) for x, y in polygon)


@dataclass(frozen=True)
class UnimodularAffineMap:
    """A GL2(Z) matrix plus translation, acting on row vectors."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    shift: Point = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if abs(a * d - b * c) != 1:
            raise ValueError("matrix determinant must be +1 or -1")

    def apply(self, point: Point) -> Point:
        (a, b), (c, d) = self.matrix
        x, y = point
        return (x * a + y * c + self.shift[0], x * b + y * d + self.shift[1])

    def inverse(self) -> "UnimodularAffineMap":
        (a, b), (c, d) = self.matrix
        det = a * d - b * c  # +1 or -1, so division is exact
        inv = ((d // det, -b // det), (-c // det, a // det))
        sx, sy = self.shift
        back = (
            -(sx * inv[0][0] + sy * inv[1][0]),
            -(sx * inv[0][1] + sy * inv[1][1]),
        )
        return UnimodularAffineMap(inv, back)

    def compose(self, first: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """The map p -> self(first(p))."""
        (a, b), (c, d) = first.matrix
        (e, f), (g, h) = self.matrix
        matrix = (
            (a * e + b * g, a * f + b * h),
            (c * e + d * g, c * f + d * h),
        )
        shift = self.apply(first.shift)
        return UnimodularAffineMap(matrix, shift)


IDENTITY_MAP = UnimodularAffineMap(((1, 0), (0, 1)))


def integral_equivalence(p: Polygon, q: Polygon):
    """A witness map sending p onto q as point sets, or None.

    Anchors the first vertex of p with its two adjacent edge vectors and
    tries every vertex of q with both orderings of its adjacent edges;
    candidate matrices must be integral with determinant +-1 and must
    carry the vertex set onto the vertex set.
    """
    if len(p) != len(q):
        return None
    k = len(q)
    p0 = p[0]
    u1 = (p[1][0] - p0[0], p[1][1] - p0[1])
    u2 = (p[-1][0] - p0[0], p[-1][1] - p0[1])
    det_u = u1[0] * u2[1] - u1[1] * u2[0]
    qset = set(q)
    for i in range(k):
        q0 = q[i]
        va = (q[(i + 1) % k][0] - q0[0], q[(i + 1) % k][1] - q0[1])
        vb = (q[i - 1][0] - q0[0], q[i - 1][1] - q0[1])
        for v1, v2 in ((va, vb), (vb, va)):
            if abs(v1[0] * v2[1] - v1[1] * v2[0]) != abs(det_u):
                continue
            # Solve [u1; u2] M = [v1; v2] via the adjugate of [u1; u2].
            n00 = u2[1] * v1[0] - u1[1] * v2[0]
            n01 = u2[1] * v1[1] - u1[1] * v2[1]
            n10 = u1[0] * v2[0] - u2[0] * v1[0]
            n11 = u1[0] * v2[1] - u2[0] * v1[1]
            if any(n % det_u for n in (n00, n01, n10, n11)):
                continue
            matrix = ((n00 // det_u, n01 // det_u), (n10 // det_u, n11 // det_u))
            shift = (
                q0[0] - (p0[0] * matrix[0][0] + p0[1] * matrix[1][0]),
                q0[1] - (p0[0] * matrix[0][1] + p0[1] * matrix[1][1]),
            )
            candidate = UnimodularAffineMap(matrix, shift)
            if {candidate.apply(v) for v in p} == qset:
                return candidate
    return None


@dataclass(frozen=True)
class PolygonClass:
    """One of the 16 classes of one-interior-point polygons."""

    label: str
    vertices: Polygon


# Default-position hulls of the twelve defining quadrinomial families, one
# per picture row of the classification table; these are the canonical
# representatives of the classes with at most four corners.
TABLE_CLASSES = (
    PolygonClass("w1", ((0, 0), (3, 0), (0, 2))),
    PolygonClass("w2", ((0, 2), (1, 0), (3, 0))),
    PolygonClass("w3", ((0, 1), (3, 0), (0, 2))),
    PolygonClass("w4", ((0, 0), (4, 0), (0, 2))),
    PolygonClass("w5", ((0, 0), (3, 0), (0, 3))),
    PolygonClass("w6", ((0, 1), (2, 0), (3, 0), (0, 2))),
    PolygonClass("w7", ((0, 1), (1, 0), (3, 0), (0, 2))),
    PolygonClass("w8", ((0, 0), (3, 0), (2, 1), (0, 2))),
    PolygonClass("w9", ((0, 0), (2, 0), (2, 1), (0, 2))),
    PolygonClass("w10", ((0, 1), (1, 0), (2, 1), (1, 2))),
    PolygonClass("w11", ((0, 0), (3, 0), (1, 2), (0, 2))),
    PolygonClass("w12", ((0, 0), (2, 0), (2, 2), (0, 2))),
)

_CENSUS_BOUND = 4


def _dedupe_by_equivalence(polygons):
    """Greedy pass keeping one representative per equivalence class."""
    representatives = []
    for poly in polygons:
        if all(integral_equivalence(poly, rep) is None for rep in representatives):
            representatives.append(poly)
    return representatives


@lru_cache(maxsize=4)
def _census_representatives(bound: int):
    candidates = _kernels.one_interior_polygons(bound)
    candidates.sort(key=lambda poly: (len(poly), poly))
    return _dedupe_by_equivalence(candidates)


@lru_cache(maxsize=1)
def _extra_classes():
    """The >4-corner classes, labelled x1..x4 from the bound-4 census."""
    extras = [
        poly
        for poly in _census_representatives(_CENSUS_BOUND)
        if all(
            integral_equivalence(poly, cls.vertices) is None
            for cls in TABLE_CLASSES
        )
    ]
    extras.sort(key=lambda poly: (len(poly), poly))
    return tuple(
        PolygonClass(f"x{i}", poly) for i, poly in enumerate(extras, start=1)
    )


def all_classes() -> tuple[PolygonClass, ...]:
    """The 16 canonical classes, w1..w12 then x1..x4."""
    return TABLE_CLASSES + _extra_classes()


def classify_one_interior(polygon: Polygon) -> PolygonClass:
    """The unique class whose representative is equivalent to `polygon`.

    Raises NotOneInteriorError unless the polygon has exactly one
    interior lattice point.
    """
    interior, _, _ = lattice_counts(polygon)
    if interior != 1:
        raise NotOneInteriorError(
            f"polygon has {interior} interior points, classification needs 1"
        )
    for cls in TABLE_CLASSES:
        if integral_equivalence(polygon, cls.vertices) is not None:
            return cls
    for cls in _extra_classes():
        if integral_equivalence(polygon, cls.vertices) is not None:
            return cls
    raise ClassificationError(f"no class matches {polygon}")


def enumerate_one_interior_classes(bound: int):
    """Census of one-interior-point polygon classes inside [0, bound]^2.

    Exhaustive over vertex subsets of size 3..6; each class is returned
    once with the label it carries in the canonical classification.
    """
    if bound < 4:
        raise ValueError("census bound must be at least 4")
    classes = []
    for rep in _census_representatives(bound):
        classes.append(classify_one_interior(rep))
    classes.sort(key=lambda cls: (cls.label[0] != "w", len(cls.label), cls.label))
    return classes


def transform_support(points, umap: UnimodularAffineMap):
    """Image of a support under a unimodular map, shifted to default position.

    Output order matches input order, so per-point data (coefficients)
    carries over positionally. The underlying change of variables is the
    monomial substitution determined by the matrix.
    """
    image = [umap.apply((int(x), int(y))) for x, y in points]
    minx = min(x for x, _ in image)
    miny = min(y for _, y in image)
    return [(x - minx, y - miny) for x, y in image]


def genus_of_support(points, nondegenerate: bool):
    """(interior count of the support hull, exactness flag).

    The count bounds the geometric genus of the curve with this support;
    it is exact when the caller certifies nondegeneracy (in this package:
    a nonsingular exponent matrix).
    """
    interior, _, _ = lattice_counts(convex_hull(points))
    return interior, bool(nondegenerate)
