"""Desk-scale numerical experiments: the four-point Euler identity, exact
congruence-class counting on integer grids, Hausdorff-content bound curves,
and box-counting estimates of sampled distance sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph

ENUMERATION_LIMIT = 10 ** 8
LATTICE_POINT_LIMIT = 10 ** 7


class EnumerationLimitError(ValueError):
    """Instance too large to enumerate exactly."""


def euler_t24(t12: float, t13: float, t14: float, t23: float, t34: float,
              convex: bool = True) -> float:
    """Sixth distance t24 of a planar 4-point configuration from the other
    five, via the quadrilateral identity

        t24^2 = t23^2 + t14^2 - t13^2 + 2 t12 t34 cos(theta -+ psi)

    where theta (angle at vertex 1 between segments to 2 and 3) and psi
    (angle at vertex 3 between segments to 1 and 4) come from the law of
    cosines on the two triangles sharing the diagonal t13.

    `convex` selects the branch: True means vertices 2 and 4 lie on opposite
    sides of the line through 1 and 3, which holds for any convex
    quadrilateral traversed 1,2,3,4; False selects the same-side (reflex)
    layout, flipping the sign to cos(theta + psi). The five lengths must form
    two nondegenerate triangles {t12, t13, t23} and {t13, t34, t14}.
    """
    for name, val in (("t12", t12), ("t13", t13), ("t14", t14),
                      ("t23", t23), ("t34", t34)):
        if not val > 0:
            raise ValueError(f"{name} must be positive, got {val!r}")
    cos_theta = (t12 * t12 + t13 * t13 - t23 * t23) / (2 * t12 * t13)
    cos_psi = (t13 * t13 + t34 * t34 - t14 * t14) / (2 * t13 * t34)
    if abs(cos_theta) >= 1 or abs(cos_psi) >= 1:
        raise ValueError(
            "lengths do not satisfy the strict triangle inequality "
            "around the diagonal")
    sin_theta = math.sqrt(1 - cos_theta * cos_theta)
    sin_psi = math.sqrt(1 - cos_psi * cos_psi)
    if convex:
        cos_gap = cos_theta * cos_psi + sin_theta * sin_psi
    else:
        cos_gap = cos_theta * cos_psi - sin_theta * sin_psi
    square = t23 * t23 + t14 * t14 - t13 * t13 + 2 * t12 * t34 * cos_gap
    if square < 0:
        # tolerate rounding at a genuine zero, reject anything worse
        if square > -1e-12 * (t13 * t13 + t14 * t14 + t23 * t23):
            square = 0.0
        else:
            raise ValueError("lengths are not realizable in the plane")
    return math.sqrt(square)


def k4_euler_residuals(tuples) -> np.ndarray:
    """Relative residual of the four-point identity on sampled plane tuples.

    `tuples` has shape (N, 4, 2). The convex/reflex branch is decided per
    sample from the coordinates (sides of the 1-3 diagonal), so residuals are
    at rounding level for every sample: the six pairwise distances of a
    4-point plane configuration always lie on this hypersurface, which is why
    the distance set of K4 in R^2 has measure zero in R^6.
    """
    pts = np.asarray(tuples, dtype=float)
    if pts.ndim != 3 or pts.shape[1] != 4 or pts.shape[2] != 2:
        raise ValueError("expected an (N, 4, 2) array of plane tuples")

    def dist(a, b):
        return np.linalg.norm(pts[:, a] - pts[:, b], axis=1)

    t12, t13, t14 = dist(0, 1), dist(0, 2), dist(0, 3)
    t23, t24, t34 = dist(1, 2), dist(1, 3), dist(2, 3)
    diagonal = pts[:, 2] - pts[:, 0]

    def cross2(a, b):
        return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]

    side2 = cross2(diagonal, pts[:, 1] - pts[:, 0])
    side4 = cross2(diagonal, pts[:, 3] - pts[:, 0])
    convex = side2 * side4 < 0
    # clip guards rounding on almost-degenerate samples; exact degeneracy has
    # probability zero under any continuous sampler
    cos_theta = np.clip((t12 ** 2 + t13 ** 2 - t23 ** 2) / (2 * t12 * t13), -1.0, 1.0)
    cos_psi = np.clip((t13 ** 2 + t34 ** 2 - t14 ** 2) / (2 * t13 * t34), -1.0, 1.0)
    sin_theta = np.sqrt(1.0 - cos_theta ** 2)
    sin_psi = np.sqrt(1.0 - cos_psi ** 2)
    cos_gap = np.where(convex,
                       cos_theta * cos_psi + sin_theta * sin_psi,
                       cos_theta * cos_psi - sin_theta * sin_psi)
    square = t23 ** 2 + t14 ** 2 - t13 ** 2 + 2 * t12 * t34 * cos_gap
    predicted = np.sqrt(np.maximum(square, 0.0))
    return np.abs(predicted - t24) / np.where(t24 > 0, t24, 1.0)


def congruence_class_counts(d: int, q: int, k: int) -> tuple[int, int]:
    """(unlabeled, labeled) congruence-class counts of (k+1)-tuples on the
    grid {0..q}^d, via exact integer squared-distance invariants.

    Labeled classes key on the distance vector in lexicographic pair order;
    unlabeled classes key on its sorted multiset, which quotients out vertex
    relabeling. Both counts are bounded by (2q+1)^(dk): translating the first
    vertex to the origin leaves the remaining k vertices in a (2q+1)-wide box.
    """
    if d < 1 or q < 1 or k < 1:
        raise ValueError("d, q, k must all be >= 1")
    if (q + 1) ** (d * (k + 1)) > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"(q+1)^(d(k+1)) = {(q + 1) ** (d * (k + 1))} tuples exceeds "
            f"the enumeration guard of {ENUMERATION_LIMIT}")
    points = list(itertools.product(range(q + 1), repeat=d))
    pair_idx = list(itertools.combinations(range(k + 1), 2))
    unlabeled: set = set()
    labeled: set = set()
    for tup in itertools.product(points, repeat=k + 1):
        key = tuple(
            sum((pa - pb) ** 2 for pa, pb in zip(tup[a], tup[b]))
            for a, b in pair_idx)
        labeled.add(key)
        unlabeled.add(tuple(sorted(key)))
    return len(unlabeled), len(labeled)


def count_congruence_classes(d: int, q: int, k: int, labeled: bool = False) -> int:
    """Number of congruence classes of (k+1)-tuples on the grid {0..q}^d.

    By default tuples are identified up to relabeling as well as isometry
    (classes of unlabeled point sets); labeled=True counts distinct distance
    vectors instead.
    """
    unlabeled_count, labeled_count = congruence_class_counts(d, q, k)
    return labeled_count if labeled else unlabeled_count


def _check_s_range(d: int, s: float):
    if not d / 2 <= s < d:
        raise ValueError(f"s must lie in [d/2, d) = [{d / 2}, {d}), got {s}")


def hausdorff_content_bound(d: int, q: int, k: int, s: float) -> float:
    """Scaling bound q^(dk - (d/s)(dk - C(d,2))) on the (dk - C(d,2))-content
    of the distance set of the q-lattice neighborhood set.

    Decreasing in q exactly when s < d - C(d,2)/k, which is how thresholds
    below that exponent are defeated.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if q < 1 or k < 1:
        raise ValueError("q and k must be >= 1")
    _check_s_range(d, s)
    exponent = d * k - (d / s) * (d * k - d * (d - 1) / 2)
    return float(q) ** exponent


@dataclass(frozen=True)
class LatticeSet:
    """The scaled lattice (1/q)(Z^d in [0,q]^d) with its neighborhood radius
    q^(-d/s): the union of radius-balls around the points is the set whose
    distance sets the lattice experiments probe. (q+1)^d points; for s < d
    and q large the radius drops below the 1/(2q) packing distance, so the
    balls become disjoint."""

    d: int
    q: int
    s: float
    points: tuple[tuple[Fraction, ...], ...]
    radius: float


def build_lattice_set(d: int, q: int, s: float) -> LatticeSet:
    if d < 2:
        raise ValueError("d must be >= 2")
    if q < 1:
        raise ValueError("q must be >= 1")
    _check_s_range(d, s)
    if (q + 1) ** d > LATTICE_POINT_LIMIT:
        raise EnumerationLimitError(f"(q+1)^d = {(q + 1) ** d} lattice points "
                                    f"exceeds the guard of {LATTICE_POINT_LIMIT}")
    pts = tuple(
        tuple(Fraction(c, q) for c in coords)
        for coords in itertools.product(range(q + 1), repeat=d))
    return LatticeSet(d=d, q=q, s=float(s), points=pts,
                      radius=float(q) ** (-d / float(s)))


class UnitCubeSampler:
    """Uniform points in [0,1]^d."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.d = d

    def draw(self, rng: np.random.Generator, count: int) -> np.ndarray:
        return rng.random((count, self.d))


class LatticeSampler:
    """Uniform over a lattice neighborhood set: a uniformly chosen lattice
    point plus a uniform offset in the radius ball."""

    def __init__(self, lattice: LatticeSet):
        self.lattice = lattice
        self.d = lattice.d
        self._centers = np.array([[float(c) for c in p] for p in lattice.points])

    def draw(self, rng: np.random.Generator, count: int) -> np.ndarray:
        d = self.d
        idx = rng.integers(0, len(self._centers), size=count)
        normals = rng.normal(size=(count, d))
        norms = np.linalg.norm(normals, axis=1, keepdims=True)
        directions = normals / np.where(norms > 0, norms, 1.0)
        radii = self.lattice.radius * rng.random(count) ** (1.0 / d)
        return self._centers[idx] + directions * radii[:, None]


class CantorSampler:
    """Product of middle-thirds Cantor sets, one per coordinate; draws pick
    random ternary digits in {0, 2} down to resolution 3^-depth."""

    def __init__(self, d: int, depth: int = 35):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.d = d
        self.depth = depth

    def draw(self, rng: np.random.Generator, count: int) -> np.ndarray:
        digits = rng.integers(0, 2, size=(count, self.d, self.depth)) * 2.0
        weights = 3.0 ** -np.arange(1, self.depth + 1)
        return digits @ weights


def sample_framework_tuples(sampler, n_points: int, n_samples: int, seed: int) -> np.ndarray:
    """n_samples i.i.d. tuples of n_points draws each, shape
    (n_samples, n_points, d); deterministic per seed."""
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    rng = np.random.default_rng(seed)
    flat = sampler.draw(rng, n_samples * n_points)
    return flat.reshape(n_samples, n_points, -1)


def distance_images(g: Graph, tuples) -> np.ndarray:
    """Edge-length images of sampled tuples, one column per edge in the
    graph's edge order."""
    pts = np.asarray(tuples, dtype=float)
    if pts.ndim != 3 or pts.shape[1] != g.n_vertices:
        raise ValueError(f"expected (N, {g.n_vertices}, d) tuples")
    if not g.edges:
        return np.zeros((pts.shape[0], 0))
    cols = [np.linalg.norm(pts[:, i - 1] - pts[:, j - 1], axis=1) for i, j in g.edges]
    return np.stack(cols, axis=1)


def sample_distance_set(g: Graph, sampler, n_samples: int, seed: int) -> np.ndarray:
    """N points of the graph's distance set in R^m: i.i.d. sampler tuples
    mapped through the edge-length map; deterministic per seed."""
    return distance_images(g, sample_framework_tuples(sampler, g.n_vertices, n_samples, seed))


def covering_count(cloud, eps: float) -> int:
    """Number of occupied cells of the origin-anchored eps-grid."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    a = np.asarray(cloud, dtype=float)
    if a.ndim == 1:
        a = a[:, None]
    if a.size == 0:
        raise ValueError("empty cloud")
    cells = np.floor(a / eps).astype(np.int64)
    return int(np.unique(cells, axis=0).shape[0])


@dataclass(frozen=True)
class CoveringEstimate:
    """Covering counts over a list of scales and the fitted slope of
    log2(count) against log2(1/eps), the box-dimension estimate."""

    scales: tuple[float, ...]
    counts: tuple[int, ...]
    slope: float


def fit_box_dimension(cloud, scales) -> CoveringEstimate:
    """Least-squares box-dimension fit over the given scales (use powers of
    1/2 so coarser grids are exact unions of finer cells)."""
    scales = tuple(float(e) for e in scales)
    if len(scales) < 2:
        raise ValueError("need at least two scales to fit a slope")
    counts = tuple(covering_count(cloud, eps) for eps in scales)
    xs = np.log2(1.0 / np.asarray(scales))
    ys = np.log2(np.asarray(counts, dtype=float))
    slope = float(np.polyfit(xs, ys, 1)[0])
    return CoveringEstimate(scales=scales, counts=counts, slope=slope)
