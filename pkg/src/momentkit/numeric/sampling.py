"""Monte-Carlo sampling of the moment maps of SU(3) on CP^2 x CP^2.

``natural`` is ``t mu(x) + s mu(y)`` and ``skew`` is ``t mu(x) - s mu(y)``,
with ``mu(x) = xx*/|x|^2 - I/3``.  Samples are compared against exact
polytopes converted to floating facet form.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .. import builders
from ..geometry import Polytope, convex_hull, diameter
from . import _pykernels

ACTIONS = ("natural", "skew")
CHUNK = 8192
DEFAULT_TOL = 1e-9

U1 = np.array([1.0, -1.0, 0.0]) / math.sqrt(2.0)
U2 = np.array([1.0, 1.0, -2.0]) / math.sqrt(6.0)


class DegenerateSampleError(ValueError):
    """The projected samples are collinear (or a single point)."""


@dataclass(frozen=True)
class MomentSample:
    mu_hat: np.ndarray
    diag: np.ndarray
    dominant: np.ndarray


def _sign(action: str) -> float:
    if action not in ACTIONS:
        raise ValueError(f"unknown action {action!r}; expected one of {ACTIONS}")
    return 1.0 if action == "natural" else -1.0


def unit_batch(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    """``count`` unitarily invariant unit vectors of C^(n+1)."""
    z = rng.standard_normal((count, n + 1)) + 1j * rng.standard_normal((count, n + 1))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def sample_projective(n: int, seed: int | None) -> Iterator[np.ndarray]:
    """Endless deterministic stream of unit vectors representing points of CP^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    while True:
        yield from unit_batch(rng, 1024, n)


def moment_batch(action: str, t: float, s: float, x: np.ndarray, y: np.ndarray,
                 eigen: bool = True, backend: str | None = None):
    """Torus values (rows of ``diag``) and sorted spectra for rows of ``x`` and ``y``."""
    from . import BACKEND, _jacobi

    s_signed = _sign(action) * float(s)
    backend = backend or BACKEND
    if backend == "numpy":
        return _pykernels.moment_batch(x, y, float(t), s_signed, eigen)
    if backend != "cython" or _jacobi is None:
        raise ValueError(f"backend {backend!r} is not available")
    k = len(x)
    parts = [np.ascontiguousarray(a, dtype=np.float64)
             for a in (x.real, x.imag, y.real, y.imag)]
    diag = np.empty((k, 3))
    eig = np.empty((k, 3))
    fails = _jacobi.moment_batch(*parts, float(t), s_signed, diag, eig, eigen)
    if fails:
        raise ArithmeticError(f"Jacobi iteration did not converge for {fails} samples")
    return diag, (eig if eigen else None)


def moment_sample(action: str, t: float, s: float, x, y) -> MomentSample:
    x = np.asarray(x, dtype=np.complex128).reshape(1, 3)
    y = np.asarray(y, dtype=np.complex128).reshape(1, 3)
    mu = _pykernels.moment_matrices(x, y, float(t), _sign(action) * float(s))[0]
    diag, eig = moment_batch(action, t, s, x, y)
    return MomentSample(mu, diag[0], eig[0])


def project_2d(points) -> np.ndarray:
    """Sum-zero R^3 onto the (u1, u2) plane; 2-dimensional input passes through."""
    p = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if p.shape[1] == 2:
        return p
    if p.shape[1] == 3:
        return np.column_stack((p @ U1, p @ U2))
    raise ValueError(f"cannot project points of dimension {p.shape[1]} to the plane")


class FloatPolytope:
    """Floating facet form of an exact polytope: unit normals plus the affine hull."""

    def __init__(self, poly: Polytope):
        self.exact = poly
        self.origin = np.array([float(c) for c in poly.origin])
        rows = []
        for f in poly.facets:
            n = np.array([float(c) for c in f.halfspace.normal])
            rows.append((n, float(f.halfspace.offset)))
        if poly.rank == 1:
            a, b = (np.array([float(c) for c in v]) for v in poly.vertices)
            d = (b - a) / np.linalg.norm(b - a)
            rows += [(d, d @ b), (-d, -(d @ a))]
        self.normals = np.array([n / np.linalg.norm(n) for n, _ in rows]).reshape(len(rows), -1)
        self.offsets = np.array([o / np.linalg.norm(n) for n, o in rows])
        if poly.rank:
            basis = np.array([[float(c) for c in b] for b in poly.basis]).T
            self.frame, _ = np.linalg.qr(basis)
        else:
            self.frame = np.zeros((poly.dim, 0))

    def inside(self, points: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
        p = np.atleast_2d(points)
        d = p - self.origin
        resid = d - (d @ self.frame) @ self.frame.T
        ok = np.linalg.norm(resid, axis=1) <= tol
        if len(self.offsets):
            ok &= np.all(p @ self.normals.T - self.offsets <= tol, axis=1)
        return ok


def membership_fraction(hull: Polytope | FloatPolytope, samples, tol: float = DEFAULT_TOL) -> float:
    fp = hull if isinstance(hull, FloatPolytope) else FloatPolytope(hull)
    inside = fp.inside(np.asarray(samples, dtype=np.float64), tol)
    return float(np.mean(inside)) if len(inside) else 1.0


def _ring(points2d: np.ndarray) -> np.ndarray:
    """Extreme points in boundary order: a polygon, a segment's two ends, or one point."""
    p = np.unique(np.asarray(points2d, dtype=np.float64), axis=0)
    if len(p) <= 2:
        return p
    c = p - p.mean(axis=0)
    sv = np.linalg.svd(c, compute_uv=False)
    if sv[1] <= 1e-9 * max(1.0, sv[0]):
        axis = np.linalg.svd(c, full_matrices=False)[2][0]
        proj = c @ axis
        return p[[np.argmin(proj), np.argmax(proj)]]
    try:
        return p[ConvexHull(p).vertices]
    except QhullError:
        axis = np.linalg.svd(c, full_matrices=False)[2][0]
        proj = c @ axis
        return p[[np.argmin(proj), np.argmax(proj)]]


def approx_hull_2d(points2d) -> np.ndarray:
    """Counter-clockwise vertices of the hull of planar samples."""
    ring = _ring(points2d)
    if len(ring) < 3:
        raise DegenerateSampleError("samples are collinear; no 2-dimensional hull")
    return ring


def _point_segment(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    denom = ab @ ab
    u = np.zeros(len(p)) if denom == 0 else np.clip((p - a) @ ab / denom, 0.0, 1.0)
    return np.linalg.norm(p - (a + u[:, None] * ab), axis=1)


def _distance_to_region(p: np.ndarray, ring: np.ndarray) -> np.ndarray:
    if len(ring) == 1:
        return np.linalg.norm(p - ring[0], axis=1)
    edges = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring) if len(ring) > 2 else 1)]
    d = np.min([_point_segment(p, a, b) for a, b in edges], axis=0)
    if len(ring) > 2:
        cross = np.stack([(b[0] - a[0]) * (p[:, 1] - a[1]) - (b[1] - a[1]) * (p[:, 0] - a[0])
                          for a, b in edges])
        d = np.where(np.all(cross >= 0, axis=0), 0.0, d)
    return d


def hausdorff(a2d, b2d) -> float:
    """Hausdorff distance between the convex hulls of two planar point sets."""
    ra, rb = _ring(a2d), _ring(b2d)
    return float(max(_distance_to_region(ra, rb).max(), _distance_to_region(rb, ra).max()))


def hausdorff_to(samples2d, exact: Polytope) -> float:
    return hausdorff(samples2d, project_2d([[float(c) for c in v] for v in exact.vertices]))


def exact_polytope(action: str, t, s, target: str = "torus") -> Polytope:
    """``conv(fixed images)`` for ``target="torus"``; the Kirwan segment for ``"kirwan"``."""
    _sign(action)
    if target == "torus":
        m = builders.su3_natural(t, s) if action == "natural" else builders.su3_skew(t, s)
        return convex_hull(m.images())
    if target == "kirwan":
        return (builders.su3_natural_kirwan if action == "natural" else builders.su3_skew_kirwan)(t, s)
    raise ValueError(f"unknown target {target!r}")


@dataclass(frozen=True)
class SamplingReport:
    count: int
    fraction_inside: float
    hausdorff: float
    seed: int
    diameter: float

    def to_json(self) -> dict:
        return {"count": self.count, "fraction_inside": self.fraction_inside,
                "hausdorff": self.hausdorff, "seed": self.seed}


def _chunk(action, t, s, seed, k, size, fp, tol, target):
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(k,)))
    x = unit_batch(rng, size, 2)
    y = unit_batch(rng, size, 2)
    diag, eig = moment_batch(action, t, s, x, y, eigen=(target == "kirwan"))
    vals = diag if target == "torus" else eig
    return int(fp.inside(vals, tol).sum()), _ring(project_2d(vals))


def run_sampling(action: str, t, s, count: int = 100_000, seed: int = 0, workers: int = 1,
                 tol: float = DEFAULT_TOL, target: str = "torus",
                 chunk: int = CHUNK) -> SamplingReport:
    """Sample ``count`` points of CP^2 x CP^2 and compare their values with the exact polytope.

    Chunk ``k`` draws from the substream ``SeedSequence(seed, spawn_key=(k,))``, so the
    report depends on ``seed`` and ``count`` only, never on ``workers``.
    """
    if count < 1:
        raise ValueError("count must be positive")
    exact = exact_polytope(action, t, s, target)
    fp = FloatPolytope(exact)
    sizes = [min(chunk, count - k * chunk) for k in range(math.ceil(count / chunk))]
    args = [(action, float(t), float(s), seed, k, n, fp, tol, target) for k, n in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: _chunk(*a), args))
    else:
        results = [_chunk(*a) for a in args]
    inside = sum(r[0] for r in results)
    cloud = np.concatenate([r[1] for r in results])
    h = hausdorff_to(cloud, exact)
    return SamplingReport(count, inside / count, h, seed, diameter(exact))
