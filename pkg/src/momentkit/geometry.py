"""Exact rational vectors and convex polytopes of affine rank <= 3.

Points are plain tuples of :class:`fractions.Fraction`.  Polytopes are kept
in minimal V-representation together with their facet halfspaces, computed
inside the affine hull so that lower-dimensional polytopes sitting in a
bigger ambient space (e.g. the sum-zero plane of R^3) are handled exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

MAX_RANK = 3


class GeometryError(ValueError):
    pass


class EmptyInputError(GeometryError):
    pass


class UnsupportedRankError(GeometryError):
    pass


class DimensionMismatchError(GeometryError):
    pass


def vector(coords: Iterable) -> Vector:
    """Coerce ints, strings such as ``"2/3"`` or Fractions into a Vector."""
    return tuple(Fraction(c) for c in coords)


def _same_dim(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dot(a: Vector, b: Vector) -> Fraction:
    _same_dim(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Vector, b: Vector) -> Vector:
    _same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    _same_dim(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def is_zero(a: Vector) -> bool:
    return all(x == 0 for x in a)


def squared_distance(a: Vector, b: Vector) -> Fraction:
    d = sub(a, b)
    return dot(d, d)


def primitive(v: Vector) -> Vector:
    """Positive multiple of ``v`` with coprime integer entries."""
    if is_zero(v):
        return v
    den = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator), v, 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(i) for i in ints))
    return tuple(Fraction(i // g) for i in ints)


def _project_out(v: Vector, basis: Sequence[Vector]) -> Vector:
    # basis must be pairwise orthogonal
    for b in basis:
        c = dot(v, b) / dot(b, b)
        if c:
            v = sub(v, scale(c, b))
    return v


def orthogonal_basis(vectors: Iterable[Vector], limit: int | None = None) -> list[Vector]:
    """Exact Gram-Schmidt; returns primitive integer vectors spanning the same space.

    Stops early once ``limit`` vectors are found.
    """
    basis: list[Vector] = []
    for v in vectors:
        if len(basis) == limit:
            break
        r = _project_out(v, basis)
        if not is_zero(r):
            basis.append(primitive(r))
    return basis


@dataclass(frozen=True)
class Halfspace:
    """The closed set ``{x : <normal, x> <= offset}``."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", vector(self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if is_zero(self.normal):
            raise GeometryError("halfspace normal must be nonzero")

    def slack(self, x: Vector) -> Fraction:
        return self.offset - dot(self.normal, x)

    def contains(self, x: Vector) -> bool:
        return self.slack(x) >= 0

    def on_boundary(self, x: Vector) -> bool:
        return self.slack(x) == 0


@dataclass(frozen=True)
class Facet:
    halfspace: Halfspace
    vertices: tuple  # indices into Polytope.vertices


@dataclass(frozen=True, eq=False)
class Polytope:
    vertices: tuple
    origin: Vector
    basis: tuple
    facets: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.origin)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope(rank={self.rank}, vertices=[{pts}])"

    def coords(self, x: Vector) -> tuple:
        """Coordinates of ``x`` in the (orthogonal, non-normalized) affine frame."""
        d = sub(x, self.origin)
        return tuple(dot(d, b) / dot(b, b) for b in self.basis)

    def in_affine_hull(self, x: Vector) -> bool:
        return is_zero(_project_out(sub(x, self.origin), self.basis))

    def edges(self) -> list[tuple[int, int]]:
        if self.rank == 0:
            return []
        if self.rank == 1:
            return [(0, 1)]
        if self.rank == 2:
            return [tuple(sorted(f.vertices)) for f in self.facets]
        incident = [set() for _ in self.vertices]
        for k, f in enumerate(self.facets):
            for i in f.vertices:
                incident[i].add(k)
        out = []
        for i in range(len(self.vertices)):
            for j in range(i + 1, len(self.vertices)):
                if len(incident[i] & incident[j]) >= 2:
                    out.append((i, j))
        return out

    def ring(self) -> list[Vector]:
        """Vertices in boundary order (rank 2 only; other ranks return the vertex list)."""
        if self.rank != 2:
            return list(self.vertices)
        nxt = {}
        for f in self.facets:
            a, b = f.vertices
            nxt[a] = b
        order = [0]
        while len(order) < len(self.vertices):
            order.append(nxt[order[-1]])
        return [self.vertices[i] for i in order]


def affine_frame(points: Sequence[Vector]) -> tuple[Vector, list[Vector]]:
    origin = points[0]
    return origin, orthogonal_basis((sub(p, origin) for p in points[1:]), limit=len(origin))


def _det(m: list) -> Fraction:
    if len(m) == 1:
        return m[0][0]
    return sum(((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
                for j in range(len(m))), Fraction(0))


def _chart(basis: Sequence[Vector], d: int) -> tuple:
    """Coordinate indices whose projection is injective on span(basis)."""
    for cols in combinations(range(d), len(basis)):
        if _det([[b[c] for c in cols] for b in basis]) != 0:
            return cols
    raise GeometryError("basis is degenerate")


def _integral(vs: list) -> list[tuple]:
    """Scale rational tuples by a common positive integer into integer tuples."""
    den = 1
    for v in vs:
        for c in v:
            den = den * c.denominator // gcd(den, c.denominator)
    return [tuple(c.numerator * (den // c.denominator) for c in v) for v in vs]


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(pts: list) -> list:
    """Counter-clockwise hull of exact 2D points; collinear points are dropped."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _orient(a, b, c, p):
    return _det3(_isub(b, a), _isub(c, a), _isub(p, a))


def _isub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _idot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _iprimitive(v):
    g = reduce(gcd, (abs(x) for x in v))
    return tuple(x // g for x in v) if g else v


def _hull3(pts: list) -> list[tuple[tuple, list[int]]]:
    """Incremental hull of full-rank integer 3D points.

    Returns one ``(normal, indices)`` pair per facet, listing every input point
    on that facet plane.
    """
    n = len(pts)
    i0 = 0
    i1 = next(i for i in range(n) if pts[i] != pts[i0])
    d1 = _isub(pts[i1], pts[i0])
    i2 = next(i for i in range(n) if any(_cross3(d1, _isub(pts[i], pts[i0]))))
    i3 = next(i for i in range(n) if _orient(pts[i0], pts[i1], pts[i2], pts[i]) != 0)
    simplex = [i0, i1, i2, i3]
    # 4 * centroid keeps the orientation test in integers
    c4 = tuple(sum(pts[i][k] for i in simplex) for k in range(3))

    faces = []
    for a, b, c in ((i0, i1, i2), (i0, i1, i3), (i0, i2, i3), (i1, i2, i3)):
        nrm = _cross3(_isub(pts[b], pts[a]), _isub(pts[c], pts[a]))
        if _idot(nrm, c4) > 4 * _idot(nrm, pts[a]):
            b, c = c, b
        faces.append((a, b, c))

    for k in range(n):
        if k in simplex:
            continue
        p = pts[k]
        visible = [f for f in faces if _orient(pts[f[0]], pts[f[1]], pts[f[2]], p) > 0]
        if not visible:
            continue
        edges = set()
        for a, b, c in visible:
            edges.update(((a, b), (b, c), (c, a)))
        horizon = [(u, v) for (u, v) in edges if (v, u) not in edges]
        vis = set(visible)
        faces = [f for f in faces if f not in vis] + [(u, v, k) for (u, v) in horizon]

    planes: dict = {}
    for a, b, c in faces:
        nrm = _iprimitive(_cross3(_isub(pts[b], pts[a]), _isub(pts[c], pts[a])))
        planes.setdefault((nrm, _idot(nrm, pts[a])), None)
    return [(nrm, [i for i in range(n) if _idot(nrm, pts[i]) == off]) for nrm, off in planes]


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def halfspace_through(face_pts: Sequence[Vector], basis: Sequence[Vector], interior: Vector) -> Halfspace:
    """Hyperplane through ``face_pts`` inside span(basis), oriented to contain ``interior``."""
    dim = len(face_pts[0])
    if len(basis) == dim == 2:
        d = sub(face_pts[1], face_pts[0])
        n = primitive((d[1], -d[0]))
    elif len(basis) == dim == 3:
        a = sub(face_pts[1], face_pts[0])
        n = next(c for c in (_cross3(a, sub(p, face_pts[0])) for p in face_pts[2:]) if not is_zero(c))
        n = primitive(n)
    else:
        fdirs = orthogonal_basis((sub(p, face_pts[0]) for p in face_pts[1:]), limit=len(basis) - 1)
        for b in basis:
            n = _project_out(b, fdirs)
            if not is_zero(n):
                break
        n = primitive(n)
    off = dot(n, face_pts[0])
    if dot(n, interior) > off:
        n, off = neg(n), -off
    return Halfspace(n, off)


def _build(vertices: list[Vector], faces: list[list[int]], origin, basis) -> Polytope:
    """Sort vertices canonically and attach exact facet halfspaces."""
    order = sorted(range(len(vertices)), key=lambda i: vertices[i])
    verts = tuple(vertices[i] for i in order)
    remap = {old: new for new, old in enumerate(order)}
    centroid = scale(Fraction(1, len(verts)), reduce(add, verts))
    facets = []
    for face in faces:
        hs = halfspace_through([vertices[i] for i in face], basis, centroid)
        facets.append(Facet(hs, tuple(remap[i] for i in face)))
    return Polytope(verts, origin, tuple(basis), tuple(facets))


def convex_hull(points: Iterable) -> Polytope:
    pts = [vector(p) for p in points]
    if not pts:
        raise EmptyInputError("convex hull of an empty point set")
    d = len(pts[0])
    for p in pts:
        if len(p) != d:
            raise DimensionMismatchError("points have differing dimensions")
    pts = sorted(set(pts))
    origin, basis = affine_frame(pts)
    rank = len(basis)
    if rank > MAX_RANK:
        raise UnsupportedRankError(f"affine rank {rank} > {MAX_RANK} is not supported")
    if rank == 0:
        return Polytope((pts[0],), origin, ())

    cols = _chart(basis, d)
    local = _integral([tuple(p[c] for c in cols) for p in pts])
    if rank == 1:
        lo = min(range(len(pts)), key=lambda i: local[i])
        hi = max(range(len(pts)), key=lambda i: local[i])
        return Polytope(tuple(sorted((pts[lo], pts[hi]))), origin, tuple(basis))

    if rank == 2:
        ring = _monotone_chain(local)
        back = {c: p for c, p in zip(local, pts)}
        verts = [back[c] for c in ring]
        m = len(verts)
        faces = [[i, (i + 1) % m] for i in range(m)]
        return _build(verts, faces, origin, basis)

    groups = []
    vertex_ids: set[int] = set()
    for nrm, g in _hull3(local):
        # drop a coordinate the facet plane is not parallel to; the 2D shadow is affine-equivalent
        k = next(i for i, c in enumerate(nrm) if c)
        shadow = {tuple(c for i, c in enumerate(local[j]) if i != k): j for j in g}
        ring = [shadow[q] for q in _monotone_chain(list(shadow))]
        vertex_ids.update(ring)
        groups.append(ring)
    idx = sorted(vertex_ids)
    verts = [pts[i] for i in idx]
    pos = {i: k for k, i in enumerate(idx)}
    faces = [[pos[i] for i in g if i in pos] for g in groups]
    return _build(verts, faces, origin, basis)


def contains(poly: Polytope, x) -> bool:
    x = vector(x)
    if len(x) != poly.dim:
        raise DimensionMismatchError(f"point of dim {len(x)} vs polytope of dim {poly.dim}")
    if not poly.in_affine_hull(x):
        return False
    if poly.rank == 0:
        return x == poly.vertices[0]
    if poly.rank == 1:
        a, b = (poly.coords(v)[0] for v in poly.vertices)
        c = poly.coords(x)[0]
        return min(a, b) <= c <= max(a, b)
    return all(f.halfspace.contains(x) for f in poly.facets)


def cut(poly: Polytope, h: Halfspace) -> Polytope | None:
    """Exact intersection with a halfspace; ``None`` when the intersection is empty."""
    if len(h.normal) != poly.dim:
        raise DimensionMismatchError("halfspace and polytope dimensions differ")
    val = [dot(h.normal, v) - h.offset for v in poly.vertices]
    if all(f <= 0 for f in val):
        return poly
    kept = [v for v, f in zip(poly.vertices, val) if f <= 0]
    if not kept:
        return None
    new = []
    for i, j in poly.edges():
        fi, fj = val[i], val[j]
        if (fi < 0 < fj) or (fj < 0 < fi):
            u, v = poly.vertices[i], poly.vertices[j]
            new.append(add(u, scale(fi / (fi - fj), sub(v, u))))
    return convex_hull(kept + new)


def diameter(poly: Polytope) -> float:
    best = max((squared_distance(a, b) for a in poly.vertices for b in poly.vertices),
               default=Fraction(0))
    return float(best) ** 0.5
