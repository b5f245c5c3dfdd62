"""Passing between the Kirwan polytope and the torus moment polytope.

``mu_T_from_kirwan`` rebuilds the torus image as the hull of the Weyl
reflections of the Kirwan polytope.  ``reflective`` and
``classify_vertices`` decide which points of the Kirwan polytope are
forced to be images of torus-fixed points.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import (GeometryError, Halfspace, Polytope, Vector, contains, convex_hull, cut,
                       dot, primitive, sub, vector)
from .lie import RootSystem, WeylGroup, stabilizer
from .model import HamiltonianModel


def mu_T_from_kirwan(delta: Polytope, group: WeylGroup) -> Polytope:
    if delta.dim != group.root_system.ambient_dim:
        raise GeometryError("polytope and Weyl group live in different dimensions")
    return convex_hull(w.apply(v) for v in delta.vertices for w in group.elements)


def chamber_section(poly: Polytope, rs: RootSystem) -> Polytope | None:
    """Intersection with the closed dominant chamber."""
    for h in rs.chamber_halfspaces():
        if poly is None:
            return None
        poly = cut(poly, h)
    return poly


def kirwan_from_images(m: HamiltonianModel, rs: RootSystem | None = None) -> Polytope | None:
    """``conv(fixed images)`` met with the dominant chamber.

    Only a stand-in for the true Kirwan polytope: it agrees with it after
    Weyl symmetrization, not necessarily before.
    """
    rs = rs or m.root_system
    return chamber_section(convex_hull(m.images()), rs)


@dataclass(frozen=True)
class Face:
    vertices: tuple
    hyperplane: Halfspace


def faces_through(delta: Polytope, q: Vector) -> list[Face]:
    """Codimension-one faces (relative to the affine hull) whose closure contains ``q``."""
    if delta.rank == 0:
        return []
    if delta.rank == 1:
        a, b = delta.vertices
        out = []
        for v, other in ((a, b), (b, a)):
            if v == q:
                n = primitive(sub(v, other))
                out.append(Face((v,), Halfspace(n, dot(n, v))))
        return out
    return [Face(tuple(delta.vertices[i] for i in f.vertices), f.halfspace)
            for f in delta.facets if f.halfspace.on_boundary(q)]


def _unoriented(normal: Vector, offset) -> tuple:
    n = primitive(normal)
    k = next(c for c in normal if c)
    lead = next(c for c in n if c)
    off = offset * lead / k
    if lead < 0:
        n, off = tuple(-c for c in n), -off
    return n, off


@dataclass(frozen=True)
class ReflectiveResult:
    reflective: bool
    stabilizer_order: int
    failures: tuple = field(default=())

    def __bool__(self):
        return self.reflective


def reflective(delta: Polytope, q, rs: RootSystem, group: WeylGroup) -> ReflectiveResult:
    """Whether ``delta`` is reflective at ``q``.

    Condition 1: the hyperplanes of the codimension-one faces through ``q``
    form a set invariant under the stabilizer W_q.  Condition 2: every such
    face has its relative interior in the open dominant chamber.  Faces are
    taken relative to the affine hull of ``delta``, so the faces of a segment
    are its endpoints.
    """
    q = vector(q)
    if not contains(delta, q):
        raise GeometryError(f"point {q} is not in the polytope")
    faces = faces_through(delta, q)
    wq = stabilizer(group, q)
    failures = []

    planes = {_unoriented(f.hyperplane.normal, f.hyperplane.offset) for f in faces}
    for w in wq.elements:
        for n, off in sorted(planes):
            image = _unoriented(w.apply(n), off)
            if image not in planes:
                failures.append(("stabilizer-invariance", (n, off),
                                 f"hyperplane <{n}, x> = {off} maps off the face set"))
                break

    for f in faces:
        for a in rs.simple_roots:
            vals = [dot(a, v) for v in f.vertices]
            if min(vals) < 0 or max(vals) == 0:
                failures.append(("open-chamber", f.vertices,
                                 f"open face leaves the open chamber across the wall of {a}"))
                break
    return ReflectiveResult(not failures, wq.order, tuple(failures))


@dataclass(frozen=True)
class VertexClass:
    vertex: Vector
    on_wall: bool
    reflective: bool
    certified: bool
    matched: tuple
    discrepancy: bool


def classify_vertices(delta: Polytope, m: HamiltonianModel, rs: RootSystem,
                      group: WeylGroup) -> list[VertexClass]:
    out = []
    for v in delta.vertices:
        res = reflective(delta, v, rs, group)
        certified = (not res.reflective) or rs.in_open_chamber(v)
        matched = tuple(m.ids_at(v))
        out.append(VertexClass(v, bool(rs.walls_through(v)), res.reflective, certified,
                               matched, certified and not matched))
    return out


def max_norm_vertices(delta: Polytope) -> list[Vector]:
    best = max(dot(v, v) for v in delta.vertices)
    return [v for v in delta.vertices if dot(v, v) == best]
