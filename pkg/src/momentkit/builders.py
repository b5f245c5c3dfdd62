"""Exact fixed-point models for the worked examples.

Moment values of SU(n+1) are stored in the normalization
``xx*/|x|^2 - I/(n+1)``, dropping the global ``1/(2 pi i)`` that turns this
traceless Hermitian matrix into an element of su(n+1).  Everything kept is
real and rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (GeometryError, Polytope, Vector, add, convex_hull, cut, halfspace_through,
                       neg, primitive, scale, sub, vector)
from .lie import RootSystem, build_root_system, weyl_group
from .model import FixedPointDatum, HamiltonianModel, ray_parameter

# The stored moment value must be multiplied by this (and by 1/i) to give
# the physical moment map under the Killing-form identification.
MOMENT_PREFACTOR = "1/(2*pi)"


def _crat(z) -> tuple[Fraction, Fraction]:
    if isinstance(z, tuple):
        return Fraction(z[0]), Fraction(z[1])
    if isinstance(z, complex):
        return Fraction(z.real), Fraction(z.imag)
    return Fraction(z), Fraction(0)


@dataclass(frozen=True)
class HermitianMatrix:
    entries: tuple  # rows of (re, im) pairs

    @property
    def size(self) -> int:
        return len(self.entries)

    def diagonal(self) -> Vector:
        return tuple(self.entries[i][i][0] for i in range(self.size))

    def trace(self) -> Fraction:
        return sum(self.diagonal(), Fraction(0))

    def is_hermitian(self) -> bool:
        m = self.size
        return all(self.entries[i][j] == (self.entries[j][i][0], -self.entries[j][i][1])
                   for i in range(m) for j in range(m))

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def su_moment_hat(x: Sequence) -> HermitianMatrix:
    """``xx*/|x|^2 - I/(n+1)`` for a nonzero complex-rational vector ``x``."""
    z = [_crat(c) for c in x]
    norm2 = sum(a * a + b * b for a, b in z)
    if norm2 == 0:
        raise ValueError("su_moment_hat needs a nonzero vector")
    m = len(z)
    rows = []
    for i, (ai, bi) in enumerate(z):
        row = []
        for j, (aj, bj) in enumerate(z):
            re = (ai * aj + bi * bj) / norm2 - (Fraction(1, m) if i == j else 0)
            im = (bi * aj - ai * bj) / norm2
            row.append((re, im))
        rows.append(tuple(row))
    return HermitianMatrix(tuple(rows))


def _eps(i: int, d: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(d))


def cpn_model(n: int, t=1) -> HamiltonianModel:
    """Diagonal torus of SU(n+1) on CP^n with the form scaled by ``t``."""
    if n < 1:
        raise ValueError("cpn_model needs n >= 1")
    t = Fraction(t)
    if t == 0:
        raise ValueError("scale must be nonzero")
    d = n + 1
    pts = []
    for i in range(d):
        image = scale(t, su_moment_hat(_eps(i, d)).diagonal())
        others = [j for j in range(d) if j != i]
        weights = [sub(_eps(j, d), _eps(i, d)) for j in others]
        targets = {k: f"e{j + 1}" for k, j in enumerate(others)}
        pts.append(FixedPointDatum(f"e{i + 1}", image, weights, targets))
    rs = build_root_system("A", n) if n <= 3 else None
    return HamiltonianModel(n, d, n, pts, rs)


def negated_model(m: HamiltonianModel) -> HamiltonianModel:
    """The conjugate action: images and weights change sign, targets stay."""
    pts = [FixedPointDatum(p.id, neg(p.image), [neg(w) for w in p.weights], p.targets)
           for p in m.fixed_points]
    return HamiltonianModel(m.torus_rank, m.ambient_dim, m.half_dim, pts, m.root_system)


def product_model(m1: HamiltonianModel, m2: HamiltonianModel) -> HamiltonianModel:
    """Diagonal torus on the product: images add, weights concatenate."""
    if m1.ambient_dim != m2.ambient_dim:
        raise GeometryError("product_model needs a common ambient dimension")
    pts = []
    for p in m1.fixed_points:
        for q in m2.fixed_points:
            targets = {}
            for k, tid in (p.targets or {}).items():
                targets[k] = f"({tid},{q.id})"
            for k, tid in (q.targets or {}).items():
                targets[len(p.weights) + k] = f"({p.id},{tid})"
            pts.append(FixedPointDatum(f"({p.id},{q.id})", add(p.image, q.image),
                                       p.weights + q.weights, targets or None))
    rs = m1.root_system if m1.root_system == m2.root_system else None
    return HamiltonianModel(m1.torus_rank, m1.ambient_dim, m1.half_dim + m2.half_dim, pts, rs)


def _label(v: Vector) -> str:
    return "[" + ",".join(str(c) for c in v) + "]"


def coadjoint_orbit_model(rs: RootSystem, lam, scale_by=1) -> HamiltonianModel:
    """Torus-fixed data of the coadjoint orbit through the dominant point ``lam``.

    Fixed points are the Weyl orbit of ``lam``; the weights at ``nu`` are the
    roots pairing negatively with ``nu``, each pointing at the reflected point.
    """
    lam = vector(lam)
    if all(c == 0 for c in lam):
        raise ValueError("coadjoint orbit through 0 is a point; lambda must be nonzero")
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    group = weyl_group(rs)
    orbit = group.orbit(lam)
    pts = []
    for nu in orbit:
        weights, targets = [], {}
        for beta in rs.roots:
            c = sum((a * b for a, b in zip(nu, beta)), Fraction(0))
            if c < 0:
                bb = sum((b * b for b in beta), Fraction(0))
                refl = sub(nu, scale(2 * c / bb, beta))
                targets[len(weights)] = _label(refl)
                weights.append(beta)
        pts.append(FixedPointDatum(_label(nu), scale(scale_by, nu), weights, targets))
    half = len(pts[0].weights)
    return HamiltonianModel(rs.ambient_dim - (rs.family == "A"), rs.ambient_dim, half, pts, rs)


def so5_example(gamma=1, delta=1) -> HamiltonianModel:
    """Product of the SO(5) coadjoint orbits through (gamma, gamma) and (delta, 0)."""
    gamma, delta = Fraction(gamma), Fraction(delta)
    if gamma <= 0 or delta <= 0:
        raise ValueError("gamma and delta must be positive")
    b2 = build_root_system("B", 2)
    return product_model(coadjoint_orbit_model(b2, (gamma, gamma)),
                         coadjoint_orbit_model(b2, (delta, 0)))


def su3_natural(t=1, s=1) -> HamiltonianModel:
    """SU(3) acting diagonally on CP^2 x CP^2 with the form t*w0 + s*w0."""
    return product_model(cpn_model(2, t), cpn_model(2, s))


def su3_skew(t=1, s=1) -> HamiltonianModel:
    """SU(3) acting on CP^2 x CP^2 by (A, conj(A)); moment map t*mu(x) - s*mu(y)."""
    return product_model(cpn_model(2, t), negated_model(cpn_model(2, s)))


def su3_natural_kirwan(t=1, s=1) -> Polytope:
    """Kirwan polytope of the natural action.

    The spectrum of ``t xx* + s yy*`` for unit x, y is (l1, l2, 0) with
    l1 + l2 = t + s and max(t, s) <= l1 <= t + s, so after removing the
    trace the dominant values sweep a segment.
    """
    t, s = Fraction(t), Fraction(s)
    c = (t + s) / 3
    top = (t + s - c, -c, -c)
    hi, lo = max(t, s), min(t, s)
    return convex_hull([top, (hi - c, lo - c, -c)])


def su3_skew_kirwan(t=1, s=1) -> Polytope:
    """Kirwan polytope of the skew action.

    ``t xx* - s yy*`` has eigenvalues a >= 0 >= b with a + b = t - s; the
    dominant values sweep the segment between |<x, y>| = 0 and |<x, y>| = 1.
    """
    t, s = Fraction(t), Fraction(s)
    c = (t - s) / 3
    far = (t - c, -c, -s - c)
    near = sorted((t - s, Fraction(0), Fraction(0)), reverse=True)
    return convex_hull([far, tuple(x - c for x in near)])


def so5_kirwan(gamma=1, delta=1) -> Polytope:
    """Kirwan polytope of the SO(5) example inside the chamber ``0 <= y <= x``.

    With a = gamma and b = delta it is the triangle (a, a), (a + b, a),
    (a, a - b) when a >= b, and the quadrilateral (a, a), (a + b, a), (b, 0),
    (a, b - a) when a < b.  Found by sampling sums of the two orbits in so(5);
    the tests repeat that check.  Only ``delta <= 2 gamma`` is covered.
    """
    a, b = Fraction(gamma), Fraction(delta)
    if a <= 0 or b <= 0:
        raise ValueError("gamma and delta must be positive")
    if b > 2 * a:
        raise ValueError("so5_kirwan covers delta <= 2*gamma only")
    if a >= b:
        return convex_hull([(a, a), (a + b, a), (a, a - b)])
    return convex_hull([(a, a), (a + b, a), (b, Fraction(0)), (a, b - a)])


def blowup_cut(delta: Polytope, vertex, epsilon) -> Polytope:
    """Truncate ``delta`` at ``vertex``.

    The new facet passes through ``vertex + epsilon * e`` for the primitive
    integer direction ``e`` of every edge at the vertex, the usual lattice
    convention for a symplectic cut of size ``epsilon``.
    """
    v = vector(vertex)
    epsilon = Fraction(epsilon)
    if v not in delta.vertices:
        raise GeometryError(f"{v} is not a vertex")
    if delta.rank < 1:
        raise GeometryError("cannot truncate a point")
    if epsilon <= 0:
        raise GeometryError("epsilon must be positive")
    iv = delta.vertices.index(v)
    new_pts = []
    for i, j in delta.edges():
        if iv not in (i, j):
            continue
        w = delta.vertices[j if i == iv else i]
        e = primitive(sub(w, v))
        if epsilon >= ray_parameter(v, e, w):
            raise GeometryError(f"epsilon={epsilon} reaches past the neighbouring vertex {w}")
        new_pts.append(add(v, scale(epsilon, e)))
    if delta.rank == 1:
        return convex_hull([new_pts[0]] + [u for u in delta.vertices if u != v])
    others = [u for u in delta.vertices if u != v]
    centroid = scale(Fraction(1, len(others)), _vsum(others))
    h = halfspace_through(new_pts, delta.basis, centroid)
    if any(not h.on_boundary(p) for p in new_pts):
        raise GeometryError("vertex is not simple; the truncation points are not coplanar")
    if h.contains(v) or any(not h.contains(u) or h.on_boundary(u) for u in others):
        raise GeometryError(f"epsilon={epsilon} separates more than the chosen vertex")
    return cut(delta, h)


def _vsum(vs):
    acc = vs[0]
    for u in vs[1:]:
        acc = add(acc, u)
    return acc


def su3_natural_blowup(t=1, s=1, eps=Fraction(1, 4)) -> HamiltonianModel:
    """CP^2 x CP^2 blown up along the diagonal orbit, as fixed-point data.

    The diagonal fixed point (e_i, e_i) is replaced by two points ``Ei.j``,
    one per normal weight eps_j - eps_i, with image moved by ``eps`` along it.
    Weights at ``Ei.j``: the diagonal's tangent weights, the fibre weight
    eps_k - eps_j and the tautological weight eps_j - eps_i.
    """
    t, s, eps = Fraction(t), Fraction(s), Fraction(eps)
    if not 0 < eps < min(t, s) / 2:
        raise ValueError("blow-up size must satisfy 0 < eps < min(t, s)/2")
    base = su3_natural(t, s)
    e = [_eps(i, 3) for i in range(3)]

    def exc(i, j):
        return f"E{i + 1}.{j + 1}"

    pts = []
    for p in base.fixed_points:
        i, j = (int(c) - 1 for c in p.id.strip("()").replace("e", "").split(","))
        if i == j:
            continue
        targets = dict(p.targets)
        for k, tid in targets.items():
            a, b = (int(c) - 1 for c in tid.strip("()").replace("e", "").split(","))
            if a == b:
                # the old target was blown up; the sphere now ends on the exceptional divisor
                other = i if k < 2 else j
                targets[k] = exc(a, other)
        pts.append(FixedPointDatum(p.id, p.image, p.weights, targets))
    for i in range(3):
        top = scale(t + s, su_moment_hat(e[i]).diagonal())
        for j in range(3):
            if j == i:
                continue
            k = 3 - i - j
            beta = sub(e[j], e[i])
            weights = [beta, sub(e[k], e[i]), sub(e[k], e[j]), beta]
            targets = {0: exc(j, i), 1: exc(k, j), 2: exc(i, k), 3: f"(e{i + 1},e{j + 1})"}
            pts.append(FixedPointDatum(exc(i, j), add(top, scale(eps, beta)), weights, targets))
    return HamiltonianModel(2, 3, 4, pts, base.root_system)


EXAMPLES = {
    "su3-natural": lambda t=1, s=1, **_: su3_natural(t, s),
    "su3-skew": lambda t=1, s=1, **_: su3_skew(t, s),
    "so5": lambda gamma=1, delta=1, **_: so5_example(gamma, delta),
    "cpn": lambda n=2, t=1, **_: cpn_model(n, t),
    "su3-blowup": lambda t=1, s=1, eps=Fraction(1, 4), **_: su3_natural_blowup(t, s, eps),
    "su3-natural-kirwan": lambda t=1, s=1, **_: su3_natural_kirwan(t, s),
    "su3-skew-kirwan": lambda t=1, s=1, **_: su3_skew_kirwan(t, s),
    "so5-kirwan": lambda gamma=1, delta=1, **_: so5_kirwan(gamma, delta),
}
