"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import numpy as np

from momentkit import builders as b
from momentkit.geometry import Halfspace, contains, convex_hull, cut, diameter
from momentkit.kirwan import classify_vertices, kirwan_from_images, max_norm_vertices, mu_T_from_kirwan, reflective
from momentkit.lie import build_root_system, stabilizer, to_dominant, weyl_group
from momentkit.model import Generator, betti_invariance, deformation_report, morse_report, sigma
from momentkit.numeric import run_sampling

RESULTS: dict[int, str] = {}
A2, B2 = build_root_system("A", 2), build_root_system("B", 2)
WA2, WB2 = weyl_group(A2), weyl_group(B2)
GRID = [(F(a, 2), F(c, 2)) for a in (1, 2, 3) for c in (1, 2, 3)]


@contextmanager
def criterion(n: int, limit: float, what: str):
    start = time.perf_counter()
    detail = ""
    try:
        yield
    except AssertionError as exc:
        detail = f": {str(exc).splitlines()[0]}" if str(exc) else ""
        status = "FAIL"
        raise
    else:
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        if status == "PASS" and elapsed >= limit:
            status, detail = "FAIL", f": took {elapsed:.2f}s, limit {limit:g}s"
        RESULTS[n] = f"criterion {n:2d} {status} ({elapsed:.2f}s < {limit:g}s) {what}{detail}"
        print(RESULTS[n])
    if status == "FAIL":
        raise AssertionError(RESULTS[n])


def test_criterion_01_exact_matrix_values():
    rng = random.Random(1)
    with criterion(1, 1, "su3_natural images of (e1,e1) and (e1,e2)"):
        for _ in range(50):
            t, s = F(rng.randint(1, 99), rng.randint(1, 99)), F(rng.randint(1, 99), rng.randint(1, 99))
            m = b.su3_natural(t, s)
            assert m.point("(e1,e1)").image == ((t + s) / 3 * 2, -(t + s) / 3, -(t + s) / 3)
            assert m.point("(e1,e2)").image == ((2 * t - s) / 3, (2 * s - t) / 3, -(t + s) / 3)


def test_criterion_02_betti_reproduction():
    with criterion(2, 1, "betti [1,2,3,2,1] for SU(3) actions, b2=2 and sum 16 for SO(5)"):
        for m in (b.su3_natural(1, 1), b.su3_skew(1, 1)):
            inv = betti_invariance(m, 10, seed=0)
            assert inv and len(inv.generators) >= 10
            assert inv.betti[0] == (1, 2, 3, 2, 1)
        for g in (F(1), F(5, 3)):
            inv = betti_invariance(b.so5_example(g, g), 10, seed=0)
            assert inv and inv.betti[0][1] == 2 and sum(inv.betti[0]) == 16


def test_criterion_03_non_injectivity():
    with criterion(3, 1, "two preimages of (g,0) differ in one weight and in sigma"):
        for g in (F(1), F(7, 2)):
            m = b.so5_example(g, g)
            pre = [p for p in m.fixed_points if p.image == (g, 0)]
            assert len(pre) == 2
            w0, w1 = (sorted(p.weights) for p in pre)
            assert len([w for w in w0 if w not in w1]) == 1 and len([w for w in w1 if w not in w0]) == 1
            gens = betti_invariance(m, 10, seed=2).generators
            for xi in gens:
                by_image: dict = {}
                for p in m.fixed_points:
                    by_image.setdefault(p.image, set()).add(sigma(p, xi))
                assert any(len(v) > 1 for v in by_image.values()), f"no split sigma under {xi}"


def test_criterion_04_weyl_hull_identity():
    with criterion(4, 5, "Weyl hull of the chamber cut equals the image hull"):
        for g in (F(1), F(3, 2)):
            m = b.so5_example(g, g)
            hull = convex_hull(m.images())
            octagon = {(x * g * a, y * g * c) for a, c in ((2, 1), (1, 2)) for x in (1, -1) for y in (1, -1)}
            assert set(hull.vertices) == octagon
            assert mu_T_from_kirwan(kirwan_from_images(m, B2), WB2) == hull
        for build in (b.su3_natural, b.su3_skew):
            for t, s in GRID:
                m = build(t, s)
                assert mu_T_from_kirwan(kirwan_from_images(m, A2), WA2) == convex_hull(m.images()), (build, t, s)


def test_criterion_05_deformation_coordinates():
    xi = Generator((1, 0, -1))
    with criterion(5, 1, "index-one rows: distances {2t^2, 2s^2}, count b2, multi-hit at (2,1)"):
        for t, s in GRID + [(F(2), F(1))]:
            rep = deformation_report(b.su3_natural(t, s), xi)
            assert len(rep.rows) == 2
            assert sorted(rep.squared_distances()) == sorted([2 * t * t, 2 * s * s])
        for name, build in b.EXAMPLES.items():
            m = build()
            if not hasattr(m, "fixed_points"):
                continue
            rep = morse_report(m)
            assert len(deformation_report(m, rep.xi).rows) == rep.betti[1], name
        rows = deformation_report(b.su3_natural(2, 1), xi).rows
        multi = [r for r in rows if len(r.hits) == 2]
        assert len(multi) == 1 and multi[0].designated == "(e3,e3)" and multi[0].squared_distance == 8


def test_criterion_06_skew_degeneracy():
    with criterion(6, 1, "skew action: diagonal points at 0 with sigma 2, index-one ids"):
        for t in (F(1, 2), F(1), F(3, 2)):
            m = b.su3_skew(t, t)
            zero = sorted(p.id for p in m.fixed_points if not any(p.image))
            assert zero == ["(e1,e1)", "(e2,e2)", "(e3,e3)"]
            for xi in betti_invariance(m, 10, seed=3).generators:
                assert all(sigma(m.point(pid), xi) == 2 for pid in zero)
            rows = deformation_report(m, Generator((1, 0, -1))).rows
            ids = {r.id for r in rows}
            assert len(rows) == 2 and ids <= {"(e2,e1)", "(e3,e2)"}
            basis = np.eye(3, dtype=complex)
            for pid in ids:
                i, j = (int(c) - 1 for c in pid.strip("()").replace("e", "").split(","))
                assert np.vdot(np.conj(basis[j]), basis[i]) == 0


def test_criterion_07_reflective_classification():
    with criterion(7, 1, "q stays on the wall unmatched; max-norm vertices non-reflective and certified"):
        for t, s in ((F(1), F(1)), (F(3, 2), F(1)), (F(1), F(3, 2)), (F(2), F(3))):
            m = b.so5_example(t, s)
            rows = {r.vertex: r for r in classify_vertices(b.so5_kirwan(t, s), m, B2, WB2)}
            q = rows[(t, t)]
            assert q.on_wall and q.matched == (), f"q at {(t, s)}"
        failures = []
        cases = [("su3_natural", b.su3_natural_kirwan(t, s), b.su3_natural(t, s), A2, WA2) for t, s in GRID]
        cases += [("su3_skew", b.su3_skew_kirwan(t, s), b.su3_skew(t, s), A2, WA2) for t, s in GRID if t != s]
        cases += [("so5", b.so5_kirwan(t, s), b.so5_example(t, s), B2, WB2) for t, s in GRID if s <= 2 * t]
        for name, delta, m, rs, w in cases:
            rows = {r.vertex: r for r in classify_vertices(delta, m, rs, w)}
            for v in max_norm_vertices(delta):
                if rows[v].reflective or not rows[v].certified:
                    failures.append(f"{name} {tuple(str(c) for c in v)}")
        assert not failures, f"reflective max-norm vertices: {len(failures)} of {len(cases)} cases, e.g. {failures[0]}"


def test_criterion_08_numerical_oracle():
    with criterion(8, 120, "1e5 samples per grid point: membership 1.0, Hausdorff <= 5% of diameter"):
        for action in ("natural", "skew"):
            start = time.perf_counter()
            for t, s in GRID:
                rep = run_sampling(action, t, s, 100_000, seed=0)
                assert rep.fraction_inside == 1.0, (action, t, s, rep.fraction_inside)
                assert rep.hausdorff <= 0.05 * rep.diameter, (action, t, s, rep.hausdorff / rep.diameter)
            assert time.perf_counter() - start < 60, f"{action} family exceeded 60s"


def test_criterion_09_property_suite():
    rng = random.Random(9)
    n = 1000

    def rat():
        return F(rng.randint(-30, 30), rng.randint(1, 6))

    with criterion(9, 30, "hull, facet, cut, orbit-stabilizer and dominance properties, 1000 cases each"):
        for _ in range(n):
            dim = rng.choice((2, 3))
            pts = [tuple(rat() for _ in range(dim)) for _ in range(rng.randint(1, 8))]
            p = convex_hull(pts)
            assert convex_hull(p.vertices) == p
            assert all(contains(p, x) for x in pts)
            for f in p.facets:
                tight = {i for i, v in enumerate(p.vertices) if f.halfspace.on_boundary(v)}
                assert all(f.halfspace.contains(v) for v in p.vertices) and tight == set(f.vertices)
        for _ in range(n):
            p = convex_hull([(rat(), rat()) for _ in range(rng.randint(1, 8))])
            normal = (rat(), rat())
            if normal == (0, 0):
                normal = (F(1), F(0))
            h = Halfspace(normal, rat())
            r = cut(p, h)
            if r is None:
                assert not any(h.contains(v) for v in p.vertices)
            else:
                assert all(contains(p, v) and h.contains(v) for v in r.vertices)
        for _ in range(n):
            rs, w = rng.choice(((A2, WA2), (B2, WB2)))
            if rs is A2:
                a, c = rng.randint(-3, 3), rng.randint(-3, 3)
                v = (F(a), F(c), F(-a - c))
            else:
                v = (F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
            assert len(w.orbit(v)) * stabilizer(w, v).order == w.order
            _, dom = to_dominant(rs, v)
            g = w.elements[rng.randrange(w.order)]
            assert to_dominant(rs, g.apply(v))[1] == dom and rs.is_dominant(dom)


def test_criterion_10_blowup_combinatorics():
    with criterion(10, 1, "truncating a triangle vertex adds one facet; b2 goes from 2 to 3"):
        eps = F(1, 4)
        base = b.su3_natural(1, 1)
        tri = convex_hull(base.images())
        top = base.point("(e1,e1)").image
        blown = b.blowup_cut(tri, top, eps)
        assert len(blown.facets) == len(tri.facets) + 1
        new = set(blown.vertices) - set(tri.vertices)
        ext = b.su3_natural_blowup(1, 1, eps)
        assert len(new) == 2 and all(ext.ids_at(v) for v in new)
        xi = Generator((-1, 0, 1))
        before = deformation_report(base, xi).rows
        after = deformation_report(ext, xi).rows
        assert (len(before), len(after)) == (2, 3), (len(before), len(after))
        assert any(r.image in new for r in after)
        assert morse_report(ext, xi).betti[1] == 3 and diameter(blown) == diameter(tri)


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
