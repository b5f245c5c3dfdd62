"""Command-line front end: ``momentkit <subcommand> ...``.

Exit codes: 0 success, 1 validation violations, 2 usage, parse, missing-file
or unsupported-rank errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import builders, io, kirwan, model as mdl
from .geometry import GeometryError, Halfspace, Polytope, UnsupportedRankError, convex_hull, cut
from .lie import RootSystemError, parse_group, weyl_group
from .render import FigureSpec, RenderError, render

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _point(text: str):
    try:
        return io.parse_point(text)
    except io.FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vec(v) -> str:
    return "[" + ",".join(str(c) for c in v) + "]"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _group(args, m=None):
    if getattr(args, "group", None):
        return parse_group(args.group)
    if m is not None and m.root_system is not None:
        return m.root_system
    raise UsageError("no root system: pass --group")


def _xi(args, m):
    if args.xi is None:
        return None
    g = mdl.Generator(args.xi)
    if len(g.xi) != m.ambient_dim:
        raise UsageError(f"--xi has {len(g.xi)} components, the model needs {m.ambient_dim}")
    if not g.is_valid_for(m.all_weights()):
        raise UsageError(f"--xi {_vec(g.xi)} pairs to zero with some weight")
    return g


def cmd_validate(args) -> int:
    m = io.load_model(args.model)
    violations = mdl.validate_model(m)
    for v in violations:
        print(v)
    if violations:
        print(f"{len(violations)} violation(s)")
        return EXIT_VIOLATIONS
    print(f"valid: {len(m.fixed_points)} fixed points")
    return EXIT_OK


def cmd_betti(args) -> int:
    m = io.load_model(args.model)
    rep = mdl.morse_report(m, _xi(args, m))
    print(f"xi {_vec(rep.xi.xi)}")
    print("betti [" + ",".join(str(b) for b in rep.betti) + "]")
    for w in rep.warnings:
        print(f"warning: {w}")
    if args.trials:
        inv = mdl.betti_invariance(m, args.trials, args.seed)
        print(f"invariant over {len(inv.generators)} generators: {'yes' if inv else 'no'}")
    return EXIT_OK


def cmd_deform(args) -> int:
    m = io.load_model(args.model)
    rep = mdl.deformation_report(m, _xi(args, m))
    print(f"xi {_vec(rep.xi.xi)}")
    for r in rep.rows:
        hits = " ".join(f"{pid}@{u}" for u, pid in r.hits)
        d2 = "?" if r.squared_distance is None else str(r.squared_distance)
        print(f"{r.id} weight {_vec(r.weight)} -> {r.designated or '?'} d^2={d2} hits: {hits}")
    print(f"{len(rep.rows)} coordinate(s)")
    return EXIT_OK


def cmd_hull(args) -> int:
    m = io.load_model(args.model)
    _emit(io.dumps(io.polytope_to_json(convex_hull(m.images()))), args.out)
    return EXIT_OK


def cmd_weyl_hull(args) -> int:
    rs = parse_group(args.group)
    delta = io.load_polytope(args.delta)
    poly = kirwan.mu_T_from_kirwan(delta, weyl_group(rs))
    _emit(io.dumps(io.polytope_to_json(poly)), args.out)
    return EXIT_OK


def cmd_reflective(args) -> int:
    rs = _group(args)
    delta = io.load_polytope(args.delta)
    res = kirwan.reflective(delta, args.point, rs, weyl_group(rs))
    print(f"reflective {'yes' if res else 'no'} (|W_q| = {res.stabilizer_order})")
    for kind, _, msg in res.failures:
        print(f"  {kind}: {msg}")
    return EXIT_OK


def cmd_classify(args) -> int:
    m = io.load_model(args.model)
    rs = _group(args, m)
    delta = io.load_polytope(args.delta) if args.delta else kirwan.kirwan_from_images(m, rs)
    rows = kirwan.classify_vertices(delta, m, rs, weyl_group(rs))
    for r in rows:
        flags = [f"wall={'yes' if r.on_wall else 'no'}",
                 f"reflective={'yes' if r.reflective else 'no'}",
                 f"certified={'yes' if r.certified else 'no'}"]
        matched = ",".join(r.matched) or "-"
        note = "  DISCREPANCY" if r.discrepancy else ""
        print(f"{_vec(r.vertex)} {' '.join(flags)} matched={matched}{note}")
    return EXIT_VIOLATIONS if any(r.discrepancy for r in rows) else EXIT_OK


def cmd_example(args) -> int:
    params = {k: getattr(args, k) for k in ("t", "s", "gamma", "delta", "n", "eps")
              if getattr(args, k) is not None}
    if "n" in params:
        params["n"] = int(params["n"])
    obj = builders.EXAMPLES[args.name](**params)
    doc = io.polytope_to_json(obj) if isinstance(obj, Polytope) else io.model_to_json(obj)
    _emit(io.dumps(doc), args.out)
    return EXIT_OK


def cmd_cut(args) -> int:
    poly = io.load_polytope(args.polytope)
    if args.blowup is not None:
        if args.eps is None:
            raise UsageError("--blowup needs --eps")
        result = builders.blowup_cut(poly, args.blowup, args.eps)
    elif args.halfspace is not None:
        normal, _, offset = args.halfspace.partition("<=")
        if not offset:
            raise UsageError("--halfspace takes the form 'n1,n2,...<=c'")
        result = cut(poly, Halfspace(io.parse_point(normal), io.parse_rat(offset.strip())))
    else:
        result = kirwan.chamber_section(poly, _group(args))
    if result is None:
        print("empty intersection", file=sys.stderr)
        return EXIT_VIOLATIONS
    _emit(io.dumps(io.polytope_to_json(result)), args.out)
    return EXIT_OK


def cmd_sample(args) -> int:
    from .numeric import run_sampling

    rep = run_sampling(args.action, args.t, args.s, args.count, args.seed, args.workers,
                       args.tol, args.target)
    _emit(json.dumps(rep.to_json(), sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _figure_layer(path):
    """A model file gives its hull plus labelled dots; a polytope file gives the hull only."""
    doc = io._load(path)
    if isinstance(doc, dict) and "fixed_points" in doc:
        m = io.model_from_json(doc)
        return convex_hull(m.images()), [(p.image, p.id) for p in m.fixed_points], m.root_system
    return io.polytope_from_json(doc), [], None


def cmd_render(args) -> int:
    base, points, rs = _figure_layer(args.base)
    fig = FigureSpec(polytopes=[(base, "solid")], points=points if not args.no_labels else
                     [(v, "") for v, _ in points], title=args.title or "")
    for path in args.overlay or []:
        poly, _, _ = _figure_layer(path)
        fig.polytopes.append((poly, "dashed"))
    if args.walls:
        fig.root_system = parse_group(args.group) if args.group else rs
        if fig.root_system is None:
            raise UsageError("--walls needs a root system (model file or --group)")
    _emit(render(fig), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="momentkit",
                                description="Moment polytopes and fixed-point models of torus actions.")
    sub = p.add_subparsers(dest="command", required=True)

    def model_cmd(name, func, help_, xi=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("model", help="model JSON file")
        if xi:
            sp.add_argument("--xi", type=_point, help="generator, e.g. 1,0,-1")
        sp.set_defaults(func=func)
        return sp

    model_cmd("validate", cmd_validate, "check weight counts, edge rays, targets and convexity")
    sp = model_cmd("betti", cmd_betti, "Betti numbers from Morse indices", xi=True)
    sp.add_argument("--trials", type=int, default=0, help="also check invariance over N generators")
    sp.add_argument("--seed", type=int, default=None)
    model_cmd("deform", cmd_deform, "deformation coordinates at index-one points", xi=True)
    sp = model_cmd("hull", cmd_hull, "convex hull of the fixed-point images")
    sp.add_argument("--out")

    sp = sub.add_parser("weyl-hull", help="hull of the Weyl reflections of a polytope")
    sp.add_argument("--group", required=True, help="root system label such as A2 or B2")
    sp.add_argument("--delta", required=True, help="polytope JSON file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_weyl_hull)

    sp = sub.add_parser("reflective", help="test whether a polytope is reflective at a point")
    sp.add_argument("--group", required=True)
    sp.add_argument("--delta", required=True, help="polytope JSON file")
    sp.add_argument("--point", required=True, type=_point)
    sp.set_defaults(func=cmd_reflective)

    sp = model_cmd("classify", cmd_classify, "classify the vertices of a chamber polytope")
    sp.add_argument("--delta", help="polytope JSON (default: images cut by the chamber)")
    sp.add_argument("--group")

    sp = sub.add_parser("example", help="write a built-in example model or Kirwan polytope")
    sp.add_argument("name", choices=sorted(builders.EXAMPLES))
    for flag in ("t", "s", "gamma", "delta", "eps"):
        sp.add_argument(f"--{flag}", type=_rational)
    sp.add_argument("--n", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("cut", help="cut a polytope by the chamber, a halfspace, or at a vertex")
    sp.add_argument("polytope", help="polytope or model JSON file")
    sp.add_argument("--group")
    sp.add_argument("--halfspace", help="'n1,n2,...<=c'")
    sp.add_argument("--blowup", type=_point, metavar="VERTEX")
    sp.add_argument("--eps", type=_rational)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cut)

    sp = sub.add_parser("sample", help="Monte-Carlo check of the SU(3) examples")
    sp.add_argument("action", choices=["natural", "skew"])
    sp.add_argument("--t", type=_rational, default=Fraction(1))
    sp.add_argument("--s", type=_rational, default=Fraction(1))
    sp.add_argument("--count", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--target", choices=["torus", "kirwan"], default="torus")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("render", help="draw a polytope or model as SVG")
    sp.add_argument("base", help="polytope or model JSON, drawn solid")
    sp.add_argument("--overlay", action="append", help="extra file drawn dashed (repeatable)")
    sp.add_argument("--walls", action="store_true", help="draw the Weyl walls")
    sp.add_argument("--group")
    sp.add_argument("--no-labels", action="store_true")
    sp.add_argument("--title")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
    except io.FormatError as exc:
        print(f"error: parse failure: {exc}", file=sys.stderr)
    except UnsupportedRankError as exc:
        print(f"error: unsupported rank: {exc}", file=sys.stderr)
    except (UsageError, RootSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (GeometryError, RenderError, mdl.ModelError, mdl.ModelInconsistencyError,
            mdl.InvalidGeneratorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
