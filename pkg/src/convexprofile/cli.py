"""Batch front door: load geometry, classify, check, render.

Every subcommand emits one JSON report (stdout or --out) with the same
shape: {"command", "inputs", "config", "results"}. Exit codes: 0 all
good, 1 a checker produced a (satisfied, fails) counterexample, 2 input
or schema error (structured JSON on stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .core import Point
from .epigraph import Epigraph1D
from .errors import ConvexProfileError, SchemaError
from .geometry_io import (
    dump_geometry,
    instance_digest,
    load_geometry_file,
    parse_rational,
    point_to_json,
)
from .polyhedra import (
    HPolyhedron,
    VPolytope,
    extreme_points,
    hull_equal,
    is_bounded,
    is_empty,
    profile,
)
from .regions2d import (
    Disk,
    DiskComplement,
    PointedOpenBox,
    PolygonRegion,
    SimplePolygon,
    boundary_probe_points,
    circle_points,
    classify_pair,
    convexity_oracle,
    is_convex_by_pairs,
    is_starshaped,
    kernel,
)
from .svg_render import render_svg
from .theorems import (
    THEOREM_IDS,
    check_boundary_hull,
    check_krein_milman,
    classify_pair_polyhedron,
    polyhedron_boundary_probes,
    run_suite,
)

DEFAULT_SEED = 0xC0FFEE
REGION_TYPES = (PolygonRegion, Disk, DiskComplement, PointedOpenBox, SimplePolygon)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="convexprofile",
        description="Exact convex-geometry classifiers and theorem checkers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", default=None, help="RNG seed (int, 0x.. ok)")
        p.add_argument("--samples", type=int, default=50,
                       help="interior/member samples per instance")
        p.add_argument("--probe-density", type=int, default=32,
                       help="boundary samples per edge or curve")
        p.add_argument("--out", default=None, help="write the report here")

    p = sub.add_parser("classify", help="classify boundary pairs")
    p.add_argument("file")
    p.add_argument(
        "--pairs",
        default="vertices",
        help="'vertices', 'all', or a path to a JSON pair list",
    )
    common(p)

    p = sub.add_parser("convexity", help="pairwise convexity test")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("kernel", help="kernel of a simple polygon")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("extremes", help="extreme points / profile")
    p.add_argument("file")
    common(p)

    p = sub.add_parser(
        "reconstruct", help="boundary-hull / extreme-hull reconstruction checks"
    )
    p.add_argument("file")
    common(p)

    p = sub.add_parser("check", help="run a theorem suite")
    p.add_argument("theorem", help="|".join(THEOREM_IDS) + "|all")
    p.add_argument("--instances", type=int, default=25)
    common(p)

    p = sub.add_parser("render", help="render a 2D instance to SVG")
    p.add_argument("file")
    p.add_argument("--svg", required=True, help="output SVG path")
    p.add_argument(
        "--overlays",
        default="",
        help="comma list from: pairs,kernel,extremes",
    )
    common(p)
    return parser


def _resolve_seed(args):
    raw = os.environ.get("CONVEX_PROFILE_SEED") or args.seed
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(str(raw), 0)
    except ValueError:
        raise SchemaError(f"not a valid seed: {raw!r}", "$.seed") from None


def _config_dict(args, seed):
    return {
        "seed": seed,
        "samples": args.samples,
        "probe_density": args.probe_density,
    }


def _emit(report, args):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_pairs_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"no such file: {path}", "$") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "$") from None
    if isinstance(doc, dict):
        doc = doc.get("pairs")
    if not isinstance(doc, list):
        raise SchemaError("expected a list of point pairs", "$.pairs")
    pairs = []
    for i, entry in enumerate(doc):
        path_i = f"$.pairs[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError("each pair is [[x,y],[x,y]]", path_i)
        pts = []
        for j, raw in enumerate(entry):
            if not isinstance(raw, list) or len(raw) != 2:
                raise SchemaError("points are [x, y]", f"{path_i}[{j}]")
            pts.append(
                Point(
                    [
                        parse_rational(c, f"{path_i}[{j}][{k}]")
                        for k, c in enumerate(raw)
                    ]
                )
            )
        pairs.append((pts[0], pts[1]))
    return pairs


def _probe_points(instance, mode, density):
    if isinstance(instance, HPolyhedron):
        probes = polyhedron_boundary_probes(instance)
        if mode == "vertices":
            verts = extreme_points(instance)
            return list(verts) if verts else probes
        return probes
    if mode == "vertices":
        if isinstance(instance, PolygonRegion):
            pts = list(instance.outer.vertices)
            for h in instance.holes:
                pts.extend(h.vertices)
            return pts
        if isinstance(instance, SimplePolygon):
            return list(instance.vertices)
        if isinstance(instance, PointedOpenBox):
            return list(PointedOpenBox.CORNERS)
        return circle_points(instance.center, instance.radius, density)
    return boundary_probe_points(instance, density)


def _as_region(instance):
    return (
        PolygonRegion(instance)
        if isinstance(instance, SimplePolygon)
        else instance
    )


def _cmd_classify(args):
    instance = load_geometry_file(args.file)
    if isinstance(instance, (VPolytope, Epigraph1D)):
        raise SchemaError("classify needs a region or an h-polyhedron", "$.kind")
    import itertools

    if args.pairs in ("vertices", "all"):
        points = _probe_points(instance, args.pairs, args.probe_density)
        pairs = list(itertools.combinations(points, 2))
    else:
        pairs = _load_pairs_file(args.pairs)
    results = []
    for p, q in pairs:
        if isinstance(instance, HPolyhedron):
            cls = classify_pair_polyhedron(instance, p, q)
        else:
            cls = classify_pair(_as_region(instance), p, q)
        results.append(
            {"p": point_to_json(p), "q": point_to_json(q), "class": cls.value}
        )
    return results, 0


def _cmd_convexity(args):
    instance = load_geometry_file(args.file)
    if isinstance(instance, HPolyhedron):
        return [
            {
                "convex": True,
                "note": "halfspace intersections are convex by construction",
            }
        ], 0
    if isinstance(instance, (VPolytope, Epigraph1D)):
        raise SchemaError("convexity needs a planar region", "$.kind")
    region = _as_region(instance)
    verdict, witness = is_convex_by_pairs(region, args.probe_density)
    result = {"convex_by_pairs": verdict}
    if witness is not None:
        p, q, cls = witness
        result["witness"] = {
            "p": point_to_json(p),
            "q": point_to_json(q),
            "class": cls.value,
        }
    if isinstance(region, PolygonRegion):
        result["vertex_turn_oracle"] = (
            not region.holes and convexity_oracle(region.outer)
        )
    return [result], 0


def _cmd_kernel(args):
    instance = load_geometry_file(args.file)
    if isinstance(instance, PolygonRegion) and not instance.holes:
        instance = instance.outer
    if not isinstance(instance, SimplePolygon):
        raise SchemaError("kernel is defined for simple polygons", "$.kind")
    ker = kernel(instance)
    empty = is_empty(ker)
    result = {
        "kernel": dump_geometry(ker),
        "empty": empty,
        "starshaped": is_starshaped(instance),
    }
    if not empty:
        result["kernel_vertices"] = [
            point_to_json(v) for v in extreme_points(ker)
        ]
    return [result], 0


def _cmd_extremes(args):
    instance = load_geometry_file(args.file)
    if isinstance(instance, VPolytope):
        kept = profile(instance)
        return [
            {
                "profile": [point_to_json(p) for p in kept],
                "generators": len(instance.generators),
            }
        ], 0
    if not isinstance(instance, HPolyhedron):
        raise SchemaError(
            "extremes needs an h-polyhedron or a v-polytope", "$.kind"
        )
    verts = extreme_points(instance)
    bounded = is_bounded(instance)
    reconstructs = False
    if bounded and verts:
        reconstructs = hull_equal(
            instance, VPolytope(tuple(verts), instance.dim)
        )
    return [
        {
            "extreme_points": [point_to_json(v) for v in verts],
            "bounded": bounded,
            "reconstructs": reconstructs,
        }
    ], 0


def _cmd_reconstruct(args, seed):
    instance = load_geometry_file(args.file)
    reports = []
    if isinstance(instance, Epigraph1D):
        reports.append(check_boundary_hull(instance, args.samples, seed))
        reports.append(check_krein_milman(instance, args.samples, seed))
    elif isinstance(instance, HPolyhedron):
        if is_bounded(instance):
            reports.append(check_krein_milman(instance, args.samples, seed))
        else:
            reports.append(check_boundary_hull(instance, args.samples, seed))
            reports.append(check_krein_milman(instance, args.samples, seed))
    else:
        raise SchemaError(
            "reconstruct needs an h-polyhedron or an epigraph", "$.kind"
        )
    exit_code = 1 if any(r.is_counterexample() for r in reports) else 0
    return [r.to_json_dict() for r in reports], exit_code


def _cmd_check(args, seed):
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    for tid in ids:
        if tid not in THEOREM_IDS:
            raise SchemaError(
                f"unknown theorem {tid!r}; expected {'|'.join(THEOREM_IDS)}|all",
                "$.theorem",
            )
    results = []
    exit_code = 0
    for tid in ids:
        reports = run_suite(
            tid,
            seed=seed,
            instances=args.instances,
            samples=args.samples,
            probe_density=args.probe_density,
        )
        for r in reports:
            results.append(r.to_json_dict())
            if r.is_counterexample():
                exit_code = 1
    return results, exit_code


def _cmd_render(args, seed):
    instance = load_geometry_file(args.file)
    if isinstance(instance, (VPolytope,)):
        raise SchemaError("render supports regions, polyhedra, epigraphs", "$.kind")
    wanted = {w for w in args.overlays.split(",") if w}
    unknown = wanted - {"pairs", "kernel", "extremes"}
    if unknown:
        raise SchemaError(
            f"unknown overlays: {sorted(unknown)}", "$.overlays"
        )
    pair_overlays = []
    kernel_region = None
    extreme_overlay = []
    if "pairs" in wanted:
        import itertools

        if isinstance(instance, Epigraph1D):
            raise SchemaError(
                "pair overlays need a region or an h-polyhedron", "$.overlays"
            )
        points = _probe_points(instance, "vertices", min(args.probe_density, 8))
        for p, q in itertools.combinations(points[:8], 2):
            if isinstance(instance, HPolyhedron):
                cls = classify_pair_polyhedron(instance, p, q)
            else:
                cls = classify_pair(_as_region(instance), p, q)
            pair_overlays.append((p, q, cls))
    if "kernel" in wanted:
        poly = instance
        if isinstance(poly, PolygonRegion) and not poly.holes:
            poly = poly.outer
        if not isinstance(poly, SimplePolygon):
            raise SchemaError("kernel overlay needs a simple polygon", "$.kind")
        kernel_region = kernel(poly)
    if "extremes" in wanted:
        if isinstance(instance, HPolyhedron):
            extreme_overlay = list(extreme_points(instance))
        elif isinstance(instance, PolygonRegion):
            extreme_overlay = list(
                profile(
                    VPolytope(tuple(instance.outer.vertices), 2)
                )
            )
        elif isinstance(instance, SimplePolygon):
            extreme_overlay = list(
                profile(VPolytope(tuple(instance.vertices), 2))
            )
    doc = render_svg(
        instance,
        pair_overlays=pair_overlays,
        kernel_region=kernel_region,
        extreme_overlay=extreme_overlay,
    )
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(doc)
    return [
        {
            "svg": args.svg,
            "bytes": len(doc.encode("utf-8")),
            "sha256": hashlib.sha256(doc.encode("utf-8")).hexdigest(),
            "instance": instance_digest(instance),
        }
    ], 0


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        seed = _resolve_seed(args)
        if args.command == "classify":
            results, code = _cmd_classify(args)
        elif args.command == "convexity":
            results, code = _cmd_convexity(args)
        elif args.command == "kernel":
            results, code = _cmd_kernel(args)
        elif args.command == "extremes":
            results, code = _cmd_extremes(args)
        elif args.command == "reconstruct":
            results, code = _cmd_reconstruct(args, seed)
        elif args.command == "check":
            results, code = _cmd_check(args, seed)
        elif args.command == "render":
            results, code = _cmd_render(args, seed)
        else:  # pragma: no cover - argparse enforces the choices
            raise SchemaError(f"unknown command {args.command!r}", "$")
    except SchemaError as exc:
        sys.stderr.write(json.dumps(exc.to_json_dict(), sort_keys=True) + "\n")
        return 2
    except ConvexProfileError as exc:
        err = {
            "error": type(exc).__name__,
            "message": str(exc),
        }
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2

    inputs = [args.file] if hasattr(args, "file") else []
    config = _config_dict(args, seed)
    if args.command == "check":
        config["instances"] = args.instances
        config["theorem"] = args.theorem
    report = {
        "command": args.command,
        "inputs": inputs,
        "config": config,
        "results": results,
    }
    _emit(report, args)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
