"""Command-line front end.

One subcommand per pipeline stage; stdout carries a single JSON document
(NDJSON for ``family`` sweeps), stderr carries error JSON, and exit codes
are 0 (success), 1 (domain error), 2 (malformed input).
"""

import argparse
import json
import sys

from . import diamond, reduction, toric
from .errors import ToricDiamondError
from .jsonio import dumps, to_jsonable
from .lattice import ConvexLatticePolygon
from .reduction import IsotropyData, WeightMatrix
from .render import render_svg


def _parser():
    ap = argparse.ArgumentParser(
        prog="toric-diamond",
        description="Exact invariants of toric Fano surfaces, 3-Sasakian "
                    "quotients, and their Einstein 5-manifolds.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("analyze-fan", "analyze-weights", "diamond", "family",
                 "roundtrip", "render"):
        p = sub.add_parser(name)
        p.add_argument("--weights", help="JSON k x (k+2) integer matrix")
        p.add_argument("--polygon", help="JSON list of [x,y] vertices")
        p.add_argument("--isotropy", help="JSON list of [m,n] isotropy vectors")
        p.add_argument("--q", type=int, help="circle-family parameter")
        p.add_argument("--k", type=int, help="torus rank for family sweeps")
        p.add_argument("--count", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int,
                       help="Monte-Carlo sample count for the volume check")
        p.add_argument("--out", help="write stdout payload to this path")
        p.add_argument("--svg", action="store_true",
                       help="attach an SVG drawing of the polygon")
    return ap


class MalformedInput(Exception):
    pass


def _parse_json_arg(raw, what):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON for {what}: {exc}") from exc


def _get_weights(args):
    if args.weights is None:
        raise MalformedInput("--weights is required")
    rows = _parse_json_arg(args.weights, "--weights")
    try:
        return WeightMatrix.from_rows(rows)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad weight matrix: {exc}") from exc


def _get_polygon(args):
    if args.polygon is not None:
        data = _parse_json_arg(args.polygon, "--polygon")
        try:
            return ConvexLatticePolygon.from_vertices(data)
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"bad polygon: {exc}") from exc
    if args.isotropy is not None:
        data = _parse_json_arg(args.isotropy, "--isotropy")
        try:
            iso = IsotropyData.from_vectors(data)
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"bad isotropy data: {exc}") from exc
        return diamond.isotropy_to_polygon(iso)
    raise MalformedInput("--polygon or --isotropy is required")


def _fan_report(fan, samples, seed):
    rep = {
        "fano": toric.is_fano(fan),
        "symmetric": toric.is_symmetric(fan),
        "special_symmetric": toric.is_special_symmetric(fan),
        "w0_order": len(toric.symmetry_group(fan)),
        "admits_kahler_einstein": toric.admits_kahler_einstein(fan),
        "pi1_orb_trivial": toric.pi1_orb_trivial(fan),
        "orbifold": to_jsonable(toric.orbifold_report(fan)),
    }
    if rep["fano"]:
        rep["index"] = toric.fano_index(fan)
        verts = toric.sigma_polytope(fan, toric.minus_k(fan))
        from .lattice import canonical_ccw, shoelace_area
        rep["anticanonical_area"] = shoelace_area(canonical_ccw(verts))
        rep["seifert_smooth"] = toric.seifert_total_space_smooth(fan)
        if rep["pi1_orb_trivial"] and rep["seifert_smooth"]:
            rep["homology_M"] = toric.homology_of_M(fan)
        if samples:
            from .guillemin import LabeledPolytope, volume_check
            lp = LabeledPolytope.from_facets([(m, -1) for m in fan.marks])
            rep["volume_check"] = volume_check(lp, samples, seed)
    return rep


def _weights_report(w):
    rep = {
        "k": w.k,
        "nondegenerate": reduction.is_nondegenerate(w),
    }
    if rep["nondegenerate"]:
        rep["determinantal_divisor"] = reduction.determinantal_divisor(w)
        rep["reduced"] = reduction.is_reduced(w)
        rep["admissible"] = reduction.is_admissible(w)
        rep["g_omega_order"] = reduction.g_omega_order(w)
        if rep["admissible"]:
            rep["cohomology"] = to_jsonable(reduction.s_omega_cohomology(w))
            rep["isotropy"] = list(reduction.isotropy_data(w).v)
    return rep


def _diamond_payload(report, with_svg):
    payload = to_jsonable(report)
    if with_svg:
        payload["svg"] = render_svg(report.polygon)
    return payload


def _run_family(args, emit):
    if args.q is not None:
        w, rep = diamond.family_galicki_lawson(args.q)
        emit(dumps(_diamond_payload(rep, args.svg)))
        return
    if args.k is None:
        raise MalformedInput("family needs --q or --k")
    for w in diamond.family_general(args.k, args.count, args.seed):
        rep = diamond.weights_to_diamond(w)
        emit(dumps(_diamond_payload(rep, args.svg)))


def _dispatch(args, emit):
    if args.command == "analyze-fan":
        fan = toric.fan_from_polygon(_get_polygon(args))
        emit(dumps(_fan_report(fan, args.samples, args.seed)))
    elif args.command == "analyze-weights":
        emit(dumps(_weights_report(_get_weights(args))))
    elif args.command == "diamond":
        rep = diamond.weights_to_diamond(_get_weights(args))
        emit(dumps(_diamond_payload(rep, args.svg)))
    elif args.command == "family":
        _run_family(args, emit)
    elif args.command == "roundtrip":
        poly = _get_polygon(args)
        iso = diamond.polygon_to_isotropy(poly)
        back = diamond.isotropy_to_polygon(iso)
        emit(dumps({
            "polygon": list(poly.vertices),
            "isotropy": list(iso.v),
            "roundtrip_ok": back.vertices == poly.vertices
                            or set(back.vertices) == set(poly.vertices),
        }))
    elif args.command == "render":
        emit(dumps({"svg": render_svg(_get_polygon(args))}))


def run(argv) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    lines = []
    try:
        _dispatch(args, lines.append)
    except MalformedInput as exc:
        print(json.dumps({"code": "MALFORMED_INPUT", "message": str(exc),
                          "context": {}}), file=sys.stderr)
        return 2
    except ToricDiamondError as exc:
        print(json.dumps({"code": exc.code, "message": str(exc),
                          "context": {k: str(v) for k, v in exc.context.items()}}),
              file=sys.stderr)
        return 1
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
