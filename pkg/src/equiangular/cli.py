"""Command-line front end.

    equiangular gen --family pn --n 3
    equiangular check --in poly.json --k 3
    equiangular vol --family pn --n 2
    equiangular census --v 10 --method both
    equiangular render --family pn --n 4 --schematic --out fig.svg
    equiangular table --max-n 5

Exit status: 0 on success, 1 on domain errors or a failed check, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import List, Optional

from . import andreev, census, families, render, volumes
from .errors import BadParameterError, PolyhedronError
from .lobachevsky import IdealTetrahedron, ideal_tetra_volume
from .polyhedron import CombinatorialPolyhedron

_ANGLE_RE = re.compile(r"^\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$")


def parse_angle(text: str) -> float:
    """Radians from ``"1.047"``, ``"pi/3"``, ``"2pi/3"`` or ``"2*pi/3"``."""
    m = _ANGLE_RE.match(text.lower())
    if m:
        coef = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read angle {text!r}") from None


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _read_polyhedron(path: str) -> CombinatorialPolyhedron:
    if path == "-":
        return CombinatorialPolyhedron.from_json(sys.stdin.read())
    with open(path) as fh:
        return CombinatorialPolyhedron.from_json(fh.read())


def _family_polyhedron(args) -> CombinatorialPolyhedron:
    if getattr(args, "named", None):
        return families.named(args.named)
    if args.family == "pn":
        if args.n is None:
            raise BadParameterError("--family pn needs --n")
        return families.generate_pn(args.n)
    if args.family == "prism":
        if args.m is None:
            raise BadParameterError("--family prism needs --m")
        return families.generate_prism(args.m)
    raise BadParameterError("choose --family or --named")


# -- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    P = _family_polyhedron(args)
    _write(P.to_json(indent=args.indent) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    P = _read_polyhedron(args.infile)
    verdict = andreev.equiangular_feasibility(P, args.k)
    if args.json:
        print(json.dumps(verdict.to_dict(), indent=2))
    else:
        print(f"polyhedron: v={P.vertex_count} e={P.edge_count} f={P.face_count}  "
              f"angles: pi/{args.k}")
        if verdict.report is not None:
            print(verdict.report.table())
        for r in verdict.reasons:
            print(f"- {r}")
        print("feasible" if verdict.feasible else "infeasible")
    if not verdict.feasible and verdict.report is not None \
            and verdict.report.impossible_by_special_rule:
        print("error: no pi/3-equiangular triangular prism exists", file=sys.stderr)
    return 0 if verdict.feasible else 1


_NAMED_VOLUMES = {
    "p1": volumes.vol_P1,
    "p2": lambda: volumes.vol_Pn(2),
    "p-prime": volumes.vol_Pprime,
    "pentagonal-prism": volumes.vol_pentagonal_prism,
}


def cmd_vol(args) -> int:
    if args.tetra is not None:
        value = ideal_tetra_volume(IdealTetrahedron(*args.tetra))
        digits = 9 if args.digits is None else args.digits
    elif args.named is not None:
        value = _NAMED_VOLUMES[args.named]().value
        digits = 6 if args.digits is None else args.digits
    elif args.family == "pn":
        if args.n is None:
            raise BadParameterError("--family pn needs --n")
        value = volumes.vol_Pn(args.n).value
        digits = 6 if args.digits is None else args.digits
    else:
        raise BadParameterError("choose one of --tetra, --named, --family pn")
    print(f"{value:.{digits}f}")
    return 0


def cmd_census(args) -> int:
    methods = ["primal", "dual"] if args.method == "both" else [args.method]
    results = [census.census(args.v, m) for m in methods]
    if len(results) == 2 and results[0].forms() != results[1].forms():
        print(f"error: primal and dual routes disagree at v={args.v} "
              f"({results[0].count} vs {results[1].count})", file=sys.stderr)
        return 1
    res = results[0]
    _write(json.dumps(res.to_list(), indent=args.indent) + "\n", args.out)
    print(res.summary())
    return 0


def cmd_render(args) -> int:
    if args.schematic:
        if args.family != "pn" or args.n is None:
            raise BadParameterError("--schematic needs --family pn --n <k>")
        svg = render.render_pn_schematic(args.n)
    else:
        P = _read_polyhedron(args.infile) if args.infile else _family_polyhedron(args)
        layout = render.tutte_layout(P, args.outer)
        svg = render.render_svg(P, layout, vertex_ids=args.vertex_ids)
    _write(svg, args.out)
    return 0


def cmd_table(args) -> int:
    if args.max_n < 1:
        raise BadParameterError("--max-n must be >= 1")
    lines = ["n\ttetra_count\tvolume"]
    for n in range(1, args.max_n + 1):
        lines.append(f"{n}\t{volumes.tetra_count(n)}\t{volumes.vol_Pn(n).value:.{args.digits}f}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equiangular",
                                description="pi/3-equiangular hyperbolic polyhedra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def family_opts(sp, allow_prism=True):
        sp.add_argument("--family", choices=["pn", "prism"] if allow_prism else ["pn"])
        sp.add_argument("--n", type=int)
        if allow_prism:
            sp.add_argument("--m", type=int)

    g = sub.add_parser("gen", help="emit a polyhedron as JSON")
    family_opts(g)
    g.add_argument("--named", choices=sorted(families.NAMED))
    g.add_argument("--out", default="-")
    g.add_argument("--indent", type=int)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test pi/k-equiangular feasibility")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("vol", help="hyperbolic volumes")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--tetra", nargs=3, type=parse_angle, metavar=("A", "B", "C"))
    src.add_argument("--family", choices=["pn"])
    src.add_argument("--named", choices=sorted(_NAMED_VOLUMES))
    v.add_argument("--n", type=int)
    v.add_argument("--digits", type=int)
    v.set_defaults(func=cmd_vol)

    cs = sub.add_parser("census", help="admissible combinatorial types on v vertices")
    cs.add_argument("--v", type=int, required=True)
    cs.add_argument("--method", choices=["primal", "dual", "both"], default="primal")
    cs.add_argument("--out", default="-")
    cs.add_argument("--indent", type=int)
    cs.set_defaults(func=cmd_census)

    r = sub.add_parser("render", help="SVG drawing")
    r.add_argument("--in", dest="infile")
    family_opts(r)
    r.add_argument("--named", choices=sorted(families.NAMED))
    r.add_argument("--outer", type=int)
    r.add_argument("--schematic", action="store_true")
    r.add_argument("--vertex-ids", action="store_true")
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_render)

    t = sub.add_parser("table", help="TSV of n, tetra_count, volume")
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--digits", type=int, default=6)
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PolyhedronError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
