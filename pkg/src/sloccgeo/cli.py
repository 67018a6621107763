"""Command-line surface.

Commands: classify, chsh, duality, i3322-scan, geometry.
Exit codes: 0 success, 1 usage, 2 input parse error, 3 domain violation,
4 I/O error.  All outputs are deterministic given the flags (fixed seeds,
no timestamps): repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import classify as _classify
from . import chsh as _chsh
from . import i3322 as _i3322
from ._jsonfmt import dumps, flatten, fmt17
from .errors import (
    BoundaryClassError,
    ComplexSpectrumError,
    DegenerateClassError,
    NotHermitianError,
    NotOutsideCylindersError,
    SloccGeoError,
)
from .lorentz import lorentz_singular_values, slocc_coord
from .pauli import from_hermitian, operator_from_json

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

# tolerances adjustable via --tol-override KEY=VAL
DEFAULT_TOLERANCES = {
    "membership": 1e-9,     # polytope and cylinder membership
    "hull": 1e-6,           # hull containment (scan exit criterion)
    "detection": 1e-9,      # duality incrimination threshold
    "filter_margin": 1e-6,  # margin below which a violating filter is built
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument(
        "--tol-override",
        action="append",
        default=[],
        metavar="KEY=VAL",
        help=f"override a tolerance; keys: {', '.join(DEFAULT_TOLERANCES)}",
    )
    p = _Parser(prog="sloccgeo", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify an operator file")
    c.add_argument("input")

    c = sub.add_parser("chsh", parents=[common], help="CHSH analysis of a state file")
    c.add_argument("input")

    c = sub.add_parser("duality", parents=[common], help="pairing of two witness files")
    c.add_argument("witness1")
    c.add_argument("witness2")

    c = sub.add_parser("i3322-scan", parents=[common], help="randomized witness scan")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", required=True)
    c.add_argument(
        "--planar-grid",
        type=int,
        default=None,
        metavar="G",
        help="replace sampling with the coplanar G**6 angle grid",
    )

    c = sub.add_parser("geometry", parents=[common], help="emit figure geometry data")
    c.add_argument("--out", required=True)
    return p


def _tolerances(args):
    tol = dict(DEFAULT_TOLERANCES)
    for item in args.tol_override:
        if "=" not in item:
            raise _UsageError(f"--tol-override needs KEY=VAL, got {item!r}")
        key, _, val = item.partition("=")
        if key not in tol:
            raise _UsageError(f"unknown tolerance {key!r}")
        try:
            tol[key] = float(val)
        except ValueError:
            raise _UsageError(f"bad tolerance value {val!r}") from None
    return tol


def _load_operator(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    return operator_from_json(obj)


def _print_report(report, fmt):
    if fmt == "csv":
        lines = [f"{k},{v}" for k, v in flatten(report)]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(dumps(report))


def _cmd_classify(args, tol):
    W = _load_operator(args.input)
    cls = _classify.classify(W)
    report = {
        "state": cls.is_state,
        "separable": cls.is_separable,
        "potential_witness": cls.is_potential_witness,
        "ppt": _classify.is_ppt(W) if cls.is_state else None,
        "eigenvalues": cls.eigenvalues,
        "lorentz_singular_values": None,
        "coords": cls.coords,
        "class_error": cls.coords_error,
    }
    try:
        report["lorentz_singular_values"] = list(
            lorentz_singular_values(from_hermitian(W))
        )
    except SloccGeoError:
        pass
    if cls.coords is not None:
        atol = tol["membership"]
        octa = _classify.octahedron_membership(cls.coords)
        tetra = _classify.tetrahedron_membership(cls.coords)
        cube = _classify.cube_membership(cls.coords)
        cyl = _chsh.cylinder_membership(cls.coords)
        report.update(
            {
                "octahedron_member": octa.margin >= -atol,
                "octahedron_margin": octa.margin,
                "tetrahedron_member": tetra.margin >= -atol,
                "tetrahedron_margin": tetra.margin,
                "cube_member": cube.margin >= -atol,
                "cube_margin": cube.margin,
                "cylinder_member": cyl.margin >= -atol,
                "cylinder_margin": cyl.margin,
            }
        )
    _print_report(report, args.format)
    return 0


def _cmd_chsh(args, tol):
    rho = _load_operator(args.input)
    value, plane = _chsh.horodecki_optimum(rho)
    numeric, _ = _chsh.chsh_minimum_numeric(rho)
    cyl = _chsh.slocc_chsh_satisfies(rho)
    report = {
        "horodecki_value": value,
        "horodecki_plane": plane,
        "numeric_minimum": numeric,
        "numeric_gap": numeric - value,
        "slocc_satisfies": bool(cyl.margin >= -tol["membership"]),
        "cylinder_margin": cyl.margin,
        "violating_axis": cyl.violating_axis,
        "coords": cyl.coords,
        "filter": None,
        "directions": None,
        "filtered_value": None,
        "boundary_class": None,
    }
    if cyl.margin < -tol["filter_margin"]:
        try:
            plan = _chsh.filter_to_violation(rho)
            report["filter"] = {
                "A_re": plan.filter.A.real,
                "A_im": plan.filter.A.imag,
                "B_re": plan.filter.B.real,
                "B_im": plan.filter.B.imag,
            }
            d = plan.directions
            report["directions"] = {
                "a": d.a,
                "a_prime": d.a_prime,
                "b": d.b,
                "b_prime": d.b_prime,
            }
            report["filtered_value"] = plan.value
        except BoundaryClassError as exc:
            report["boundary_class"] = str(exc)
    _print_report(report, args.format)
    return 0


def _cmd_duality(args, tol):
    sv = []
    for path in (args.witness1, args.witness2):
        W = _load_operator(path)
        sv.append(lorentz_singular_values(from_hermitian(W)))
    pairing = _classify.duality_pairing(sv[0], sv[1])
    report = {
        "sv_1": list(sv[0]),
        "sv_2": list(sv[1]),
        "pairing": pairing,
        "orbit_min_pairing": _classify.orbit_min_pairing(sv[0], sv[1]),
        "incriminates": bool(pairing < -tol["detection"]),
        "coords_1": slocc_coord(sv[0]),
        "coords_2": slocc_coord(sv[1]),
    }
    _print_report(report, args.format)
    return 0


def _cmd_i3322_scan(args, tol):
    if args.n < 1:
        raise _UsageError("--n must be >= 1")
    if args.planar_grid is not None:
        if args.planar_grid < 1:
            raise _UsageError("--planar-grid must be >= 1")
        result = _i3322.scan_planar_grid(args.planar_grid)
    else:
        result = _i3322.scan(args.n, args.seed)
    os.makedirs(args.out, exist_ok=True)
    csv_path = os.path.join(args.out, "scan.csv")
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("id,ca12,ca13,ca23,cb12,cb13,cb23,w0,w1,w2,w3,x,y,z,hull_margin\n")
        for k in range(result.ids.shape[0]):
            row = [str(int(result.ids[k]))]
            row += [fmt17(v) for v in result.cosines[k]]
            row += [fmt17(v) for v in result.sv[k]]
            row += [fmt17(v) for v in result.coords[k]]
            row.append(fmt17(result.hull_margin[k]))
            fh.write(",".join(row) + "\n")
    with open(
        os.path.join(args.out, "summary.json"), "w", encoding="utf-8", newline="\n"
    ) as fh:
        fh.write(dumps(result.summary))
    sys.stdout.write(dumps(result.summary))
    mm = result.summary["min_margin"]
    return 0 if mm is None or mm >= -tol["hull"] else EXIT_DOMAIN


def _geometry_payload():
    tetra = [(1, 1, -1), (1, -1, 1), (-1, 1, 1), (-1, -1, -1)]
    cube = [
        (sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)
    ]
    octa = [
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1),
    ]
    theta = 2.0 * np.pi * np.arange(256) / 256.0
    cos, sin, zero = np.cos(theta), np.sin(theta), np.zeros(256)
    circles = {
        "xy": np.stack([cos, sin, zero], axis=1),
        "yz": np.stack([zero, cos, sin], axis=1),
        "xz": np.stack([cos, zero, sin], axis=1),
    }

    def cylinder_patch(axis):
        # surface of the cylinder along `axis` clipped to the other two
        th = 2.0 * np.pi * np.arange(64) / 64.0
        s = -1.0 + 2.0 * np.arange(64) / 63.0
        cs, sn = np.cos(th), np.sin(th)
        tmax = np.sqrt(np.clip(1.0 - np.maximum(cs * cs, sn * sn), 0.0, None))
        pts = np.empty((64, 64, 3))
        for i in range(64):
            axial = s * tmax[i]
            if axis == 2:
                pts[i, :, 0] = cs[i]
                pts[i, :, 1] = sn[i]
                pts[i, :, 2] = axial
            elif axis == 0:
                pts[i, :, 1] = cs[i]
                pts[i, :, 2] = sn[i]
                pts[i, :, 0] = axial
            else:
                pts[i, :, 2] = cs[i]
                pts[i, :, 0] = sn[i]
                pts[i, :, 1] = axial
        return pts

    return {
        "cube": {
            "vertices": cube,
            "faces": [
                [0, 1, 3, 2], [4, 5, 7, 6], [0, 1, 5, 4],
                [2, 3, 7, 6], [0, 2, 6, 4], [1, 3, 7, 5],
            ],
        },
        "tetrahedron": {
            "vertices": tetra,
            "faces": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        },
        "octahedron": {
            "vertices": octa,
            "faces": [
                [0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5],
                [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5],
            ],
        },
        "chsh_circles": circles,
        "cylinder_patches": {
            "x": cylinder_patch(0),
            "y": cylinder_patch(1),
            "z": cylinder_patch(2),
        },
        "witness_plane": {
            "witness": [-1, -1, 1],
            "triangle": [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
        },
    }


def _cmd_geometry(args, tol):
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "geometry.json")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(_geometry_payload()))
    sys.stdout.write(path + "\n")
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "chsh": _cmd_chsh,
    "duality": _cmd_duality,
    "i3322-scan": _cmd_i3322_scan,
    "geometry": _cmd_geometry,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        tol = _tolerances(args)
    except _UsageError as exc:
        print(f"sloccgeo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, tol)
    except _UsageError as exc:
        print(f"sloccgeo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"sloccgeo: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (
        NotHermitianError,
        ComplexSpectrumError,
        DegenerateClassError,
        NotOutsideCylindersError,
        SloccGeoError,
    ) as exc:
        print(f"sloccgeo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"sloccgeo: io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
