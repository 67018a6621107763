"""Shared loader for the geometry/scan files produced by the sloccgeo CLI."""

import argparse
import csv
import json
import os
import sys

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402

EXIT_INPUT = 2

PNG_METADATA = {"Software": "sloccgeo-figures"}


class SchemaError(Exception):
    pass


def parse_args(description):
    ap = argparse.ArgumentParser(description=description)
    ap.add_argument("--in", dest="indir", required=True, help="directory of cli outputs")
    ap.add_argument("--out", dest="outfile", required=True, help="image file to write")
    return ap.parse_args()


def _require(cond, message):
    if not cond:
        raise SchemaError(message)


def load_geometry(indir):
    path = os.path.join(indir, "geometry.json")
    _require(os.path.exists(path), f"missing {path}")
    with open(path, "r", encoding="utf-8") as fh:
        geo = json.load(fh)
    for key in ("cube", "tetrahedron", "octahedron"):
        _require(key in geo, f"geometry.json lacks {key!r}")
        _require(
            {"vertices", "faces"} <= set(geo[key]), f"{key} lacks vertices/faces"
        )
        geo[key]["vertices"] = np.asarray(geo[key]["vertices"], dtype=float)
        _require(geo[key]["vertices"].shape[1] == 3, f"{key} vertices not 3-D")
    _require("chsh_circles" in geo, "geometry.json lacks chsh_circles")
    for plane in ("xy", "yz", "xz"):
        pts = np.asarray(geo["chsh_circles"][plane], dtype=float)
        _require(pts.ndim == 2 and pts.shape[1] == 3, f"circle {plane} malformed")
        geo["chsh_circles"][plane] = pts
    _require("cylinder_patches" in geo, "geometry.json lacks cylinder_patches")
    for ax in ("x", "y", "z"):
        patch = np.asarray(geo["cylinder_patches"][ax], dtype=float)
        _require(patch.ndim == 3 and patch.shape[2] == 3, f"patch {ax} malformed")
        geo["cylinder_patches"][ax] = patch
    _require("witness_plane" in geo, "geometry.json lacks witness_plane")
    wp = geo["witness_plane"]
    _require({"witness", "triangle"} <= set(wp), "witness_plane malformed")
    wp["witness"] = np.asarray(wp["witness"], dtype=float)
    wp["triangle"] = np.asarray(wp["triangle"], dtype=float)
    _require(wp["triangle"].shape == (3, 3), "witness triangle malformed")
    return geo


SCAN_HEADER = "id,ca12,ca13,ca23,cb12,cb13,cb23,w0,w1,w2,w3,x,y,z,hull_margin"


def load_scan(indir):
    path = os.path.join(indir, "scan.csv")
    _require(os.path.exists(path), f"missing {path}")
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        _require(header is not None, "scan.csv is empty")
        _require(",".join(header) == SCAN_HEADER, "scan.csv header mismatch")
        rows = [[float(v) for v in row] for row in reader]
    if not rows:
        return np.empty((0, 15))
    data = np.asarray(rows)
    _require(data.shape[1] == 15, "scan.csv row width mismatch")
    return data


def finish(fig, outfile):
    fig.savefig(outfile, dpi=150, metadata=PNG_METADATA)


def run(main):
    """Execute a figure script body with the shared error-to-exit mapping."""
    try:
        main()
    except SchemaError as exc:
        print(f"figure input error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"figure input error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
