#!/usr/bin/env python3
"""Nested view of the two-qubit class polytopes: cube (potential witnesses),
tetrahedron (states), octahedron (separable states)."""

import matplotlib.pyplot as plt
from mpl_toolkits.mplot3d.art3d import Poly3DCollection

import figlib


def poly_collection(vertices, faces, color, alpha):
    polys = [[vertices[i] for i in face] for face in faces]
    pc = Poly3DCollection(polys, alpha=alpha, facecolor=color, edgecolor="k", linewidths=0.6)
    return pc


def main():
    args = figlib.parse_args(__doc__)
    geo = figlib.load_geometry(args.indir)
    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    ax.add_collection3d(
        poly_collection(geo["cube"]["vertices"], geo["cube"]["faces"], "#9999ff", 0.08)
    )
    ax.add_collection3d(
        poly_collection(
            geo["tetrahedron"]["vertices"], geo["tetrahedron"]["faces"], "#ffcc66", 0.25
        )
    )
    ax.add_collection3d(
        poly_collection(
            geo["octahedron"]["vertices"], geo["octahedron"]["faces"], "#66cc88", 0.5
        )
    )
    ax.set_xlim(-1, 1)
    ax.set_ylim(-1, 1)
    ax.set_zlim(-1, 1)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    ax.set_box_aspect((1, 1, 1))
    ax.view_init(elev=18, azim=32)
    ax.set_title("witness cube, state tetrahedron, separable octahedron")
    figlib.finish(fig, args.outfile)


if __name__ == "__main__":
    figlib.run(main)
