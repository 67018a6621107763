#!/usr/bin/env python3
"""Corner witness and its detection plane: states beyond the triangle are
incriminated as entangled by the witness in the opposite cube corner."""

import matplotlib.pyplot as plt
from mpl_toolkits.mplot3d.art3d import Poly3DCollection

import figlib


def main():
    args = figlib.parse_args(__doc__)
    geo = figlib.load_geometry(args.indir)
    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    tetra = geo["tetrahedron"]
    polys = [[tetra["vertices"][i] for i in face] for face in tetra["faces"]]
    ax.add_collection3d(
        Poly3DCollection(polys, alpha=0.15, facecolor="#ffcc66", edgecolor="k", linewidths=0.6)
    )
    wp = geo["witness_plane"]
    ax.add_collection3d(
        Poly3DCollection([wp["triangle"]], alpha=0.6, facecolor="#44aa44", edgecolor="g")
    )
    w = wp["witness"]
    ax.scatter([w[0]], [w[1]], [w[2]], color="red", s=60, depthshade=False)
    ax.set_xlim(-1, 1)
    ax.set_ylim(-1, 1)
    ax.set_zlim(-1, 1)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    ax.set_box_aspect((1, 1, 1))
    ax.view_init(elev=16, azim=-48)
    ax.set_title("corner witness (red) and its detection plane")
    figlib.finish(fig, args.outfile)


if __name__ == "__main__":
    figlib.run(main)
