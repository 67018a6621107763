#!/usr/bin/env python3
"""Intersection of the three unit cylinders: the classes whose every filtered
descendant satisfies all CHSH inequalities."""

import matplotlib.pyplot as plt

import figlib


def main():
    args = figlib.parse_args(__doc__)
    geo = figlib.load_geometry(args.indir)
    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    for axis, color in (("x", "#cc8888"), ("y", "#88cc88"), ("z", "#8888cc")):
        patch = geo["cylinder_patches"][axis]
        ax.plot_surface(
            patch[..., 0],
            patch[..., 1],
            patch[..., 2],
            color=color,
            alpha=0.5,
            linewidth=0,
            antialiased=False,
        )
    ax.set_xlim(-1, 1)
    ax.set_ylim(-1, 1)
    ax.set_zlim(-1, 1)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    ax.set_box_aspect((1, 1, 1))
    ax.view_init(elev=22, azim=40)
    ax.set_title("three-cylinder intersection")
    figlib.finish(fig, args.outfile)


if __name__ == "__main__":
    figlib.run(main)
