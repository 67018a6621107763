#!/usr/bin/env python3
"""The three unit circles of CHSH witness classes, one per coordinate plane."""

import matplotlib.pyplot as plt

import figlib


def main():
    args = figlib.parse_args(__doc__)
    geo = figlib.load_geometry(args.indir)
    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    for plane, color in (("xy", "#cc3333"), ("yz", "#3333cc"), ("xz", "#33aa33")):
        pts = geo["chsh_circles"][plane]
        ax.plot(pts[:, 0], pts[:, 1], pts[:, 2], color=color, lw=2, label=plane)
    ax.set_xlim(-1, 1)
    ax.set_ylim(-1, 1)
    ax.set_zlim(-1, 1)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    ax.set_box_aspect((1, 1, 1))
    ax.view_init(elev=20, azim=30)
    ax.legend()
    ax.set_title("CHSH witness circles")
    figlib.finish(fig, args.outfile)


if __name__ == "__main__":
    figlib.run(main)
