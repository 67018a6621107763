#!/usr/bin/env python3
"""Planar slice of the three-setting witness scan against the CHSH circle.

Scan records with |z| < 1e-3 are scattered in the x-y plane; all of them land
inside the unit circle, the plane's CHSH classes."""

import matplotlib.pyplot as plt
import numpy as np

import figlib

INPLANE_BAND = 1e-3


def main():
    args = figlib.parse_args(__doc__)
    data = figlib.load_scan(args.indir)
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    theta = np.linspace(0.0, 2.0 * np.pi, 512)
    ax.plot(np.cos(theta), np.sin(theta), color="#cc3333", lw=2)
    if data.shape[0]:
        x, y, z = data[:, 11], data[:, 12], data[:, 13]
        sel = np.abs(z) < INPLANE_BAND
        ax.scatter(x[sel], y[sel], s=6, color="#222266", alpha=0.7)
        n_pts = int(np.count_nonzero(sel))
    else:
        n_pts = 0
    ax.set_xlim(-1.1, 1.1)
    ax.set_ylim(-1.1, 1.1)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"in-plane three-setting witnesses ({n_pts} points) vs CHSH circle")
    figlib.finish(fig, args.outfile)


if __name__ == "__main__":
    figlib.run(main)
