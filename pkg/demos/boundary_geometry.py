"""Boundary circles of the domain family, as plot-ready CSV.

The domains are disks centered at -g/(1-g) with radius 1/(1-g); every one
of them passes through the point (1, 0) and contains the unit disk.  Pipe
the output to a file and plot x, y grouped by gamma.
"""

import csv
import sys

from bohrad import DomainParams, boundary_points

writer = csv.writer(sys.stdout, lineterminator="\n")
writer.writerow(["gamma", "center", "radius", "index", "x", "y"])
for gamma in (0.0, 0.25, 0.5, 0.75):
    dom = DomainParams(gamma)
    pts = boundary_points(gamma, 180)
    for i, (x, y) in enumerate(pts):
        writer.writerow([gamma, f"{dom.center:.6f}", f"{dom.radius:.6f}", i, f"{x:.9f}", f"{y:.9f}"])
