"""
Dragon point clouds from digit series
=====================================

Each valid word is summed as a power series in ``alpha``; the set of sums
over all words of length n approximates the dragon.
"""

import sys
from pathlib import Path

import numpy as np

from revdragon.fileio import write_csv
from revdragon.ifs import PRESET_PARAMS
from revdragon.series import Family, evaluate, make_cloud
from revdragon.sequences import RevolvingSequence

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

family, params = PRESET_PARAMS["levy"]
print("levy:", family.value, "alpha =", params.alpha, "theta =", params.angle)

# one word by hand: (1, 0, i) gives alpha + i alpha**3
word = RevolvingSequence(params.angle, (0, None, 1))
print("series of (1,0,i):", evaluate(family, params, word), "expected", params.alpha + 1j * params.alpha**3)

# whole clouds; the count doubles with each digit
for depth in (4, 8, 12):
    cloud = make_cloud(family, params, depth)
    print(f"depth {depth:2d}: {len(cloud):5d} points, extent {np.ptp(cloud.points.real):.3f} x {np.ptp(cloud.points.imag):.3f}")

# the five named dragons, saved as CSV for the rendering demo
for name, (fam, p) in PRESET_PARAMS.items():
    cloud = make_cloud(fam, p, 10)
    write_csv(cloud, out / f"{name}.csv")
    print(f"{name:11s} {fam.value:3s} {len(cloud):6d} points -> {out / (name + '.csv')}")

# the free-first-digit cloud is the union of rotated copies
full = make_cloud(Family.X, params, 8)
print("x family at depth 8:", len(full), "points")
