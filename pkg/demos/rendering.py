"""
Rendering clouds as plain PGM
=============================

Point clouds go to greyscale images either as a hit mask or with log
density shading.
"""

import sys
from pathlib import Path

from revdragon.fileio import Viewport, render, write_pgm
from revdragon.ifs import PRESET_PARAMS, chaos_game, preset
from revdragon.series import make_cloud

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

for name, (fam, params) in PRESET_PARAMS.items():
    cloud = make_cloud(fam, params, 14 if fam.value != "t1" else 9)
    path = out / f"{name}.pgm"
    write_pgm(render(cloud, Viewport.fit(cloud, 400, 400)), path)
    print(name, len(cloud), "points ->", path)

# random-walk samples look better with density shading
walk = chaos_game(preset("twindragon"), 400_000, rng_seed=3)
view = Viewport.fit(walk, 480, 320)
write_pgm(render(walk, view, "log_density"), out / "twindragon_density.pgm")
print("viewport:", view)
