"""
Attractors of the matching map systems
======================================

Three ways to sample the same attractor: unrolled orbits, a random walk,
and fixed points of map compositions.
"""

from revdragon.ifs import chaos_game, compose, fixed_point, orbit_depth, preset, williams_cloud
from revdragon.verify import hausdorff

levy = preset("levy")
for i, m in enumerate(levy.maps, 1):
    print(f"map {i}: z -> ({m.a:.4f}) z + ({m.c:.4f})")
print("contraction:", levy.contraction)

# composing maps stays affine; its fixed point lies in the attractor
m = compose(levy.maps[0], levy.maps[1])
print("psi1 o psi2:", m, "fixed point", fixed_point(m))

orbit = orbit_depth(levy, 0j, 14)
walk = chaos_game(levy, 100_000, rng_seed=1)
fixed = williams_cloud(levy, 12)
print(f"orbit {len(orbit)} pts, chaos {len(walk)} pts, fixed points {len(fixed)} pts")
print(f"chaos vs orbit:   {hausdorff(walk, orbit):.4f}")
print(f"williams vs orbit: {hausdorff(fixed, orbit):.4f}")

# three maps, one with an offset beta
ter = preset("terdragon")
print("terdragon maps:", len(ter), "orbit depth 8:", len(orbit_depth(ter, 0j, 8)))
