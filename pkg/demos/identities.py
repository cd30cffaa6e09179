"""
Checking the dragon identities numerically
==========================================

Each check builds point clouds and compares them in Hausdorff distance.
A report prints as ``key=value`` lines.
"""

import math

from revdragon.alphabet import angle_from_fraction
from revdragon.ifs import PRESET_PARAMS
from revdragon.series import Family, FamilyParams
from revdragon import verify

levy = PRESET_PARAMS["levy"][1]
heighway = PRESET_PARAMS["heighway"][1]
ter = PRESET_PARAMS["terdragon"][1]

# the cloud equals the union of its images under the two maps
print(verify.check_set_equation(Family.X1, levy, 10).to_text())

# the h-type cloud is the x-type cloud divided by alpha
print(verify.check_scaling(heighway, 10).to_text())

# signed rule: divide by conj(alpha) instead
signed = FamilyParams(complex(0.5, math.sqrt(3) / 6), angle_from_fraction(1, 12))
print("signed scaling mismatch:", verify.check_scaling(signed, 8).extras["src_set"])

# free first digit = rotated copies of the first-digit-one cloud
print("rotation union:", verify.check_rotation_union(Family.H, levy, 8).max_mismatch)

# gaps between successive depths shrink by |alpha|
conv = verify.check_convergence(Family.T1, ter, range(4, 9))
print("terdragon ratios:", [round(r, 4) for r in conv.extras["ratios"]], "|alpha| =", round(abs(ter.alpha), 4))

# series cloud, orbit and fixed points agree
print(verify.check_cross_representation(Family.T1, ter, 8, 8, 0.05).to_text())

# the three-map set equation misses by one point at finite depth:
# psi_3 applied to the all-zero word lands on beta, |alpha|**n from the cloud
r = verify.check_set_equation(Family.T1, ter, 6)
print("terdragon depth 6:", r.extras, "|alpha|**6 =", abs(ter.alpha) ** 6)
