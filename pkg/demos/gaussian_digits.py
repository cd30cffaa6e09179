"""
Gaussian integers in base 1+i
=============================

Digits are 0, 1, -i, -1, i, and consecutive nonzero digits turn by -90
degrees.  Every Gaussian integer has such an expansion.
"""

from revdragon.alphabet import format_word
from revdragon.revrep import ANGLE, GaussianInt, decode, encode
from revdragon.sequences import RevolvingSequence

# (1, -i) reads (1+i)*1 + (-i) = 1
print(decode(RevolvingSequence(ANGLE, (0, 1))))

# shortest expansion of each point in a small box
for y in range(2, -3, -1):
    row = []
    for x in range(-2, 3):
        w = encode(GaussianInt(x, y))
        row.append(f"{format_word(w.digits) or '-':>12s}")
    print(" ".join(row))

# round trip across a bigger box
box = [GaussianInt(x, y) for x in range(-5, 6) for y in range(-5, 6)]
assert all(decode(encode(z)) == z for z in box)
print("round trip ok for", len(box), "values")
