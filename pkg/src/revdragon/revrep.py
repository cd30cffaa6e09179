"""Revolving representations of Gaussian integers in base 1+i.

Digits follow the cycle 1 -> -i -> -1 -> i, i.e. GRC words for
theta = -pi/2, and a word (d_0, ..., d_n) stands for
sum_k d_(n-k) * (1+i)**k.  Everything here is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import angle_from_fraction
from .errors import InvalidSequence, NotFound, ParseError
from .sequences import Condition, FirstDigitPolicy, RevolvingSequence, validate

ANGLE = angle_from_fraction(1, 4, -1)

# exp(-i*k*pi/2) for k = 0..3
_UNITS = ((1, 0), (0, -1), (-1, 0), (0, 1))


@dataclass(frozen=True)
class GaussianInt:
    x: int
    y: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.x + other.x, self.y + other.y)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.x * other.x - self.y * other.y, self.x * other.y + self.y * other.x)

    def norm(self) -> int:
        return self.x * self.x + self.y * self.y

    def __str__(self) -> str:
        return f"{self.x},{self.y}"

    @classmethod
    def parse(cls, text: str) -> "GaussianInt":
        try:
            x, y = (int(t) for t in text.split(","))
        except ValueError:
            raise ParseError(f"expected 'x,y' integers, got {text!r}") from None
        return cls(x, y)


def _times_base(x: int, y: int) -> tuple[int, int]:
    return x - y, x + y


def decode(s: RevolvingSequence, policy: FirstDigitPolicy = FirstDigitPolicy.FREE) -> GaussianInt:
    if s.angle != ANGLE:
        raise InvalidSequence(f"revolving representations use theta = -1/4 turn, got {s.angle}")
    if not validate(s, Condition.GRC, policy):
        raise InvalidSequence(f"{s} breaks the revolving cycle")
    x = y = 0
    for d in s.digits:
        x, y = _times_base(x, y)
        if d is not None:
            ux, uy = _UNITS[d]
            x, y = x + ux, y + uy
    return GaussianInt(x, y)


def _reach(r: int) -> int:
    """Integer upper bound on |sum of r unit digits times (1+i)**k| squared."""
    # |1+i|**k <= 2**ceil(k/2)
    total = sum(2 ** ((k + 1) // 2) for k in range(r))
    return total * total


def encode(
    z: GaussianInt,
    max_len: int = 12,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
) -> RevolvingSequence:
    """Shortest revolving word decoding to ``z``.

    Lengths are tried in increasing order; within a length, words are
    searched in enumeration order (Zero < 1 < -i < -1 < i, leftmost digit
    most significant) and the first hit is returned.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    if z.x == 0 and z.y == 0:
        return RevolvingSequence(ANGLE, ())
    openers = range(4) if policy is FirstDigitPolicy.FREE else (0,)
    for length in range(1, max_len + 1):
        reach = [_reach(r) for r in range(length + 1)]
        word: list[Optional[int]] = [None] * length

        def search(pos: int, x: int, y: int, last: Optional[int]) -> bool:
            rest = length - pos
            # value = (x, y) * (1+i)**rest + tail with |tail|^2 <= reach[rest]
            px, py = x, y
            for _ in range(rest):
                px, py = _times_base(px, py)
            dx, dy = z.x - px, z.y - py
            if dx * dx + dy * dy > reach[rest]:
                return False
            if rest == 0:
                return dx == 0 and dy == 0
            bx, by = _times_base(x, y)
            word[pos] = None
            if search(pos + 1, bx, by, last):
                return True
            for d in (openers if last is None else ((last + 1) % 4,)):
                ux, uy = _UNITS[d]
                word[pos] = d
                if search(pos + 1, bx + ux, by + uy, d):
                    return True
            word[pos] = None
            return False

        # a leading zero never shortens a word, so the first digit is nonzero
        for d in openers:
            word[0] = d
            ux, uy = _UNITS[d]
            if search(1, ux, uy, d):
                return RevolvingSequence(ANGLE, tuple(word))
    raise NotFound(f"no revolving word of length <= {max_len} decodes to {z}")
