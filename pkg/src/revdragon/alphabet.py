"""Exact rotation angles and the revolving digit alphabet.

An angle is a signed reduced fraction ``q/p`` of a full turn, so that
``theta = sign * 2*pi*q/p``.  Digits are stored as exponents of
``exp(i*theta)``: ``None`` is the zero digit and an integer ``k`` (reduced
modulo the angle's order) is the unit ``exp(i*k*theta)``.  Floats only
appear in :func:`digit_value`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AngleOutOfRange, InvalidDenominator, ParseError

Digit = Optional[int]
ZERO: Digit = None

_QUARTER_TURNS = (complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1))


@dataclass(frozen=True)
class Angle:
    numerator: int
    denominator: int
    sign: int = 1

    def __post_init__(self):
        if self.denominator < 1:
            raise InvalidDenominator(f"denominator must be positive, got {self.denominator}")
        if self.numerator < 0:
            raise AngleOutOfRange(f"numerator must be non-negative, got {self.numerator}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError("Angle fields must be reduced; use angle_from_fraction")
        if 2 * self.numerator > self.denominator:
            raise AngleOutOfRange(f"{self.numerator}/{self.denominator} exceeds half a turn")

    @property
    def order(self) -> int:
        """Multiplicative order of exp(i*theta)."""
        return self.denominator if self.numerator else 1

    @property
    def radians(self) -> float:
        return self.sign * 2.0 * math.pi * self.numerator / self.denominator

    @property
    def turn(self) -> Fraction:
        """theta / (2*pi) as an exact signed fraction."""
        return Fraction(self.sign * self.numerator, self.denominator)

    def unit(self, steps: int = 1) -> complex:
        """exp(i*steps*theta), exact for quarter-turn multiples."""
        return digit_value(steps % self.order, self)

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}{self.numerator}/{self.denominator}"

    @classmethod
    def parse(cls, text: str) -> "Angle":
        """Parse the textual form ``"[+-]q/p"``, e.g. ``"-1/4"`` for -pi/2."""
        s = text.strip()
        sign = 1
        if s[:1] in "+-":
            sign = -1 if s[0] == "-" else 1
            s = s[1:]
        num, sep, den = s.partition("/")
        if not sep:
            den = "1"
        try:
            q, p = int(num), int(den)
        except ValueError:
            raise ParseError(f"cannot parse angle {text!r}; expected '±q/p'") from None
        return angle_from_fraction(q, p, sign)


def angle_from_fraction(q: int, p: int, sign: int = 1) -> Angle:
    """Build the reduced angle ``sign * 2*pi*q/p``.

    Zero is stored as ``0/1`` with positive sign and half a turn is always
    stored with positive sign, so every angle in ``(-pi, pi]`` has exactly
    one representation.
    """
    if p < 1:
        raise InvalidDenominator(f"denominator must be positive, got {p}")
    if q < 0:
        raise AngleOutOfRange(f"numerator must be non-negative, got {q}")
    g = math.gcd(q, p)
    q, p = q // g, p // g
    if 2 * q > p:
        raise AngleOutOfRange(f"|theta| = 2*pi*{q}/{p} exceeds pi")
    if q == 0 or 2 * q == p:
        sign = 1
    return Angle(q, p, 1 if sign >= 0 else -1)


def rotate(d: Digit, steps: int, a: Angle) -> Digit:
    """Multiply a digit by exp(i*steps*theta)."""
    if d is None:
        return None
    return (d + steps) % a.order


def digit_value(d: Digit, a: Angle) -> complex:
    if d is None:
        return complex(0.0, 0.0)
    # exact turn fraction k*theta/(2*pi), reduced into [0, 1)
    t = Fraction(a.sign * a.numerator * d, a.denominator) % 1
    if (4 * t).denominator == 1:
        return _QUARTER_TURNS[int(4 * t)]
    # fold into (-1/2, 1/2] before scaling to keep the argument small
    if t > Fraction(1, 2):
        t -= 1
    x = 2.0 * math.pi * t.numerator / t.denominator
    return complex(math.cos(x), math.sin(x))


def unit_values(a: Angle) -> list[complex]:
    """Values of Unit(0), ..., Unit(order-1)."""
    return [digit_value(k, a) for k in range(a.order)]


def parse_word(text: str, a: Angle) -> tuple[Digit, ...]:
    """Parse ``"0,z,1,1"`` into exponents; ``z`` marks a zero digit."""
    s = text.strip()
    if not s:
        return ()
    digits: list[Digit] = []
    for tok in s.split(","):
        tok = tok.strip()
        if tok.lower() == "z":
            digits.append(None)
            continue
        try:
            digits.append(int(tok) % a.order)
        except ValueError:
            raise ParseError(f"bad digit {tok!r}; expected an exponent or 'z'") from None
    return tuple(digits)


def format_word(digits) -> str:
    return ",".join("z" if d is None else str(d) for d in digits)
