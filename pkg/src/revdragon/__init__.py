"""Revolving-sequence parametrizations of dragon fractals."""

from .alphabet import Angle, angle_from_fraction, digit_value, rotate
from .errors import RevDragonError
from .ifs import AffineConjMap, Ifs, chaos_game, orbit_depth, preset, williams_cloud
from .sequences import (
    Condition,
    FirstDigitPolicy,
    RevolvingSequence,
    compute_bss,
    enumerate_words,
    validate,
)
from .series import Family, FamilyParams, PointCloud, make_cloud

__all__ = [
    "AffineConjMap",
    "Angle",
    "Condition",
    "Family",
    "FamilyParams",
    "FirstDigitPolicy",
    "Ifs",
    "PointCloud",
    "RevDragonError",
    "RevolvingSequence",
    "angle_from_fraction",
    "chaos_game",
    "compute_bss",
    "digit_value",
    "enumerate_words",
    "make_cloud",
    "orbit_depth",
    "preset",
    "rotate",
    "validate",
    "williams_cloud",
]
