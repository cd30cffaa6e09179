"""Conjugate-affine maps of the plane and attractor approximations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .alphabet import Angle, angle_from_fraction
from .errors import BudgetExceeded, MissingBeta, NoUniqueFixedPoint, ParseError, UnknownPreset
from .series import Family, FamilyParams, PointCloud

DEFAULT_BUDGET = 3**13
WILLIAMS_TOL = 1e-12


@dataclass(frozen=True)
class AffineConjMap:
    """``z -> a*z + c``, or ``z -> a*conj(z) + c`` when ``conj`` is set."""

    a: complex
    c: complex = 0j
    conj: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "conj", bool(self.conj))

    def __call__(self, z):
        return apply(self, z)


@dataclass(frozen=True)
class Ifs:
    maps: tuple[AffineConjMap, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ValueError("an IFS needs at least one map")

    def __len__(self) -> int:
        return len(self.maps)

    @property
    def contraction(self) -> float:
        """Largest linear factor; below 1 for a contracting system."""
        return max(abs(m.a) for m in self.maps)


def apply(m: AffineConjMap, z):
    """Apply a map to a scalar or an array of points."""
    if m.conj:
        z = np.conj(z)
    return m.a * z + m.c


def compose(m1: AffineConjMap, m2: AffineConjMap) -> AffineConjMap:
    """The map ``z -> m1(m2(z))``."""
    a2, c2 = (m2.a.conjugate(), m2.c.conjugate()) if m1.conj else (m2.a, m2.c)
    return AffineConjMap(m1.a * a2, m1.a * c2 + m1.c, m1.conj != m2.conj)


def fixed_point(m: AffineConjMap) -> complex:
    if abs(m.a) >= 1:
        raise NoUniqueFixedPoint(f"|a| = {abs(m.a)} is not a contraction")
    if not m.conj:
        return m.c / (1 - m.a)
    # z = a*conj(z) + c as a real 2x2 system in (x, y)
    ar, ai = m.a.real, m.a.imag
    lhs = np.array([[1 - ar, -ai], [-ai, 1 + ar]])
    x, y = np.linalg.solve(lhs, [m.c.real, m.c.imag])
    return complex(x, y)


def _fixed_points(a: np.ndarray, c: np.ndarray, conj: np.ndarray) -> np.ndarray:
    # conj branch: z = a*conj(z) + c  =>  z = (c + a*conj(c)) / (1 - |a|^2)
    plain = c / (1 - a)
    mirrored = (c + a * np.conj(c)) / (1 - np.abs(a) ** 2)
    return np.where(conj, mirrored, plain)


# -- presets ---------------------------------------------------------------

SQRT3_6 = 3**0.5 / 6

PRESET_PARAMS = {
    "levy": (Family.X1, FamilyParams(complex(0.5, -0.5), angle_from_fraction(1, 4, 1))),
    "tiling": (Family.X1, FamilyParams(complex(0.5, -0.5), angle_from_fraction(1, 4, -1))),
    "heighway": (Family.H1, FamilyParams(complex(0.5, 0.5), angle_from_fraction(1, 4, 1))),
    "twindragon": (Family.H1, FamilyParams(complex(0.5, 0.5), angle_from_fraction(1, 2, 1))),
    "terdragon": (
        Family.T1,
        FamilyParams(
            complex(0.5, -SQRT3_6), angle_from_fraction(1, 3, 1), complex(0.5, SQRT3_6)
        ),
    ),
}


def preset_params(name: str) -> tuple[Family, FamilyParams]:
    try:
        return PRESET_PARAMS[name.lower()]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {sorted(PRESET_PARAMS)}") from None


def family_ifs(f: Family, p: FamilyParams, label: str = "") -> Ifs:
    """The IFS whose attractor the first-digit-one family ``f`` parametrizes."""
    f = f.restricted
    rot = p.alpha * p.angle.unit(1)
    conj = f in (Family.X2SUB1, Family.H2SUB1)
    shift = 1 if f.start == 0 else p.alpha
    maps = [AffineConjMap(p.alpha, 0j, conj), AffineConjMap(rot, complex(shift), conj)]
    if f is Family.T1:
        if p.beta is None:
            raise MissingBeta("the three-map system needs beta")
        maps.append(AffineConjMap(p.alpha, p.beta, False))
    return Ifs(tuple(maps), label or f.value)


def preset(name: str) -> Ifs:
    f, p = preset_params(name)
    return family_ifs(f, p, label=name.lower())


def parse_ifs(text: str, label: str = "custom") -> Ifs:
    """Parse one map per line as ``a_re,a_im,c_re,c_im,conj``.

    Blank lines and ``#`` comments are skipped; ``conj`` is 0/1 or
    true/false.
    """
    maps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [t.strip() for t in line.split(",")]
        if len(parts) != 5:
            raise ParseError(f"expected 5 fields, got {len(parts)}", lineno)
        try:
            are, aim, cre, cim = (float(t) for t in parts[:4])
        except ValueError:
            raise ParseError(f"non-numeric coefficient in {line!r}", lineno) from None
        flag = parts[4].lower()
        if flag in ("1", "true", "t", "yes"):
            conj = True
        elif flag in ("0", "false", "f", "no"):
            conj = False
        else:
            raise ParseError(f"bad conj flag {parts[4]!r}", lineno)
        maps.append(AffineConjMap(complex(are, aim), complex(cre, cim), conj))
    if not maps:
        raise ParseError("no maps found")
    return Ifs(tuple(maps), label)


def _meta(f: Ifs, method: str, **extra) -> dict:
    meta = {"ifs": f.label, "maps": str(len(f)), "method": method}
    meta.update({k: str(v) for k, v in extra.items()})
    return meta


def orbit_depth(f: Ifs, seed: complex = 0j, depth: int = 0, budget: int = DEFAULT_BUDGET) -> PointCloud:
    """Images of ``seed`` under every composition of ``depth`` maps.

    Ordered by address with the outermost map index most significant.
    """
    if len(f) ** depth > budget:
        raise BudgetExceeded(f"{len(f)}**{depth} points exceed the budget {budget}")
    pts = np.array([complex(seed)])
    for _ in range(depth):
        pts = np.concatenate([apply(m, pts) for m in f.maps])
    return PointCloud(pts, _meta(f, "orbit", seed=complex(seed), depth=depth, count=len(pts)))


def dedupe(points: np.ndarray, tol: float = WILLIAMS_TOL) -> np.ndarray:
    """Drop points within ``tol`` of an earlier kept point; keeps input order."""
    points = np.asarray(points, dtype=np.complex128)
    order = np.lexsort((points.imag, points.real))
    keep = np.zeros(len(points), dtype=bool)
    kept: list[int] = []  # indices into points, increasing real part
    for idx in order:
        z = points[idx]
        dup = False
        for j in reversed(kept):
            if z.real - points[j].real > tol:
                break
            if abs(z - points[j]) <= tol:
                dup = True
                break
        if not dup:
            keep[idx] = True
            kept.append(idx)
    return points[keep]


def williams_cloud(f: Ifs, depth: int, budget: int = DEFAULT_BUDGET, tol: float = WILLIAMS_TOL) -> PointCloud:
    """Fixed points of all compositions of 1..depth maps, deduplicated."""
    m = len(f)
    if sum(m**k for k in range(1, depth + 1)) > budget:
        raise BudgetExceeded(f"williams depth {depth} exceeds the budget {budget}")
    base_a = np.array([mp.a for mp in f.maps], dtype=np.complex128)
    base_c = np.array([mp.c for mp in f.maps], dtype=np.complex128)
    base_j = np.array([mp.conj for mp in f.maps], dtype=bool)
    a = np.ones(1, dtype=np.complex128)
    c = np.zeros(1, dtype=np.complex128)
    conj = np.zeros(1, dtype=bool)
    found = []
    for _ in range(depth):
        # prepend one outer map to every composition, outer index most significant
        oa, oc, oj = (x[:, None] for x in (base_a, base_c, base_j))
        inner_a = np.where(oj, np.conj(a)[None, :], a[None, :])
        inner_c = np.where(oj, np.conj(c)[None, :], c[None, :])
        a = (oa * inner_a).reshape(-1)
        c = (oa * inner_c + oc).reshape(-1)
        conj = (oj != conj[None, :]).reshape(-1)
        found.append(_fixed_points(a, c, conj))
    pts = dedupe(np.concatenate(found)) if found else np.zeros(0, dtype=np.complex128)
    return PointCloud(pts, _meta(f, "williams", depth=depth, count=len(pts)))


def chaos_game(
    f: Ifs,
    iterations: int,
    rng_seed: int = 0,
    burn_in: int = 100,
    probabilities: Optional[Sequence[float]] = None,
) -> PointCloud:
    """Random-iteration approximation of the attractor, started from 0."""
    if iterations <= burn_in:
        raise ValueError("iterations must exceed burn_in")
    rng = np.random.default_rng(rng_seed)
    choice = rng.choice(len(f), size=iterations, p=probabilities)
    a = [mp.a for mp in f.maps]
    c = [mp.c for mp in f.maps]
    cj = [mp.conj for mp in f.maps]
    out = np.empty(iterations, dtype=np.complex128)
    z = 0j
    for t, i in enumerate(choice.tolist()):
        z = a[i] * (z.conjugate() if cj[i] else z) + c[i]
        out[t] = z
    pts = out[burn_in:]
    return PointCloud(
        pts,
        _meta(f, "chaos", iterations=iterations, burn_in=burn_in, seed=rng_seed, count=len(pts)),
    )
