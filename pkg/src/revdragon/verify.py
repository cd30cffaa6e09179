"""Finite-depth checks of the set identities behind the dragon families.

Every check returns a :class:`VerifyReport`; ``passed`` is true iff
``max_mismatch <= tolerance``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .alphabet import Angle, angle_from_fraction
from .errors import BudgetExceeded, DegenerateParameter, EmptyCloud
from .ifs import family_ifs, orbit_depth, williams_cloud
from .sequences import (
    Condition,
    FirstDigitPolicy,
    brute_force_count,
    enumerate_array,
)
from .series import Family, FamilyParams, PointCloud, make_cloud

EXACT_TOL = 1e-10


@dataclass
class VerifyReport:
    check_name: str
    depth: object
    max_mismatch: float
    tolerance: float
    counts: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.max_mismatch <= self.tolerance)

    def to_text(self) -> str:
        """Line-oriented ``key=value`` text with a fixed key order."""
        lines = [
            f"check={self.check_name}",
            f"depth={_fmt(self.depth)}",
            f"max_mismatch={_fmt(self.max_mismatch)}",
            f"tolerance={_fmt(self.tolerance)}",
            f"pass={'true' if self.passed else 'false'}",
        ]
        for prefix, table in (("count", self.counts), ("param", self.params), ("info", self.extras)):
            for key in sorted(table):
                lines.append(f"{prefix}.{key}={_fmt(table[key])}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v + 0.0)
    if isinstance(v, complex):
        return f"{v.real + 0.0!r},{v.imag + 0.0!r}"
    if isinstance(v, (list, tuple)):
        return "[" + ";".join(_fmt(x) for x in v) + "]"
    return str(v)


def _points(c) -> np.ndarray:
    if isinstance(c, PointCloud):
        return c.points
    return np.asarray(c, dtype=np.complex128).reshape(-1)


BRUTE_FORCE_PAIRS = 50_000_000


def directed_hausdorff(A, B, method: str = "auto", chunk: int = 1 << 22) -> float:
    """``sup_a inf_b |a - b|``.

    ``brute`` compares every pair in row blocks; ``kdtree`` answers the
    nearest-neighbour queries with scipy's k-d tree.  ``auto`` picks brute
    force up to ``BRUTE_FORCE_PAIRS`` pairs.
    """
    a, b = _points(A), _points(B)
    if len(a) == 0 or len(b) == 0:
        raise EmptyCloud("Hausdorff distance needs non-empty clouds")
    if method == "auto":
        method = "brute" if len(a) * len(b) <= BRUTE_FORCE_PAIRS else "kdtree"
    if method == "kdtree":
        from scipy.spatial import cKDTree

        tree = cKDTree(np.column_stack([b.real, b.imag]))
        dist, _ = tree.query(np.column_stack([a.real, a.imag]), k=1)
        return float(dist.max())
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    bx, by = b.real[None, :], b.imag[None, :]
    rows = max(1, chunk // len(b))
    worst = 0.0
    for s in range(0, len(a), rows):
        blk = a[s : s + rows]
        d2 = (blk.real[:, None] - bx) ** 2 + (blk.imag[:, None] - by) ** 2
        worst = max(worst, float(d2.min(axis=1).max()))
    return worst**0.5


def hausdorff(A, B, method: str = "auto") -> float:
    return max(directed_hausdorff(A, B, method), directed_hausdorff(B, A, method))


def _params_echo(p: FamilyParams) -> dict:
    echo = {"alpha": p.alpha, "theta": str(p.angle)}
    if p.beta is not None:
        echo["beta"] = p.beta
    return echo


def check_set_equation(f: Family, p: FamilyParams, depth: int, tol: float = EXACT_TOL) -> VerifyReport:
    """Compare the depth-n cloud with the IFS image of the depth-(n-1) cloud.

    ``max_mismatch`` is the Hausdorff distance between ``C_n`` and
    ``U = psi_1(C_{n-1}) | ... | psi_m(C_{n-1})``.  The one-sided parts are
    reported as ``info.cloud_to_image`` (sup over C_n) and
    ``info.image_to_cloud`` (sup over U).
    """
    if f.policy is not FirstDigitPolicy.MUST_BE_ONE:
        raise ValueError(f"set equations are defined for first-digit-one families, not {f.value}")
    if depth < 1:
        raise ValueError("set-equation check needs depth >= 1")
    ifs = family_ifs(f, p)
    cur = make_cloud(f, p, depth)
    prev = make_cloud(f, p, depth - 1)
    image = np.concatenate([m(prev.points) for m in ifs.maps])
    fwd = directed_hausdorff(cur.points, image)
    back = directed_hausdorff(image, cur.points)
    return VerifyReport(
        "set-equation",
        depth,
        max(fwd, back),
        tol,
        counts={"cloud": len(cur), "previous": len(prev), "image": len(image)},
        params={"family": f.value, **_params_echo(p)},
        extras={"cloud_to_image": fwd, "image_to_cloud": back, "maps": len(ifs)},
    )


def check_scaling(p: FamilyParams, depth: int, tol: float = 1e-12) -> VerifyReport:
    """H1 = X1/alpha and H2sub1(alpha) = X2sub1(conj alpha)/conj(alpha).

    Both sides enumerate the same words in the same order, so the mismatch
    is measured pointwise (which bounds the set distance from above).
    """
    if p.alpha == 0:
        raise DegenerateParameter("scaling by 1/alpha needs alpha != 0")
    h1 = make_cloud(Family.H1, p, depth).points
    x1 = make_cloud(Family.X1, p, depth).points / p.alpha
    abar = p.alpha.conjugate()
    h2 = make_cloud(Family.H2SUB1, p, depth).points
    x2 = make_cloud(Family.X2SUB1, p.with_alpha(abar), depth).points / abar
    grc = float(np.max(np.abs(h1 - x1)))
    src = float(np.max(np.abs(h2 - x2)))
    return VerifyReport(
        "scaling",
        depth,
        max(grc, src),
        tol,
        counts={"grc": len(h1), "src": len(h2)},
        params=_params_echo(p),
        extras={
            "grc_pointwise": grc,
            "src_pointwise": src,
            "grc_set": hausdorff(h1, x1),
            "src_set": hausdorff(h2, x2),
        },
    )


def check_rotation_union(f: Family, p: FamilyParams, depth: int, tol: float = EXACT_TOL) -> VerifyReport:
    """Free family cloud against the union of rotated first-digit-one clouds."""
    if f not in (Family.X, Family.H):
        raise ValueError(f"rotation union is stated for x and h, not {f.value}")
    free = make_cloud(f, p, depth).points
    base = make_cloud(f.restricted, p, depth).points
    order = p.angle.order
    union = np.concatenate([p.angle.unit(l) * base for l in range(order)])
    return VerifyReport(
        "rotation-union",
        depth,
        hausdorff(free, union),
        tol,
        counts={"free": len(free), "union": len(union)},
        params={"family": f.value, "order": order, **_params_echo(p)},
        extras={"degenerate_angle": order == 1},
    )


def check_convergence(
    f: Family, p: FamilyParams, depths: Sequence[int], slack: float = 0.1
) -> VerifyReport:
    """Successive Hausdorff gaps should shrink at least like ``|alpha|``.

    ``d_k = hausdorff(C_{n_k}, C_{n_{k+1}})``; passes iff every ratio
    ``d_{k+1}/d_k`` is at most ``|alpha| + slack``.
    """
    depths = list(depths)
    if len(depths) < 3 or any(b <= a for a, b in zip(depths, depths[1:])):
        raise ValueError("need at least three strictly increasing depths")
    clouds = [make_cloud(f, p, n).points for n in depths]
    gaps = [hausdorff(a, b) for a, b in zip(clouds, clouds[1:])]
    ratios = []
    for g0, g1 in zip(gaps, gaps[1:]):
        if g0 == 0:
            ratios.append(0.0 if g1 == 0 else float("inf"))
        else:
            ratios.append(g1 / g0)
    return VerifyReport(
        "convergence",
        depths,
        max(ratios),
        abs(p.alpha) + slack,
        counts={f"n{n}": len(c) for n, c in zip(depths, clouds)},
        params={"family": f.value, **_params_echo(p)},
        extras={"gaps": gaps, "ratios": ratios, "abs_alpha": abs(p.alpha)},
    )


def tail_bound(f: Family, p: FamilyParams, seq_depth: int, ifs_depth: int) -> float:
    """Bound on hausdorff(series cloud, orbit cloud) from the geometric tails.

    Both clouds lie within ``r**n * diam`` of the attractor, where ``r`` is
    the contraction ratio and ``diam <= 2 * max|c_i| / (1 - r)``.
    """
    ifs = family_ifs(f, p)
    r = ifs.contraction
    radius = max(abs(m.c) for m in ifs.maps) / (1 - r)
    return 2 * radius * (r**seq_depth + r**ifs_depth)


def check_cross_representation(
    f: Family,
    p: FamilyParams,
    seq_depth: int,
    ifs_depth: int,
    tol: Optional[float] = None,
) -> VerifyReport:
    """Series cloud and Williams cloud against the IFS orbit of 0."""
    if f.policy is not FirstDigitPolicy.MUST_BE_ONE:
        raise ValueError(f"{f.value} has no IFS of its own; use its first-digit-one family")
    bound = tail_bound(f, p, seq_depth, ifs_depth)
    if tol is None:
        tol = bound
    ifs = family_ifs(f, p)
    seq = make_cloud(f, p, seq_depth)
    orbit = orbit_depth(ifs, 0j, ifs_depth)
    d_seq = hausdorff(seq, orbit)
    extras = {"series_vs_orbit": d_seq, "tail_bound": bound}
    counts = {"series": len(seq), "orbit": len(orbit)}
    worst = d_seq
    if ifs_depth > 0:
        will = williams_cloud(ifs, ifs_depth)
        d_will = hausdorff(will, orbit)
        extras["williams_vs_orbit"] = d_will
        counts["williams"] = len(will)
        worst = max(worst, d_will)
    return VerifyReport(
        "cross-representation",
        f"{seq_depth}/{ifs_depth}",
        worst,
        tol,
        counts=counts,
        params={"family": f.value, **_params_echo(p)},
        extras=extras,
    )


def closed_form_count(c: Condition, order: int, n: int, policy: FirstDigitPolicy) -> int:
    """Number of valid words of length n.

    After the first nonzero digit every later position has 2 choices (zero
    or the forced successor) for GRC/SRC and 3 for TRC (2 when order is 1).
    """
    branch = 3 if c is Condition.TRC and order >= 2 else 2
    openers = order if policy is FirstDigitPolicy.FREE else 1
    # sum over the first nonzero position k of openers * branch**(n - k)
    return 1 + openers * (branch**n - 1) // (branch - 1)


def count_check(
    c: Condition,
    lengths: Sequence[int],
    angle: Angle = angle_from_fraction(1, 3),
    policy: FirstDigitPolicy = FirstDigitPolicy.MUST_BE_ONE,
    brute_limit: int = 20_000_000,
) -> VerifyReport:
    """Enumerator cardinality against a brute-force filter of every word."""
    enum_counts, brute_counts, formula = [], [], []
    for n in lengths:
        if (angle.order + 1) ** n > brute_limit:
            raise BudgetExceeded(f"brute force over {(angle.order + 1) ** n} words exceeds {brute_limit}")
        enum_counts.append(len(enumerate_array(c, angle, n, policy, max_length=max(n, 1))))
        brute_counts.append(brute_force_count(c, angle, n, policy))
        formula.append(closed_form_count(c, angle.order, n, policy))
    mismatch = max((abs(e - b) for e, b in zip(enum_counts, brute_counts)), default=0)
    return VerifyReport(
        "count",
        list(lengths),
        float(mismatch),
        0.0,
        params={"condition": c.value, "theta": str(angle), "policy": policy.value},
        extras={
            "enumerated": enum_counts,
            "brute_force": brute_counts,
            "closed_form": formula,
            "closed_form_holds": formula == brute_counts,
        },
    )
