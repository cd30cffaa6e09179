"""Series parametrizations of the dragon families and their point clouds.

Ten families are supported.  ``X``/``H`` sum a GRC word against powers of
``alpha`` (``H`` starts at exponent 0), ``X2``/``H2`` sum an SRC word against
alternating products of ``alpha`` and ``conj(alpha)``, and ``T`` sums a TRC
word with ``alpha**n`` replaced by ``alpha**(n-1) * beta`` wherever the binary
static sequence is 1.  The ``*1`` variants restrict the first nonzero digit
to 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .alphabet import Angle, digit_value, unit_values
from .errors import DegenerateParameter, MissingBeta
from .sequences import (
    ZERO_CODE,
    Condition,
    FirstDigitPolicy,
    RevolvingSequence,
    bss_array,
    compute_bss,
    enumerate_array,
)


@dataclass(frozen=True)
class FamilyParams:
    alpha: complex
    angle: Angle
    beta: Optional[complex] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        if abs(self.alpha) >= 1:
            raise DegenerateParameter(f"|alpha| must be < 1, got {abs(self.alpha)}")
        if self.beta is not None:
            object.__setattr__(self, "beta", complex(self.beta))
            if abs(self.beta) >= 1:
                raise DegenerateParameter(f"|beta| must be < 1, got {abs(self.beta)}")

    def with_alpha(self, alpha: complex) -> "FamilyParams":
        return FamilyParams(alpha, self.angle, self.beta)


class Family(enum.Enum):
    X1 = "x1"
    X = "x"
    H1 = "h1"
    H = "h"
    X2SUB1 = "x2sub1"
    X2 = "x2"
    H2SUB1 = "h2sub1"
    H2 = "h2"
    T1 = "t1"
    T = "t"

    @property
    def condition(self) -> Condition:
        if self in (Family.X1, Family.X, Family.H1, Family.H):
            return Condition.GRC
        if self in (Family.X2SUB1, Family.X2, Family.H2SUB1, Family.H2):
            return Condition.SRC
        return Condition.TRC

    @property
    def policy(self) -> FirstDigitPolicy:
        if self in (Family.X1, Family.H1, Family.X2SUB1, Family.H2SUB1, Family.T1):
            return FirstDigitPolicy.MUST_BE_ONE
        return FirstDigitPolicy.FREE

    @property
    def start(self) -> int:
        return 0 if self in (Family.H1, Family.H, Family.H2SUB1, Family.H2) else 1

    @property
    def needs_beta(self) -> bool:
        return self.condition is Condition.TRC

    @property
    def restricted(self) -> "Family":
        """The first-digit-one counterpart of a free family (identity otherwise)."""
        return _RESTRICTED.get(self, self)

    @classmethod
    def parse(cls, name: str) -> "Family":
        # "x2sub1", "x2_1" and "X2-1" all name the same family
        key = name.strip().lower().replace("_", "").replace("-", "").replace("sub", "")
        for fam in cls:
            if fam.value.replace("sub", "") == key:
                return fam
        raise ValueError(f"unknown family {name!r}; choose from {[f.value for f in cls]}")


_RESTRICTED = {
    Family.X: Family.X1,
    Family.H: Family.H1,
    Family.X2: Family.X2SUB1,
    Family.H2: Family.H2SUB1,
    Family.T: Family.T1,
}


@dataclass
class PointCloud:
    points: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.complex128).reshape(-1)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def count(self) -> int:
        return len(self.points)


def _powers(base: complex, n: int) -> list[complex]:
    out = [complex(1.0)]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def _alternating_products(alpha: complex, n: int) -> list[complex]:
    """``prods[m] = eta_1 * ... * eta_m`` with eta odd = alpha, even = conj(alpha)."""
    prods = [complex(1.0)]
    for j in range(1, n + 1):
        prods.append(prods[-1] * (alpha if j % 2 == 1 else alpha.conjugate()))
    return prods


def grc_coefficients(alpha: complex, length: int, start: int) -> list[complex]:
    pw = _powers(alpha, length + 1)
    return [pw[m - 1 + start] for m in range(1, length + 1)]


def src_coefficients(alpha: complex, length: int, start: int) -> list[complex]:
    prods = _alternating_products(alpha, length + 1)
    return [prods[m - 1 + start] for m in range(1, length + 1)]


def eval_grc_series(s: RevolvingSequence, alpha: complex, start: int = 1) -> complex:
    """Sum of ``delta_m * alpha**(m - 1 + start)`` over word positions m."""
    coef = grc_coefficients(complex(alpha), len(s), start)
    total = 0j
    for d, c in zip(s.digits, coef):
        if d is not None:
            total += digit_value(d, s.angle) * c
    return total


def eval_src_series(s: RevolvingSequence, alpha: complex, start: int = 1) -> complex:
    """Sum of ``delta_m`` times the alternating alpha/conj(alpha) product.

    Position m carries ``eta_1 ... eta_m`` when ``start=1`` and
    ``eta_1 ... eta_(m-1)`` when ``start=0``.
    """
    coef = src_coefficients(complex(alpha), len(s), start)
    total = 0j
    for d, c in zip(s.digits, coef):
        if d is not None:
            total += digit_value(d, s.angle) * c
    return total


def eval_trc_series(s: RevolvingSequence, alpha: complex, beta: complex) -> complex:
    """Sum of ``delta_n * alpha**n * (beta/alpha)**b_n`` with b the BSS of s."""
    alpha, beta = complex(alpha), complex(beta)
    if alpha == 0:
        raise DegenerateParameter("alpha = 0 makes beta/alpha undefined")
    pw = _powers(alpha, len(s))
    total = 0j
    for n, (d, b) in enumerate(zip(s.digits, compute_bss(s)), start=1):
        if d is None:
            continue
        total += digit_value(d, s.angle) * (pw[n - 1] * beta if b else pw[n])
    return total


def evaluate(f: Family, p: FamilyParams, s: RevolvingSequence) -> complex:
    """Evaluate one word with the series matching family ``f``."""
    if f.condition is Condition.GRC:
        return eval_grc_series(s, p.alpha, f.start)
    if f.condition is Condition.SRC:
        return eval_src_series(s, p.alpha, f.start)
    if p.beta is None:
        raise MissingBeta(f"family {f.value} needs beta")
    return eval_trc_series(s, p.alpha, p.beta)


def evaluate_array(f: Family, p: FamilyParams, words: np.ndarray) -> np.ndarray:
    """Vectorized :func:`evaluate` over a word array (zero digits as -1)."""
    words = np.asarray(words)
    n_words, length = words.shape
    units = np.array(unit_values(p.angle), dtype=np.complex128)
    out = np.zeros(n_words, dtype=np.complex128)
    if f.condition is Condition.TRC:
        if p.beta is None:
            raise MissingBeta(f"family {f.value} needs beta")
        if p.alpha == 0:
            raise DegenerateParameter("alpha = 0 makes beta/alpha undefined")
        pw = _powers(p.alpha, length)
        bits = bss_array(words)
        for j in range(length):
            col = words[:, j]
            nz = col != ZERO_CODE
            coef = np.where(bits[:, j] == 1, pw[j] * p.beta, pw[j + 1])
            out += np.where(nz, units[np.where(nz, col, 0)] * coef, 0)
        return out
    if f.condition is Condition.GRC:
        coef = grc_coefficients(p.alpha, length, f.start)
    else:
        coef = src_coefficients(p.alpha, length, f.start)
    for j in range(length):
        col = words[:, j]
        nz = col != ZERO_CODE
        out += np.where(nz, units[np.where(nz, col, 0)] * coef[j], 0)
    return out


def cloud_meta(f: Family, p: FamilyParams, depth: int, count: int) -> dict:
    meta = {
        "family": f.value,
        "alpha": _fmt_complex(p.alpha),
        "theta": str(p.angle),
        "depth": str(depth),
        "count": str(count),
    }
    if p.beta is not None:
        meta["beta"] = _fmt_complex(p.beta)
    return meta


def make_cloud(f: Family, p: FamilyParams, depth: int, max_length: Optional[int] = None) -> PointCloud:
    """All series values over valid words of length ``depth``, in enumeration order."""
    if f.needs_beta and p.beta is None:
        raise MissingBeta(f"family {f.value} needs beta")
    words = enumerate_array(f.condition, p.angle, depth, f.policy, max_length=max_length)
    pts = evaluate_array(f, p, words)
    return PointCloud(pts, cloud_meta(f, p, depth, len(pts)))


def _fmt_complex(z: complex) -> str:
    return f"{z.real + 0.0:.17g},{z.imag + 0.0:.17g}"
