"""Point-cloud CSV files and plain PGM rasters.

CSV layout: ``# key=value`` header lines carrying the cloud metadata, then
one ``re,im`` line per point with 17 significant digits (enough for an
exact double round trip).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateViewport, EmptyCloud, ParseError
from .series import PointCloud


def _num(v: float) -> str:
    # + 0.0 folds -0.0 into 0.0
    return f"{float(v) + 0.0:.17g}"


def format_csv(c: PointCloud) -> str:
    buf = io.StringIO()
    for key in sorted(c.meta):
        buf.write(f"# {key}={c.meta[key]}\n")
    for z in c.points:
        buf.write(f"{_num(z.real)},{_num(z.imag)}\n")
    return buf.getvalue()


def write_csv(c: PointCloud, destination) -> None:
    """Write to a path or a text stream."""
    text = format_csv(c)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", newline="\n") as fh:
            fh.write(text)


def parse_csv(text: str) -> PointCloud:
    meta = {}
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                meta[key.strip()] = value.strip()
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 're,im', got {line!r}", lineno)
        try:
            pts.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"non-numeric point {line!r}", lineno) from None
    return PointCloud(np.array(pts, dtype=np.complex128), meta)


def read_csv(source) -> PointCloud:
    """Read from a path or a text stream."""
    if hasattr(source, "read"):
        return parse_csv(source.read())
    with open(source) as fh:
        return parse_csv(fh.read())


@dataclass(frozen=True)
class Viewport:
    min_re: float
    max_re: float
    min_im: float
    max_im: float
    width: int = 512
    height: int = 512

    def __post_init__(self):
        if not (self.max_re > self.min_re and self.max_im > self.min_im):
            raise DegenerateViewport(f"empty region {self}")
        if self.width < 1 or self.height < 1:
            raise DegenerateViewport("width and height must be positive")

    @classmethod
    def fit(cls, c: PointCloud, width: int = 512, height: int = 512, margin: float = 0.05) -> "Viewport":
        """Bounding box of the cloud grown by ``margin`` of its extent per side."""
        if len(c) == 0:
            raise EmptyCloud("cannot fit a viewport to an empty cloud")
        re, im = c.points.real, c.points.imag
        lo_re, hi_re, lo_im, hi_im = re.min(), re.max(), im.min(), im.max()
        dre, dim = hi_re - lo_re, hi_im - lo_im
        if dre <= 0 or dim <= 0:
            raise DegenerateViewport("cloud has zero width or height; pass an explicit viewport")
        return cls(
            float(lo_re - margin * dre),
            float(hi_re + margin * dre),
            float(lo_im - margin * dim),
            float(hi_im + margin * dim),
            width,
            height,
        )


def rasterize(c: PointCloud, v: Viewport) -> np.ndarray:
    """Per-pixel point counts, row 0 at the top (largest imaginary part)."""
    re, im = c.points.real, c.points.imag
    inside = (re >= v.min_re) & (re <= v.max_re) & (im >= v.min_im) & (im <= v.max_im)
    re, im = re[inside], im[inside]
    col = np.floor((re - v.min_re) / (v.max_re - v.min_re) * v.width).astype(np.int64)
    row = np.floor((v.max_im - im) / (v.max_im - v.min_im) * v.height).astype(np.int64)
    col = np.clip(col, 0, v.width - 1)
    row = np.clip(row, 0, v.height - 1)
    counts = np.zeros((v.height, v.width), dtype=np.int64)
    np.add.at(counts, (row, col), 1)
    return counts


def render(c: PointCloud, v: Optional[Viewport] = None, mode: str = "binary") -> str:
    """Plain (P2) PGM text, maxval 255.

    ``binary`` paints every occupied pixel white; ``log_density`` scales
    ``log(1 + count)`` to the densest pixel.
    """
    if v is None:
        v = Viewport.fit(c)
    counts = rasterize(c, v)
    if mode == "binary":
        gray = np.where(counts > 0, 255, 0)
    elif mode in ("log_density", "log"):
        peak = counts.max()
        if peak == 0:
            gray = np.zeros_like(counts)
        else:
            gray = np.rint(255 * np.log1p(counts) / math.log1p(peak)).astype(np.int64)
    else:
        raise ValueError(f"unknown render mode {mode!r}")
    lines = ["P2", f"{v.width} {v.height}", "255"]
    lines.extend(" ".join(str(int(g)) for g in row) for row in gray)
    return "\n".join(lines) + "\n"


def write_pgm(text: str, destination) -> None:
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", newline="\n") as fh:
            fh.write(text)


def parse_pgm(text: str) -> np.ndarray:
    """Read back a plain PGM as a (height, width) integer array."""
    tokens = [t for line in text.splitlines() for t in line.split("#", 1)[0].split()]
    if not tokens or tokens[0] != "P2":
        raise ParseError("not a plain PGM (missing P2 magic)")
    w, h = int(tokens[1]), int(tokens[2])
    data = np.array([int(t) for t in tokens[4:]], dtype=np.int64)
    if data.size != w * h:
        raise ParseError(f"expected {w * h} pixels, found {data.size}")
    return data.reshape(h, w)
