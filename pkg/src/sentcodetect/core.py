"""Geometric and video-level domain types shared by every stage.

Conventions: frames are 1-indexed (1..T), box coordinates are continuous
pixels within [0, W] x [0, H], and per-axis normalization divides x by the
frame width and y by the frame height. Predicate scores are log-domain
floats in [-inf, 0]; IEEE -inf is a legal, absorbing value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DegenerateTrack

Score = float
NEG_INF = float("-inf")


@dataclass(frozen=True)
class BoundingBox:
    """Axis-aligned box in continuous pixel coordinates, x_min < x_max."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(f"degenerate box {self}")

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def area(self) -> float:
        return self.width * self.height

    def center(self) -> Tuple[float, float]:
        return ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0)

    def translated(self, dx: float, dy: float) -> "BoundingBox":
        return BoundingBox(self.x_min + dx, self.y_min + dy,
                           self.x_max + dx, self.y_max + dy)

    def clamped(self, width: float, height: float) -> "BoundingBox":
        """Clip to the frame; raises ValueError if nothing remains."""
        return BoundingBox(
            min(max(self.x_min, 0.0), width),
            min(max(self.y_min, 0.0), height),
            min(max(self.x_max, 0.0), width),
            min(max(self.y_max, 0.0), height),
        )

    def shifted_into(self, width: float, height: float) -> "BoundingBox":
        """Translate the box (size preserved) so it lies inside the frame.

        Used by trackers so drift off-frame does not shrink the tube; a box
        larger than the frame cannot be shifted in and raises DegenerateTrack.
        """
        if self.width > width or self.height > height:
            raise DegenerateTrack(f"box {self} larger than frame {width}x{height}")
        dx = max(0.0, -self.x_min) + min(0.0, width - self.x_max)
        dy = max(0.0, -self.y_min) + min(0.0, height - self.y_max)
        return self.translated(dx, dy)


def box_area(b: BoundingBox) -> float:
    """Area in pixels squared."""
    return b.area()


@dataclass(frozen=True)
class VideoMeta:
    """Identity and geometry of one video clip."""

    id: str
    width: float
    height: float
    frame_count: int
    fps: float = 30.0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("frame dimensions must be positive")
        if self.frame_count < 2:
            raise ValueError("a video needs at least two frames")
        if self.fps <= 0:
            raise ValueError("fps must be positive")


@dataclass(frozen=True)
class Detection:
    """One box in one frame, optionally carrying a rotation-angle channel."""

    frame_index: int
    box: BoundingBox
    orientation: Optional[float] = None  # radians in (-pi, pi]

    def __post_init__(self):
        if self.frame_index < 1:
            raise ValueError("frames are 1-indexed")


class MotionClass(str, enum.Enum):
    MOVING = "moving"
    STATIONARY = "stationary"


@dataclass(frozen=True)
class Proposal:
    """A tube: exactly one detection per frame 1..T of its video."""

    video_id: str
    boxes: Tuple[Detection, ...]
    motion_class: MotionClass
    seed_frame: int

    def __post_init__(self):
        if len(self.boxes) < 2:
            raise ValueError("a tube needs at least two frames")
        for t, d in enumerate(self.boxes, start=1):
            if d.frame_index != t:
                raise ValueError(f"frame {t} holds detection for frame {d.frame_index}")
        if not (1 <= self.seed_frame <= len(self.boxes)):
            raise ValueError("seed frame outside the tube")
        if self.motion_class is MotionClass.STATIONARY:
            w0, h0 = self.boxes[0].box.width, self.boxes[0].box.height
            for d in self.boxes[1:]:
                if not (math.isclose(d.box.width, w0, abs_tol=1e-6)
                        and math.isclose(d.box.height, h0, abs_tol=1e-6)):
                    raise ValueError("stationary tube changed size")

    @property
    def frame_count(self) -> int:
        return len(self.boxes)

    def box_at(self, t: int) -> BoundingBox:
        return self.boxes[t - 1].box

    def has_orientation(self) -> bool:
        return any(d.orientation is not None for d in self.boxes)


@dataclass(frozen=True)
class FlowGrid:
    """Per-frame optical-flow vectors on a coarse grid.

    u and v have shape (T, Gy, Gx); cell (i, j) of frame t covers pixels
    [j*cell_px, (j+1)*cell_px) x [i*cell_px, (i+1)*cell_px). Box queries
    average over cells whose centers fall inside the box, falling back to
    the cell under the box center when the box is narrower than a cell.
    """

    u: np.ndarray
    v: np.ndarray
    cell_px: float
    _mag: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        u = np.asarray(self.u, dtype=np.float64)
        v = np.asarray(self.v, dtype=np.float64)
        if u.shape != v.shape or u.ndim != 3:
            raise ValueError("u and v must share shape (T, Gy, Gx)")
        if u.shape[1] < 1 or u.shape[2] < 1:
            raise ValueError("grid must be at least 1x1")
        if self.cell_px <= 0:
            raise ValueError("cell size must be positive")
        u.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        mag = np.hypot(u, v)
        mag.flags.writeable = False
        object.__setattr__(self, "_mag", mag)

    @property
    def frame_count(self) -> int:
        return self.u.shape[0]

    def _cell_slice(self, lo: float, hi: float, n: int) -> slice:
        first = int(math.ceil(lo / self.cell_px - 0.5))
        last = int(math.floor(hi / self.cell_px - 0.5))
        if last < first:
            mid = int(round((lo + hi) / 2.0 / self.cell_px - 0.5))
            mid = min(max(mid, 0), n - 1)
            return slice(mid, mid + 1)
        return slice(max(first, 0), min(last, n - 1) + 1)

    def _box_cells(self, box: BoundingBox) -> Tuple[slice, slice]:
        _, gy, gx = self.u.shape
        return (self._cell_slice(box.y_min, box.y_max, gy),
                self._cell_slice(box.x_min, box.x_max, gx))

    def frame_mean_magnitude(self, t: int) -> float:
        return float(self._mag[t - 1].mean())

    def mean_magnitude_in_box(self, t: int, box: BoundingBox) -> float:
        ys, xs = self._box_cells(box)
        return float(self._mag[t - 1, ys, xs].mean())

    def mean_vector_in_box(self, t: int, box: BoundingBox) -> Tuple[float, float]:
        ys, xs = self._box_cells(box)
        return (float(self.u[t - 1, ys, xs].mean()),
                float(self.v[t - 1, ys, xs].mean()))


@dataclass(frozen=True)
class OrientationField:
    """Per-frame grid of rotation angles (radians), same geometry as FlowGrid.

    Stands in for pixel-based angle estimation: a tube reads its orientation
    channel off the cell under each box center.
    """

    angles: np.ndarray  # (T, Gy, Gx)
    cell_px: float

    def __post_init__(self):
        a = np.asarray(self.angles, dtype=np.float64)
        if a.ndim != 3:
            raise ValueError("angles must have shape (T, Gy, Gx)")
        a.flags.writeable = False
        object.__setattr__(self, "angles", a)

    def at_box_center(self, t: int, box: BoundingBox) -> float:
        _, gy, gx = self.angles.shape
        cx, cy = box.center()
        j = min(max(int(round(cx / self.cell_px - 0.5)), 0), gx - 1)
        i = min(max(int(round(cy / self.cell_px - 0.5)), 0), gy - 1)
        return float(self.angles[t - 1, i, j])


def normalized_center(d: Detection, v: VideoMeta) -> Tuple[float, float]:
    """Box center divided per-axis by the frame dimensions."""
    cx, cy = d.box.center()
    return (cx / v.width, cy / v.height)


def normalized_dist(d1: Detection, d2: Detection, v: VideoMeta) -> float:
    """Euclidean distance between normalized centers (unit square)."""
    x1, y1 = normalized_center(d1, v)
    x2, y2 = normalized_center(d2, v)
    return math.hypot(x1 - x2, y1 - y2)


def wrap_angle(a: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    w = a % (2.0 * math.pi)
    if w > math.pi:
        w -= 2.0 * math.pi
    return w


def lower_median(values: Sequence[float]) -> float:
    """Median with the lower element taken for even counts."""
    if len(values) == 0:
        raise ValueError("median of empty sequence")
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]
