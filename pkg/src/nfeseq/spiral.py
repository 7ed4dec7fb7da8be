"""Golden spiral as a chain of quarter-circle segments.

Segment ``n`` (``n >= 1``) has characteristic length ``phi**(1 - n)``: it is
the side of the ``n``-th square in the nested golden-rectangle construction
and the radius of the quarter arc drawn inside that square.

Conventions (the construction itself fixes no pose):

* the first square is ``[0, 1] x [0, 1]``; its arc is centred at ``(1, 0)``
  and runs from ``(1, 1)`` to ``(0, 0)``;
* winding is counterclockwise, each arc starting 90 degrees after the last;
* the next centre sits on the previous arc's end radius, at distance
  ``r(n) - r(n+1) = r(n+2)`` from the previous centre.

Radii and centres are computed exactly in Q(sqrt 5) (every step is axis
aligned) and converted to floats only at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ResolutionError
from .golden import ZERO, GoldenNumber, golden_to_float
from .sequence import principal_exact

MAX_SEGMENTS = 1000
MAX_POINTS_PER_ARC = 10_000

# unit vectors for quarter-turn k (angle k*90 degrees)
_AXES = ((1, 0), (0, 1), (-1, 0), (0, -1))
_FIRST_QUARTER = 1


@dataclass(frozen=True)
class SpiralSegment:
    index: int
    length_exact: GoldenNumber
    start_point: tuple[float, float]
    center_point: tuple[float, float]
    #: quarter turns ``k`` such that the arc starts at angle ``k*pi/2``
    quarter: int = _FIRST_QUARTER
    ccw: bool = True

    @property
    def radius(self) -> float:
        return golden_to_float(self.length_exact)

    @property
    def arc_length(self) -> float:
        return 0.5 * math.pi * self.radius

    @property
    def start_angle(self) -> float:
        return self.quarter * 0.5 * math.pi

    @property
    def end_point(self) -> tuple[float, float]:
        step = 1 if self.ccw else -1
        ux, uy = _AXES[(self.quarter + step) % 4]
        cx, cy = self.center_point
        r = self.radius
        return (cx + r * ux, cy + r * uy)

    def sample(self, points_per_arc: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(t, x, y)`` along the arc, ``t`` from 0 to 1; endpoints are exact corners."""
        t = np.linspace(0.0, 1.0, points_per_arc)
        sweep = 0.5 * math.pi if self.ccw else -0.5 * math.pi
        angle = self.start_angle + t * sweep
        cx, cy = self.center_point
        r = self.radius
        x = cx + r * np.cos(angle)
        y = cy + r * np.sin(angle)
        x[0], y[0] = self.start_point
        x[-1], y[-1] = self.end_point
        return t, x, y


@dataclass(frozen=True)
class SpiralModel:
    segments: tuple[SpiralSegment, ...]
    points_per_arc: int

    def __len__(self):
        return len(self.segments)

    def radii(self) -> np.ndarray:
        return np.array([s.radius for s in self.segments])

    def total_radius(self) -> float:
        return math.fsum(s.radius for s in self.segments)

    def total_arc_length(self) -> float:
        return 0.5 * math.pi * self.total_radius()

    def polyline(self) -> np.ndarray:
        """Rows ``(segment_index, t, x, y)`` for every sampled point."""
        blocks = []
        for seg in self.segments:
            t, x, y = seg.sample(self.points_per_arc)
            blocks.append(np.column_stack([np.full_like(t, seg.index), t, x, y]))
        return np.vstack(blocks)

    def endpoint_gaps(self) -> np.ndarray:
        """Distance between each arc's last point and the next arc's first point."""
        gaps = []
        for prev, nxt in zip(self.segments, self.segments[1:]):
            _, px, py = prev.sample(self.points_per_arc)
            _, nx, ny = nxt.sample(self.points_per_arc)
            gaps.append(math.hypot(px[-1] - nx[0], py[-1] - ny[0]))
        return np.array(gaps)

    def bounds(self) -> tuple[float, float, float, float]:
        pts = self.polyline()
        xs, ys = pts[:, 2], pts[:, 3]
        return (float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max()))


def build_spiral(segment_count: int, points_per_arc: int = 64) -> SpiralModel:
    """Nested golden-rectangle spiral with ``segment_count`` quarter arcs.

    >>> [round(s.radius, 4) for s in build_spiral(3).segments]
    [1.0, 0.618, 0.382]
    """
    if segment_count < 1 or points_per_arc < 2:
        raise ValueError("need segment_count >= 1 and points_per_arc >= 2")
    if segment_count > MAX_SEGMENTS or points_per_arc > MAX_POINTS_PER_ARC:
        raise ResolutionError(
            f"at most {MAX_SEGMENTS} segments and {MAX_POINTS_PER_ARC} points per arc"
        )
    lengths = [principal_exact(n) for n in range(1, segment_count + 3)]
    cx, cy = GoldenNumber(1), ZERO
    quarter = _FIRST_QUARTER
    segments = []
    for k in range(segment_count):
        r = lengths[k]
        ux, uy = _AXES[quarter % 4]
        start = (golden_to_float(cx + r * ux), golden_to_float(cy + r * uy))
        center = (golden_to_float(cx), golden_to_float(cy))
        segments.append(SpiralSegment(k + 1, r, start, center, quarter % 4))
        # move towards this arc's end point by r(n) - r(n+1) = r(n+2)
        ex, ey = _AXES[(quarter + 1) % 4]
        shift = lengths[k + 2]
        cx, cy = cx + shift * ex, cy + shift * ey
        quarter += 1
    return SpiralModel(tuple(segments), points_per_arc)


@dataclass
class SegmentCheck:
    """Result of :func:`segment_recurrence_check`."""

    checked: int = 0
    violations: list[int] = field(default_factory=list)
    shape_issues: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def conforming(self) -> bool:
        return not self.shape_issues


def segment_recurrence_check(model) -> SegmentCheck:
    """Check ``L(n) = L(n-2) - L(n-1)`` exactly for every ``n > 2``.

    ``model`` is a :class:`SpiralModel` or any sequence of segments.  The
    recurrence verdict is reported separately from shape problems such as
    non-consecutive indices or lengths that are not ``phi**(1 - n)``.
    """
    segments = list(model.segments if isinstance(model, SpiralModel) else model)
    if len(segments) < 3:
        raise ValueError("need at least three segments")
    report = SegmentCheck()
    for pos in range(2, len(segments)):
        report.checked += 1
        a, b, c = (s.length_exact for s in segments[pos - 2 : pos + 1])
        if c != a - b:
            report.violations.append(segments[pos].index)
    for pos, seg in enumerate(segments):
        if seg.index != pos + 1:
            report.shape_issues.append(f"segment at position {pos + 1} has index {seg.index}")
        if seg.length_exact.sign() <= 0:
            report.shape_issues.append(f"segment {seg.index} has non-positive length {seg.length_exact}")
        elif seg.length_exact != principal_exact(seg.index):
            report.shape_issues.append(
                f"segment {seg.index} length {seg.length_exact} is not phi^{1 - seg.index}"
            )
    return report
