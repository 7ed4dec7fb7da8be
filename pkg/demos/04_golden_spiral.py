"""Golden spiral segments: exact lengths, recurrence check and SVG output."""

# %% [markdown]
# Segment n of the spiral has length 1/phi**(n-1).  Lengths live in
# Q(sqrt 5), so the segment recurrence L(n) = L(n-2) - L(n-1) is checked
# with exact equality.

# %%
from pathlib import Path

from nfeseq import build_spiral, segment_recurrence_check
from nfeseq.cli import spiral_svg

model = build_spiral(20, points_per_arc=48)
for seg in model.segments[:6]:
    print(f"segment {seg.index}: length {seg.length_exact!s:<12} radius {seg.radius:.10f}")

check = segment_recurrence_check(model)
print("recurrence violations:", check.violations, " conforming:", check.conforming)
print(f"sum of radii {model.total_radius():.10f} (limit phi + 1 = 2.6180339887)")
print(f"max gap between arcs {model.endpoint_gaps().max():.1e}")

# %% [markdown]
# Write the arcs as one SVG path each.

# %%
out = Path("golden_spiral.svg")
out.write_text(spiral_svg(model))
print("wrote", out.resolve())
