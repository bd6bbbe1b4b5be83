"""
Region Renderer

Draws the points CSV as a scatter over the (footrule, rho) window with the
sampled bound curves overlaid as polylines, and saves a single static SVG.
"""

from dataclasses import dataclass
from itertools import groupby
from pathlib import Path
from typing import Dict, List, Sequence, Union

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from .boundsregion import CurveSample, RegionPoint  # noqa: E402

PHI_LIMITS = (-0.5, 1.0)
RHO_LIMITS = (-1.0, 1.0)

CURVE_STYLES: Dict[str, Dict[str, object]] = {
    "upper": {"color": "tab:red", "linestyle": "-"},
    "lower": {"color": "tab:blue", "linestyle": "-"},
    "r": {"color": "tab:green", "linestyle": "--"},
    "s": {"color": "tab:purple", "linestyle": ":"},
}


@dataclass(frozen=True)
class RenderSettings:
    width_inches: float = 6.0
    height_inches: float = 6.0
    point_size: float = 6.0


def render_region(
    points: Sequence[RegionPoint],
    curves: Sequence[CurveSample],
    out: Union[str, Path],
    settings: RenderSettings = RenderSettings(),
) -> Path:
    """
    Render points and curves to an SVG file.

    Args:
        points: Rational points, drawn at their double-precision position
        curves: Curve samples; consecutive samples of one curve form a polyline
        out: Target SVG path
        settings: Figure size and marker size

    Returns:
        The path written
    """
    out_path = Path(out)
    out_path.parent.mkdir(parents=True, exist_ok=True)

    fig, ax = plt.subplots(figsize=(settings.width_inches, settings.height_inches))
    try:
        for name, group in groupby(curves, key=lambda sample: sample.curve):
            samples: List[CurveSample] = sorted(group, key=lambda sample: sample.x)
            style = CURVE_STYLES.get(name, {"color": "black", "linestyle": "-"})
            ax.plot([s.x for s in samples], [s.y for s in samples], label=name, linewidth=1.0, **style)
        if points:
            ax.scatter(
                [float(p.phi) for p in points],
                [float(p.rho) for p in points],
                s=settings.point_size,
                color="black",
                label="points",
                zorder=3,
            )
        ax.set_xlim(*PHI_LIMITS)
        ax.set_ylim(*RHO_LIMITS)
        ax.set_xlabel("footrule")
        ax.set_ylabel("rho")
        ax.grid(True, linewidth=0.3)
        if curves or points:
            ax.legend(loc="lower right", fontsize="small")
        fig.savefig(out_path, format="svg")
    finally:
        plt.close(fig)
    return out_path
