"""Log-log rate plots written as standalone SVG, byte deterministic.

No plotting dependency: the file is assembled from fixed-precision
primitives so identical inputs give identical bytes. Zero rates cannot
sit on a log axis and are dropped; interval whiskers clip at the frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

WIDTH, HEIGHT = 720.0, 520.0
LEFT, RIGHT, TOP, BOTTOM = 70.0, 24.0, 40.0, 56.0
PALETTE = ["#1b6ca8", "#c23b22", "#2e7d32", "#7b1fa2", "#e65100", "#00695c"]


@dataclass
class Series:
    """One labelled curve with optional confidence band edges."""

    label: str
    ps: list[float]
    rates: list[float]
    ci_low: list[float] = field(default_factory=list)
    ci_high: list[float] = field(default_factory=list)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _decades(lo: float, hi: float) -> list[int]:
    return list(range(math.floor(math.log10(lo)), math.ceil(math.log10(hi)) + 1))


def _collect_span(series: list[Series]) -> tuple[float, float, float, float]:
    xs = [p for s in series for p in s.ps]
    ys = [r for s in series for r in s.rates if r > 0.0]
    ys += [c for s in series for c in s.ci_high if c > 0.0]
    ys_low = [c for s in series for c in s.ci_low if c > 0.0]
    if not xs or not ys:
        raise ValueError("nothing positive to plot")
    y_lo = min(ys + ys_low)
    return min(xs), max(xs), y_lo, max(ys)


def plot_rate_curves(
    series: list[Series],
    *,
    title: str = "",
    xlabel: str = "physical error rate",
    ylabel: str = "logical failure rate",
) -> str:
    """Render curves to SVG text."""
    x_lo, x_hi, y_lo, y_hi = _collect_span(series)
    lx0, lx1 = math.log10(x_lo) - 0.05, math.log10(x_hi) + 0.05
    ly0, ly1 = math.log10(y_lo) - 0.2, math.log10(y_hi) + 0.2
    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM

    def X(p: float) -> float:
        return LEFT + (math.log10(p) - lx0) / (lx1 - lx0) * plot_w

    def Y(r: float) -> float:
        return TOP + (ly1 - math.log10(r)) / (ly1 - ly0) * plot_h

    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0f}" '
        f'height="{HEIGHT:.0f}" viewBox="0 0 {WIDTH:.0f} {HEIGHT:.0f}">'
    )
    out.append(f'<rect width="{WIDTH:.0f}" height="{HEIGHT:.0f}" fill="white"/>')
    out.append(
        f'<rect x="{_fmt(LEFT)}" y="{_fmt(TOP)}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="#333" stroke-width="1"/>'
    )
    font = 'font-family="Helvetica,Arial,sans-serif"'
    if title:
        out.append(
            f'<text x="{_fmt(WIDTH / 2)}" y="24" text-anchor="middle" '
            f'{font} font-size="15">{title}</text>'
        )
    for dec in _decades(10**lx0, 10**lx1):
        p = 10.0**dec
        if lx0 <= dec <= lx1:
            x = X(p)
            out.append(
                f'<line x1="{_fmt(x)}" y1="{_fmt(TOP)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(TOP + plot_h)}" stroke="#ddd" stroke-width="0.7"/>'
            )
            out.append(
                f'<text x="{_fmt(x)}" y="{_fmt(TOP + plot_h + 18)}" '
                f'text-anchor="middle" {font} font-size="12">1e{dec}</text>'
            )
        for mult in range(2, 10):
            lv = dec + math.log10(mult)
            if lx0 <= lv <= lx1:
                x = LEFT + (lv - lx0) / (lx1 - lx0) * plot_w
                out.append(
                    f'<line x1="{_fmt(x)}" y1="{_fmt(TOP)}" x2="{_fmt(x)}" '
                    f'y2="{_fmt(TOP + plot_h)}" stroke="#f2f2f2" stroke-width="0.5"/>'
                )
    for dec in _decades(10**ly0, 10**ly1):
        if ly0 <= dec <= ly1:
            y = Y(10.0**dec)
            out.append(
                f'<line x1="{_fmt(LEFT)}" y1="{_fmt(y)}" x2="{_fmt(LEFT + plot_w)}" '
                f'y2="{_fmt(y)}" stroke="#ddd" stroke-width="0.7"/>'
            )
            out.append(
                f'<text x="{_fmt(LEFT - 8)}" y="{_fmt(y + 4)}" text-anchor="end" '
                f'{font} font-size="12">1e{dec}</text>'
            )
    out.append(
        f'<text x="{_fmt(LEFT + plot_w / 2)}" y="{_fmt(HEIGHT - 14)}" '
        f'text-anchor="middle" {font} font-size="13">{xlabel}</text>'
    )
    out.append(
        f'<text x="20" y="{_fmt(TOP + plot_h / 2)}" text-anchor="middle" '
        f'{font} font-size="13" transform="rotate(-90 20 {_fmt(TOP + plot_h / 2)})">'
        f"{ylabel}</text>"
    )

    y_floor = 10.0**ly0
    for si, s in enumerate(series):
        color = PALETTE[si % len(PALETTE)]
        pts = [
            (X(p), Y(r)) for p, r in zip(s.ps, s.rates) if r > 0.0
        ]
        if s.ci_low and s.ci_high:
            for p, r, lo, hi in zip(s.ps, s.rates, s.ci_low, s.ci_high):
                if r <= 0.0 or hi <= 0.0:
                    continue
                lo_c = max(lo, y_floor)
                x = X(p)
                out.append(
                    f'<line x1="{_fmt(x)}" y1="{_fmt(Y(lo_c))}" x2="{_fmt(x)}" '
                    f'y2="{_fmt(Y(hi))}" stroke="{color}" stroke-width="1"/>'
                )
        if len(pts) >= 2:
            path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(
                f'<polyline points="{path}" fill="none" stroke="{color}" '
                f'stroke-width="1.6"/>'
            )
        for x, y in pts:
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{color}"/>'
            )
        lx = LEFT + plot_w - 150
        ly = TOP + 16 + 18 * si
        out.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(ly - 4)}" x2="{_fmt(lx + 22)}" '
            f'y2="{_fmt(ly - 4)}" stroke="{color}" stroke-width="1.6"/>'
        )
        out.append(
            f'<text x="{_fmt(lx + 28)}" y="{_fmt(ly)}" {font} '
            f'font-size="12">{s.label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_plot(path: str, series: list[Series], **kwargs) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(plot_rate_curves(series, **kwargs))
