"""Minimal deterministic SVG line plots.

Results here are simple x-y series, so the figures are emitted directly
as SVG text instead of pulling in a charting dependency.
"""

from __future__ import annotations

import math

_COLORS = ("#1f6fb4", "#d95f02", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")

_W, _H = 640, 420
_MARGIN = 56


def _ticks(lo: float, hi: float, n: int = 5):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(n, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = min(s for s in (mag, 2 * mag, 5 * mag, 10 * mag) if s >= raw)
    first = math.ceil(lo / step) * step
    out = []
    v = first
    while v <= hi + 1e-12 * step:
        out.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return out


def line_plot(series, title: str = "", xlabel: str = "", ylabel: str = "",
              series_class: str = "series") -> str:
    """Render [(x_array, y_array, label), ...] as an SVG document string.

    Each curve becomes one <polyline class="{series_class}"> so callers
    and tests can count series.
    """
    xs = [float(v) for x, _, _ in series for v in x]
    ys = [float(v) for _, y, _ in series for v in y]
    if not xs:
        raise ValueError("no data to plot")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x):
        return _MARGIN + (x - x_lo) / (x_hi - x_lo) * (_W - 2 * _MARGIN)

    def py(y):
        return _H - _MARGIN - (y - y_lo) / (y_hi - y_lo) * (_H - 2 * _MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2}" y="22" text-anchor="middle" font-size="15">{title}</text>',
    ]
    axis = (
        f'<line x1="{_MARGIN}" y1="{_H - _MARGIN}" x2="{_W - _MARGIN}" y2="{_H - _MARGIN}" '
        'stroke="black"/>'
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{_H - _MARGIN}" stroke="black"/>'
    )
    parts.append(axis)
    for tx in _ticks(x_lo, x_hi):
        parts.append(
            f'<line x1="{px(tx):.1f}" y1="{_H - _MARGIN}" x2="{px(tx):.1f}" '
            f'y2="{_H - _MARGIN + 5}" stroke="black"/>'
            f'<text x="{px(tx):.1f}" y="{_H - _MARGIN + 18}" text-anchor="middle" '
            f'font-size="11">{tx:g}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        parts.append(
            f'<line x1="{_MARGIN - 5}" y1="{py(ty):.1f}" x2="{_MARGIN}" y2="{py(ty):.1f}" '
            'stroke="black"/>'
            f'<text x="{_MARGIN - 8}" y="{py(ty):.1f}" text-anchor="end" '
            f'font-size="11">{ty:g}</text>'
        )
    parts.append(
        f'<text x="{_W / 2}" y="{_H - 12}" text-anchor="middle" font-size="13">{xlabel}</text>'
        f'<text x="16" y="{_H / 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 16 {_H / 2})">{ylabel}</text>'
    )
    for i, (x, y, label) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        points = " ".join(f"{px(float(a)):.2f},{py(float(b)):.2f}" for a, b in zip(x, y))
        parts.append(
            f'<polyline class="{series_class}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" points="{points}"/>'
        )
        if label:
            parts.append(
                f'<text x="{_W - _MARGIN - 4}" y="{_MARGIN + 16 * i + 4}" text-anchor="end" '
                f'font-size="11" fill="{color}">{label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
