"""CSV records and a minimal SVG line chart for discord time series."""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from xml.sax.saxutils import escape

import numpy as np

HEADER = ("scaled_time", "alpha2_or_delta", "measure", "value")

Row = tuple[float, float, str, float]


def sort_rows(rows) -> list[Row]:
    """Order by (parameter, measure, time)."""
    return sorted(rows, key=lambda r: (r[1], r[2], r[0]))


def format_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(HEADER) + "\n")
    for t, p, measure, value in rows:
        buf.write(f"{t:.12e},{p:.12e},{measure},{value:.12e}\n")
    return buf.getvalue()


def parse_csv(text: str) -> list[Row]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [(float(t), float(p), m, float(v)) for t, p, m, v in reader]


def group_series(rows) -> dict[tuple[float, str], tuple[np.ndarray, np.ndarray]]:
    groups = defaultdict(list)
    for t, p, measure, value in rows:
        groups[(p, measure)].append((t, value))
    out = {}
    for key in sorted(groups):
        pts = np.array(sorted(groups[key]))
        out[key] = (pts[:, 0], pts[:, 1])
    return out


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22")
_W, _H = 720, 440
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 170, 40, 60


def render_svg(rows, title: str = "", param_name: str = "alpha2", log_time: bool = False) -> str:
    """Line chart with one polyline per (parameter, measure) pair.

    ``log_time`` plots against ``log10(1 + gamma0 t)``.
    """
    series = group_series(rows)
    xform = (lambda t: np.log10(1 + t)) if log_time else (lambda t: t)
    all_t = np.concatenate([xform(t) for t, _ in series.values()]) if series else np.zeros(1)
    all_v = np.concatenate([v for _, v in series.values()]) if series else np.zeros(1)
    x0, x1 = float(all_t.min()), float(all_t.max())
    y0, y1 = min(0.0, float(all_v.min())), max(1.0, float(all_v.max()))
    x1 = x1 if x1 > x0 else x0 + 1
    pw, ph = _W - _LEFT - _RIGHT, _H - _TOP - _BOTTOM

    def sx(x):
        return _LEFT + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return _TOP + (y1 - y) / (y1 - y0) * ph

    measures = sorted({m for _, m in series})
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" width="{_W}" height="{_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
        f'<line x1="{_LEFT}" y1="{_TOP + ph}" x2="{_LEFT + pw}" y2="{_TOP + ph}" stroke="black"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_TOP + ph}" stroke="black"/>',
    ]
    for frac in np.linspace(0, 1, 6):
        xv, yv = x0 + frac * (x1 - x0), y0 + frac * (y1 - y0)
        xlabel = f"{10**xv - 1:.3g}" if log_time else f"{xv:.3g}"
        out.append(f'<text x="{sx(xv):.2f}" y="{_TOP + ph + 18}" text-anchor="middle" font-size="11">{xlabel}</text>')
        out.append(f'<text x="{_LEFT - 8}" y="{sy(yv) + 4:.2f}" text-anchor="end" font-size="11">{yv:.3g}</text>')
    xname = "γ₀t" + (" (log scale)" if log_time else "")
    out.append(f'<text x="{_LEFT + pw / 2:.1f}" y="{_H - 15}" text-anchor="middle" font-size="13">{xname}</text>')
    yname = " / ".join(f"D_{'T' if m == 'trace' else 'B'} ({m})" for m in measures)
    out.append(f'<text x="18" y="{_TOP + ph / 2:.1f}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 18 {_TOP + ph / 2:.1f})">{escape(yname)}</text>')
    for i, ((param, measure), (t, v)) in enumerate(series.items()):
        color = _PALETTE[i % len(_PALETTE)]
        dash = ' stroke-dasharray="6 3"' if measure == "bures" and len(measures) > 1 else ""
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xform(t), v))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{pts}"/>')
        ly = _TOP + 16 * i + 8
        out.append(f'<line x1="{_W - _RIGHT + 12}" y1="{ly}" x2="{_W - _RIGHT + 36}" y2="{ly}" stroke="{color}"{dash}/>')
        out.append(f'<text x="{_W - _RIGHT + 40}" y="{ly + 4}" font-size="11">{param_name}={param:g} {measure}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
