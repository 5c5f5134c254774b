"""Deterministic SVG chamber diagrams.

The SVG is assembled by hand so that output is byte-stable across runs and
platforms; coordinates are rounded to two decimals from exact positions.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from xml.sax.saxutils import escape

from .core import Q, StabError, fmt_q

WIDTH = 640
HEIGHT = 120
MARGIN = 40
AXIS_Y = 70

FILL = {"Stable": "#cfe8cf", "Unstable": "#f3c9c9"}


def tick_positions(gamma_range, walls) -> tuple[list[tuple[Fraction, Fraction]], list[Fraction]]:
    """Exact relative positions in [0, 1] of walls inside the range; also the clipped ones."""
    lo, hi = (Q(x) for x in gamma_range)
    if not lo < hi:
        raise StabError("empty gamma range")
    kept, clipped = [], []
    for w in walls:
        g = Q(w)
        if lo < g < hi:
            kept.append((g, (g - lo) / (hi - lo)))
        else:
            clipped.append(g)
    return sorted(kept), sorted(clipped)


def _x(rel: Fraction) -> str:
    return f"{MARGIN + float(rel) * (WIDTH - 2 * MARGIN):.2f}"


def chamber_svg(report: dict) -> str:
    """Render a chamber-scan report (as produced by ``ChamberScan.to_json``)."""
    lo, hi = (Q(x) for x in report["gamma_range"])
    walls = [w["gamma0"] for w in report.get("walls", []) if w.get("gamma0") is not None]
    kept, clipped = tick_positions((lo, hi), walls)
    span = hi - lo
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
    ]
    meta = f"gamma in ({fmt_q(lo)}, {fmt_q(hi)}); walls: {len(kept)}"
    if clipped:
        meta += "; outside range: " + ", ".join(fmt_q(g) for g in clipped)
    parts.append(f"<metadata>{escape(meta)}</metadata>")
    chambers = report.get("chambers") or [{"lo": fmt_q(lo), "hi": fmt_q(hi), "verdict": "Unknown"}]
    for ch in chambers:
        a = (max(Q(ch["lo"]), lo) - lo) / span
        b = (min(Q(ch["hi"]), hi) - lo) / span
        x0, x1 = float(_x(a)), float(_x(b))
        fill = FILL.get(ch.get("verdict"), "#e0e0e0")
        parts.append(
            f'<rect class="chamber" x="{x0:.2f}" y="{AXIS_Y - 30}" width="{x1 - x0:.2f}" height="30" '
            f'fill="{fill}"><title>{escape(ch.get("verdict", ""))}</title></rect>'
        )
    parts.append(
        f'<line class="axis" x1="{MARGIN}" y1="{AXIS_Y}" x2="{WIDTH - MARGIN}" y2="{AXIS_Y}" '
        'stroke="black" stroke-width="1"/>'
    )
    for label, rel in ((fmt_q(lo), Fraction(0)), (fmt_q(hi), Fraction(1))):
        parts.append(
            f'<text x="{_x(rel)}" y="{AXIS_Y + 30}" font-size="11" text-anchor="middle">{escape(label)}</text>'
        )
    for g, rel in kept:
        x = _x(rel)
        parts.append(
            f'<line class="wall" x1="{x}" y1="{AXIS_Y - 36}" x2="{x}" y2="{AXIS_Y + 6}" '
            f'stroke="#333" stroke-width="2" data-rel="{fmt_q(rel)}"/>'
        )
        parts.append(
            f'<text x="{x}" y="{AXIS_Y + 18}" font-size="11" text-anchor="middle">{escape(fmt_q(g))}</text>'
        )
    parts.append(f'<text x="{WIDTH - MARGIN + 6}" y="{AXIS_Y + 4}" font-size="12">γ</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(report: dict, out: str | Path) -> Path:
    out = Path(out)
    try:
        out.write_text(chamber_svg(report), encoding="utf-8")
    except OSError as exc:
        raise StabError(f"cannot write {out}: {exc}") from exc
    return out
