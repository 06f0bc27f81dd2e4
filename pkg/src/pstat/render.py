"""Deterministic SVG pictures of arc diagrams and their traces.

Fixed layout, integer coordinates only: vertex k sits at x = 40 k on a
horizontal axis, arcs are quadratic curves above it, and in a trace the
vacant vertices grow short dashed rays pointing up-right.  Identical
input yields byte-identical output.
"""

from __future__ import annotations

from .core import SetPartition, edges
from .stats import trace

_BASE_Y = 100
_HEIGHT = 140
_XSTEP = 40


def render_svg(part: SetPartition, trace_index: int | None = None) -> str:
    """SVG for the arc diagram of ``part``.

    With ``trace_index`` = i, only vertices 1..i are drawn, together
    with the arcs lying inside 1..i and a dashed half-arc at every
    vacant vertex (left endpoint whose partner lies beyond i).
    """
    if trace_index is None:
        count = part.n
        arcs = edges(part)
        vacant: tuple[int, ...] = ()
    else:
        snapshot = trace(part, trace_index)
        count = trace_index
        arcs = list(snapshot.edges)
        vacant = snapshot.vacant

    width = _XSTEP * (count + 1)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {_HEIGHT}" '
        f'width="{width}" height="{_HEIGHT}">',
        f'<line class="axis" x1="{_XSTEP // 2}" y1="{_BASE_Y}" '
        f'x2="{width - _XSTEP // 2}" y2="{_BASE_Y}" stroke="#bbbbbb" stroke-width="1"/>',
    ]
    for left, right in arcs:
        cx = (_XSTEP * left + _XSTEP * right) // 2
        rise = min(10 + 8 * (right - left), _BASE_Y - 12)
        cy = _BASE_Y - rise
        lines.append(
            f'<path class="arc" d="M {_XSTEP * left} {_BASE_Y} Q {cx} {cy} '
            f'{_XSTEP * right} {_BASE_Y}" fill="none" stroke="#000000" stroke-width="2"/>'
        )
    for x in vacant:
        lines.append(
            f'<line class="half-edge" x1="{_XSTEP * x}" y1="{_BASE_Y}" '
            f'x2="{_XSTEP * x + 16}" y2="{_BASE_Y - 26}" stroke="#000000" '
            f'stroke-width="2" stroke-dasharray="4 3"/>'
        )
    for k in range(1, count + 1):
        lines.append(
            f'<circle class="vertex" cx="{_XSTEP * k}" cy="{_BASE_Y}" r="4" fill="#000000"/>'
        )
        lines.append(
            f'<text class="label" x="{_XSTEP * k}" y="{_BASE_Y + 24}" '
            f'font-family="monospace" font-size="13" text-anchor="middle">{k}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
