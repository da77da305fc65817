"""SVG rendering of packings: labeled squares, bold partition lines, strip frame."""

from __future__ import annotations

from .core import Instance, RCSequence, rc_sequence_to_layout

# Styling knobs; structural tests only look at element counts and coordinates.
STYLE = {
    "scale": 4.0,  # pixels per length unit
    "margin": 14.0,
    "frame_stroke": "#000000",
    "frame_width": 2.5,
    "partition_stroke": "#000000",
    "partition_width": 2.5,
    "square_fill": "#e8e8e8",
    "square_stroke": "#444444",
    "square_stroke_width": 0.8,
    "font_family": "Helvetica, Arial, sans-serif",
    "banner_fill": "#b00020",
}


def _fmt(value: float) -> str:
    return f"{value:.2f}".rstrip("0").rstrip(".")


def render_packing_svg(inst: Instance, seq: RCSequence, scale: float | None = None) -> str:
    """Draw the packing an RC sequence describes, bottom-left origin.

    Infeasible sequences (width beyond the strip) are still drawn, with a
    banner flagging the overflow.
    """
    s = float(scale) if scale else STYLE["scale"]
    margin = STYLE["margin"]
    layout = rc_sequence_to_layout(seq)
    col_w = [
        max(inst.side(layout.cells[i][j]) for i in range(layout.p))
        for j in range(layout.q)
    ]
    row_h = [max(inst.side(v) for v in row) for row in layout.cells]
    width = sum(col_w)
    height = sum(row_h)
    b = inst.strip_width
    infeasible = width > b

    span_x = max(width, b)
    banner_h = 16.0 if infeasible else 0.0
    canvas_w = span_x * s + 2 * margin
    canvas_h = height * s + 2 * margin + banner_h

    def X(x: float) -> float:
        return margin + x * s

    def Y(y: float) -> float:
        return margin + banner_h + (height - y) * s

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(canvas_w)}" '
        f'height="{_fmt(canvas_h)}" viewBox="0 0 {_fmt(canvas_w)} {_fmt(canvas_h)}">'
    ]
    if infeasible:
        out.append(
            f'<text x="{_fmt(margin)}" y="{_fmt(margin - 2)}" fill="{STYLE["banner_fill"]}" '
            f'font-family="{STYLE["font_family"]}" font-size="12" font-weight="bold">'
            f"INFEASIBLE: width {width} exceeds strip width {b}</text>"
        )

    # Squares first so partition lines stay on top.
    y_cursor = 0
    for i in range(layout.p):
        x_cursor = 0
        for j in range(layout.q):
            label = layout.cells[i][j]
            side = inst.side(label)
            if side > 0:
                out.append(
                    f'<rect x="{_fmt(X(x_cursor))}" y="{_fmt(Y(y_cursor + side))}" '
                    f'width="{_fmt(side * s)}" height="{_fmt(side * s)}" '
                    f'fill="{STYLE["square_fill"]}" stroke="{STYLE["square_stroke"]}" '
                    f'stroke-width="{STYLE["square_stroke_width"]}"/>'
                )
                out.append(
                    f'<text x="{_fmt(X(x_cursor + side / 2))}" y="{_fmt(Y(y_cursor + side / 2))}" '
                    f'font-family="{STYLE["font_family"]}" font-size="{_fmt(max(s * side / 2.5, 7.0))}" '
                    f'text-anchor="middle" dominant-baseline="central">{label}</text>'
                )
            x_cursor += col_w[j]
        y_cursor += row_h[i]

    # Horizontal partitions span the whole strip; vertical ones the packed height.
    y_cursor = 0
    for i in range(layout.p - 1):
        y_cursor += row_h[i]
        out.append(
            f'<line x1="{_fmt(X(0))}" y1="{_fmt(Y(y_cursor))}" x2="{_fmt(X(b))}" '
            f'y2="{_fmt(Y(y_cursor))}" stroke="{STYLE["partition_stroke"]}" '
            f'stroke-width="{STYLE["partition_width"]}"/>'
        )
    x_cursor = 0
    for j in range(layout.q - 1):
        x_cursor += col_w[j]
        out.append(
            f'<line x1="{_fmt(X(x_cursor))}" y1="{_fmt(Y(0))}" x2="{_fmt(X(x_cursor))}" '
            f'y2="{_fmt(Y(height))}" stroke="{STYLE["partition_stroke"]}" '
            f'stroke-width="{STYLE["partition_width"]}"/>'
        )

    # Strip frame: full width b, packed height.
    out.append(
        f'<rect x="{_fmt(X(0))}" y="{_fmt(Y(height))}" width="{_fmt(b * s)}" '
        f'height="{_fmt(height * s)}" fill="none" stroke="{STYLE["frame_stroke"]}" '
        f'stroke-width="{STYLE["frame_width"]}"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
