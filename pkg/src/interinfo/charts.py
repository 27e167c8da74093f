"""Static SVG grouped-bar charts, no plotting library involved.

One group of two bars per variable set: interaction information I and
the sign-flipped co-information -mu*. Hand-rolled so the output is a
deterministic function of the numbers alone.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

BAR_FILL_I = "#4a7ab5"
BAR_FILL_NEG_MU = "#c98a3d"

WIDTH = 840
HEIGHT = 420
MARGIN_LEFT = 64
MARGIN_RIGHT = 24
MARGIN_TOP = 48
MARGIN_BOTTOM = 96


def _y_scale(values: list[float]) -> tuple[float, float]:
    lo = min(0.0, min(values))
    hi = max(0.0, max(values))
    if hi == lo:
        hi = lo + 1.0
    pad = 0.12 * (hi - lo)
    return lo - (pad if lo < 0 else 0.0), hi + pad


def grouped_bar_svg(
    entries: list[tuple[str, float, float]],
    title: str = "Interaction information and remaining redundancy",
) -> str:
    """Render (set name, I, -mu*) triples as a grouped bar chart.

    Exactly two `rect.bar` elements per entry; negative values hang
    below the zero baseline. Value labels carry six decimals.
    """
    if not entries:
        raise ValueError("nothing to chart")
    values = [v for _, i, nm in entries for v in (i, nm)]
    y_lo, y_hi = _y_scale(values)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def y_of(v: float) -> float:
        return MARGIN_TOP + plot_h * (y_hi - v) / (y_hi - y_lo)

    group_w = plot_w / len(entries)
    bar_w = min(48.0, group_w * 0.32)
    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">'
    )
    parts.append(f'<title>{escape(title)}</title>')
    parts.append(
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-size="15">'
        f"{escape(title)}</text>"
    )
    # horizontal gridlines at 5 even intervals
    for i in range(6):
        v = y_lo + (y_hi - y_lo) * i / 5
        y = y_of(v)
        parts.append(
            f'<line x1="{MARGIN_LEFT}" y1="{y:.2f}" x2="{WIDTH - MARGIN_RIGHT}" '
            f'y2="{y:.2f}" stroke="#ddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 6}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-size="11" fill="#444">{v:.2f}</text>'
        )
    zero_y = y_of(0.0)
    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{zero_y:.2f}" x2="{WIDTH - MARGIN_RIGHT}" '
        f'y2="{zero_y:.2f}" stroke="#555" stroke-width="1"/>'
    )
    for idx, (name, i_val, nm_val) in enumerate(entries):
        center = MARGIN_LEFT + group_w * (idx + 0.5)
        for offset, value, cls, fill in (
            (-bar_w - 2, i_val, "bar i", BAR_FILL_I),
            (2, nm_val, "bar neg-mu", BAR_FILL_NEG_MU),
        ):
            x = center + offset
            top = y_of(max(value, 0.0))
            height = abs(y_of(value) - zero_y)
            parts.append(
                f'<rect class="{cls}" x="{x:.2f}" y="{top:.2f}" width="{bar_w:.2f}" '
                f'height="{height:.2f}" fill="{fill}"/>'
            )
            label_y = top - 4 if value >= 0 else top + height + 12
            parts.append(
                f'<text class="value" x="{x + bar_w / 2:.2f}" y="{label_y:.2f}" '
                f'text-anchor="middle" font-size="9" fill="#333">{value:.6f}</text>'
            )
        parts.append(
            f'<text x="{center:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 16}" '
            f'text-anchor="end" font-size="11" fill="#222" '
            f'transform="rotate(-25 {center:.2f} {HEIGHT - MARGIN_BOTTOM + 16})">'
            f"{escape(name)}</text>"
        )
    legend_x = MARGIN_LEFT
    legend_y = HEIGHT - 28
    for dx, label, fill in (
        (0, "interaction information I", BAR_FILL_I),
        (240, "remaining redundancy (-mu*)", BAR_FILL_NEG_MU),
    ):
        parts.append(
            f'<rect class="swatch" x="{legend_x + dx}" y="{legend_y - 10}" '
            f'width="12" height="12" fill="{fill}"/>'
        )
        parts.append(
            f'<text x="{legend_x + dx + 18}" y="{legend_y}" font-size="12" '
            f'fill="#222">{escape(label)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
