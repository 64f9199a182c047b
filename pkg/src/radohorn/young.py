"""Young diagram rendering.

A diagram has one row per block, left aligned, with one box per vector.
Junctions are chosen from the edges that meet there, so the unicode output
joins cleanly; ``ascii_only`` draws every junction as ``+``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import Final

MIN_CELL_WIDTH: Final[int] = 3

# (up, down, left, right) -> glyph
_JUNCTIONS: Final[dict[tuple[bool, bool, bool, bool], str]] = {
    (False, True, False, True): "┌",
    (False, True, True, False): "┐",
    (True, False, False, True): "└",
    (True, False, True, False): "┘",
    (False, True, True, True): "┬",
    (True, False, True, True): "┴",
    (True, True, False, True): "├",
    (True, True, True, False): "┤",
    (True, True, True, True): "┼",
    (True, True, False, False): "│",
    (False, False, True, True): "─",
}


def _junction(up: bool, down: bool, left: bool, right: bool, ascii_only: bool) -> str:
    if ascii_only:
        return "+"
    return _JUNCTIONS.get((up, down, left, right), " ")


def _border(
    above: int, below: int, cell_width: int, ascii_only: bool
) -> str:
    width = max(above, below)
    horizontal = "-" if ascii_only else "─"
    parts: list[str] = []
    for column in range(width + 1):
        parts.append(
            _junction(
                up=column <= above and above > 0,
                down=column <= below and below > 0,
                left=column > 0,
                right=column < width,
                ascii_only=ascii_only,
            )
        )
        if column < width:
            parts.append(horizontal * cell_width)
    return "".join(parts)


def _cell(text: str, cell_width: int) -> str:
    left = (cell_width - len(text)) // 2
    return " " * left + text + " " * (cell_width - len(text) - left)


def draw(
    sizes: Sequence[int],
    annotations: Mapping[tuple[int, int], str] | None = None,
    *,
    ascii_only: bool = False,
) -> str:
    """Draw a Young diagram for ``sizes`` (non-increasing row lengths).

    Args:
        sizes: Row lengths, top to bottom.
        annotations: Optional labels keyed by 1-based ``(row, column)``.
        ascii_only: Use ``+``, ``-`` and ``|`` instead of box-drawing glyphs.

    Returns:
        The diagram, lines joined by ``\\n`` without a trailing newline. An
        empty profile renders as the empty string.
    """
    rows = [size for size in sizes if size > 0]
    if not rows:
        return ""
    labels = dict(annotations or {})
    cell_width = max([MIN_CELL_WIDTH, *(len(text) + 2 for text in labels.values())])
    vertical = "|" if ascii_only else "│"

    lines = [_border(0, rows[0], cell_width, ascii_only)]
    for r, size in enumerate(rows, start=1):
        cells = [_cell(labels.get((r, c), ""), cell_width) for c in range(1, size + 1)]
        lines.append(vertical + vertical.join(cells) + vertical)
        below = rows[r] if r < len(rows) else 0
        lines.append(_border(size, below, cell_width, ascii_only))
    return "\n".join(lines)
