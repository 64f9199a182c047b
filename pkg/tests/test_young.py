"""Tests for Young diagram rendering."""

from radohorn import young


class TestDraw:
    """young.draw in both glyph sets."""

    def test_empty_profile(self):
        """No rows, no output."""
        assert young.draw([]) == ""
        assert young.draw([0, 0]) == ""

    def test_unicode_junctions_join(self):
        """The step between rows uses the matching tee and corner glyphs."""
        assert young.draw([2, 1]).split("\n") == [
            "┌───┬───┐",
            "│   │   │",
            "├───┼───┘",
            "│   │",
            "└───┘",
        ]

    def test_single_cell(self):
        """A one-vector family is a single box."""
        assert young.draw([1], ascii_only=True).split("\n") == ["+---+", "|   |", "+---+"]

    def test_labels_widen_every_cell(self):
        """Cell width follows the longest label; labels are centred."""
        lines = young.draw([2, 1], {(1, 1): "phi1", (1, 2): "x", (2, 1): "phi3"}, ascii_only=True)
        assert lines.split("\n") == [
            "+------+------+",
            "| phi1 |  x   |",
            "+------+------+",
            "| phi3 |",
            "+------+",
        ]

    def test_missing_labels_are_blank(self):
        """Unlabelled cells render empty at the label width."""
        lines = young.draw([1, 1], {(1, 1): "T1"}, ascii_only=True).split("\n")
        assert lines[1] == "| T1 |"
        assert lines[3] == "|    |"
