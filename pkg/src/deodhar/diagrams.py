"""Pseudoline arrangements for words and component traces, with rendering.

Strands are numbered 1..d bottom to top by their left endpoint.  Reading a
word, or the factor list of a trace, left to right gives one constituent
per factor, each occupying the two adjacent strand positions at its level:

* kind "singular": a genuine crossing, drawn with a dot;
* kind "braid": a crossing where one strand passes over the other;
* kind "straight": the strands pass without interacting.

Both crossing kinds swap the two positions and split the chamber corridor
at their level; straight constituents do neither.  A chamber is a maximal
horizontal run of cells at one level, labeled by the set of strands passing
below it, which is constant along the run.

Four flavors are built from the same column skeleton.  The classical
arrangement of a word makes every letter singular and tracks the prefix
permutations.  For a trace, stay factors are y, ascent factors are lifted
reflections, and each descent contributes an x column followed by an
inverse-reflection column.  The upper flavor keeps only the reflection
braids (its positions follow the trace values), the lower flavor crosses at
x and y and braids at reflections (its positions follow the prefixes), and
the ansatz flavor crosses at x and y and braids at both reflection kinds.
Overlaying upper over ansatz gives each ansatz chamber a row set, lower
gives it a column set, and the minor with those index sets is the chamber's
coordinate.  The parameter at a singular point is the ratio of the four
chamber minors around it: above times below over left times right for stay
steps, inverted for descent steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .components import ComponentDescriptor, _check_unipotent, _check_word_for
from .errors import InputError
from .linalg import RatMatrix
from .subexpr import MARK_DOWN, MARK_STAY, MARK_UP, SubexpressionTrace
from .weyl import Permutation, identity_perm

__all__ = [
    "SINGULAR",
    "BRAID",
    "STRAIGHT",
    "CLASSICAL",
    "UPPER",
    "LOWER",
    "ANSATZ",
    "Constituent",
    "Chamber",
    "Arrangement",
    "classical_arrangement",
    "build_arrangement",
    "ansatz_minor_labels",
    "diagram_formulas",
    "classify_graphical",
    "render",
]

SINGULAR = "singular"
BRAID = "braid"
STRAIGHT = "straight"

CLASSICAL = "classical"
UPPER = "upper"
LOWER = "lower"
ANSATZ = "ansatz"

_SOURCE_KINDS = {
    UPPER: {"x": STRAIGHT, "y": STRAIGHT, "s": BRAID, "sinv": BRAID},
    LOWER: {"x": SINGULAR, "y": SINGULAR, "s": BRAID, "sinv": STRAIGHT},
    ANSATZ: {"x": SINGULAR, "y": SINGULAR, "s": BRAID, "sinv": BRAID},
}


@dataclass(frozen=True)
class Constituent:
    """One column: a factor drawn at a level, belonging to a trace step."""

    level: int
    kind: str
    source: str
    step: int


@dataclass(frozen=True)
class Chamber:
    """A maximal run of cells at one level; cells start..end inclusive."""

    level: int
    start: int
    end: int
    label: tuple[int, ...]


@dataclass(frozen=True)
class Arrangement:
    """A built arrangement with its chambers and per-column positions.

    ``positions[c]`` lists the strand at each position, bottom to top,
    after the first c columns; cell c is the gap following column c.
    """

    kind: str
    d: int
    columns: tuple[Constituent, ...]
    positions: tuple[tuple[int, ...], ...]
    chambers: tuple[Chamber, ...]
    minor_labels: dict = field(default_factory=dict, compare=False)

    def chamber_at(self, level: int, cell: int) -> Chamber:
        for ch in self.chambers:
            if ch.level == level and ch.start <= cell <= ch.end:
                return ch
        raise InputError(f"no chamber at level {level}, cell {cell}")

    def final_permutation(self) -> Permutation:
        return Permutation(self.positions[-1])

    def singular_column(self, step: int) -> int:
        """The 1-based column of the dot belonging to a stay or descent step."""
        for c, col in enumerate(self.columns, start=1):
            if col.step == step and col.kind == SINGULAR:
                return c
        raise InputError(f"step {step} has no singular point")


def _trace_sources(trace: SubexpressionTrace) -> list[tuple[str, int, int]]:
    """(source, level, step) triples, one or two per step."""
    out: list[tuple[str, int, int]] = []
    for k, i in enumerate(trace.word, start=1):
        mark = trace.marks[k - 1]
        if mark == MARK_STAY:
            out.append(("y", i, k))
        elif mark == MARK_UP:
            out.append(("s", i, k))
        else:
            out.append(("x", i, k))
            out.append(("sinv", i, k))
    return out


def _assemble(kind: str, d: int, columns: list[Constituent]) -> Arrangement:
    positions: list[tuple[int, ...]] = [tuple(range(1, d + 1))]
    for col in columns:
        cur = list(positions[-1])
        if col.kind != STRAIGHT:
            i = col.level
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
        positions.append(tuple(cur))
    chambers: list[Chamber] = []
    ncells = len(columns) + 1
    for level in range(d + 1):
        start = 0
        for c, col in enumerate(columns, start=1):
            if col.level == level and col.kind != STRAIGHT:
                chambers.append(
                    Chamber(level, start, c - 1, tuple(sorted(positions[start][:level])))
                )
                start = c
        chambers.append(
            Chamber(level, start, ncells - 1, tuple(sorted(positions[start][:level])))
        )
    return Arrangement(kind, d, tuple(columns), tuple(positions), tuple(chambers))


def classical_arrangement(word: Sequence[int], d: int) -> Arrangement:
    """The wiring diagram of a word: one singular crossing per letter."""
    for i in word:
        if not 1 <= i <= d - 1:
            raise InputError(f"letter {i} out of range 1..{d - 1}")
    columns = [
        Constituent(i, SINGULAR, "letter", k) for k, i in enumerate(word, start=1)
    ]
    return _assemble(CLASSICAL, d, columns)


def build_arrangement(kind: str, desc: ComponentDescriptor) -> Arrangement:
    """Build one arrangement flavor from a component descriptor."""
    if kind == CLASSICAL:
        return classical_arrangement(desc.word, desc.d)
    if kind not in _SOURCE_KINDS:
        raise InputError(f"unknown arrangement kind {kind!r}")
    table = _SOURCE_KINDS[kind]
    columns = [
        Constituent(level, table[source], source, step)
        for source, level, step in _trace_sources(desc.trace)
    ]
    arr = _assemble(kind, desc.d, columns)
    if kind == ANSATZ:
        upper = build_arrangement(UPPER, desc)
        lower = build_arrangement(LOWER, desc)
        labels: dict[tuple[int, int, int], tuple[tuple[int, ...], tuple[int, ...]]] = {}
        for ch in arr.chambers:
            if not 1 <= ch.level <= desc.d - 1:
                continue
            rows = upper.chamber_at(ch.level, ch.start).label
            cols = lower.chamber_at(ch.level, ch.start).label
            labels[(ch.level, ch.start, ch.end)] = (rows, cols)
        arr.minor_labels.update(labels)
    return arr


def ansatz_minor_labels(desc: ComponentDescriptor) -> dict:
    """Map each bounded-level ansatz chamber to its (rows, cols) minor.

    Keys are (level, start cell, end cell); the row set comes from the
    upper overlay, the column set from the lower one.
    """
    return dict(build_arrangement(ANSATZ, desc).minor_labels)


def _overlay_minor(
    z: RatMatrix, upper: Arrangement, lower: Arrangement, level: int, cell: int
) -> Fraction:
    rows = upper.chamber_at(level, cell).label
    cols = lower.chamber_at(level, cell).label
    return z.minor(rows, cols)


def diagram_formulas(desc: ComponentDescriptor, z: RatMatrix) -> dict:
    """Parameters read off the ansatz arrangement, one per singular point.

    For a stay step the value is the y parameter; for a descent step it is
    the minor ratio before the correction term.  Around each dot the four
    surrounding chambers give above*below/(left*right), inverted on
    descent steps.
    """
    arr = build_arrangement(ANSATZ, desc)
    upper = build_arrangement(UPPER, desc)
    lower = build_arrangement(LOWER, desc)
    out: dict[int, Fraction] = {}
    for k in desc.stay_positions + desc.descent_positions:
        col = arr.singular_column(k)
        i = arr.columns[col - 1].level
        above = _overlay_minor(z, upper, lower, i + 1, col - 1)
        below = _overlay_minor(z, upper, lower, i - 1, col - 1)
        left = _overlay_minor(z, upper, lower, i, col - 1)
        right = _overlay_minor(z, upper, lower, i, col)
        if k in desc.stay_positions:
            out[k] = (above * below) / (left * right)
        else:
            out[k] = (left * right) / (above * below)
    return out


def classify_graphical(z: RatMatrix, word: Sequence[int]) -> ComponentDescriptor:
    """Classification read off the growing upper arrangement.

    The probe row set is the right-edge chamber label of the upper
    arrangement built so far, the column set is the chamber right of the
    k-th classical crossing, and descents are visible as out-of-order
    strands.  Agrees with the sweep classifier.
    """
    _check_unipotent(z)
    word = _check_word_for(z, word)
    d = z.d
    classical = classical_arrangement(word, d)
    pos = list(range(1, d + 1))
    values = [identity_perm(d)]
    marks: list[str] = []
    for k, i in enumerate(word, start=1):
        if pos[i - 1] > pos[i]:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
            marks.append(MARK_DOWN)
        else:
            rows = tuple(sorted(pos[:i]))
            cols = tuple(sorted(classical.positions[k][:i]))
            if z.minor(rows, cols) != 0:
                marks.append(MARK_STAY)
            else:
                pos[i - 1], pos[i] = pos[i], pos[i - 1]
                marks.append(MARK_UP)
        values.append(Permutation(tuple(pos)))
    trace = SubexpressionTrace(word, tuple(values), tuple(marks))
    return ComponentDescriptor(trace)


def _label_text(strands: Sequence[int], d: int) -> str:
    if d <= 9:
        return "".join(str(s) for s in strands)
    return ",".join(str(s) for s in strands)


def _chamber_text_labels(arr: Arrangement) -> dict[tuple[int, int, int], str]:
    """Chamber label strings at the bounded levels 1..d-1."""
    out: dict[tuple[int, int, int], str] = {}
    for ch in arr.chambers:
        if not 1 <= ch.level <= arr.d - 1:
            continue
        key = (ch.level, ch.start, ch.end)
        if arr.kind == ANSATZ:
            rows, cols = arr.minor_labels[key]
            out[key] = f"{_label_text(rows, arr.d)}/{_label_text(cols, arr.d)}"
        else:
            out[key] = _label_text(ch.label, arr.d)
    return out


def _footer_labels(arr: Arrangement) -> dict[int, str]:
    """Column index to annotation drawn under the diagram."""
    out: dict[int, str] = {}
    if arr.kind == CLASSICAL:
        for c, col in enumerate(arr.columns, start=1):
            out[c] = f"s{col.level}"
    elif arr.kind == ANSATZ:
        for c, col in enumerate(arr.columns, start=1):
            if col.kind == SINGULAR:
                prefix = "t" if col.source == "y" else "m"
                out[c] = f"{prefix}{col.step}"
    return out


_COL_W = 5


def _render_text(arr: Arrangement) -> str:
    d = arr.d
    labels = _chamber_text_labels(arr)
    footer = _footer_labels(arr)
    gap = max(4, max((len(s) for s in labels.values()), default=0) + 2)
    margin = len(str(d)) + 1
    ncols = len(arr.columns)
    width = margin + gap + ncols * (_COL_W + gap)
    nrows = 2 * d - 1 + (1 if footer else 0)
    grid = [[" "] * width for _ in range(nrows)]

    def strand_row(p: int) -> int:
        return 2 * (d - p)

    for p in range(1, d + 1):
        r = strand_row(p)
        num = str(p)
        grid[r][: len(num)] = num
        for x in range(margin, width):
            grid[r][x] = "-"

    for c, col in enumerate(arr.columns, start=1):
        x0 = margin + gap + (c - 1) * (_COL_W + gap)
        if col.kind == STRAIGHT:
            continue
        i = col.level
        rt = strand_row(i + 1)
        rb = strand_row(i)
        rc = rt + 1
        grid[rt][x0 + 1] = "\\"
        grid[rt][x0 + 2] = " "
        grid[rt][x0 + 3] = "/"
        grid[rb][x0 + 1] = "/"
        grid[rb][x0 + 2] = " "
        grid[rb][x0 + 3] = "\\"
        if col.kind == SINGULAR:
            center = "*"
        elif col.source == "s":
            center = "\\"
        else:
            center = "/"
        grid[rc][x0 + 2] = center

    for (level, start, end), text in sorted(labels.items()):
        r = strand_row(level) - 1
        x_left = margin + start * (_COL_W + gap)
        x_right = margin + end * (_COL_W + gap) + gap - 1
        mid = (x_left + x_right + 1 - len(text)) // 2
        for off, ch in enumerate(text):
            grid[r][mid + off] = ch

    if footer:
        r = nrows - 1
        for c, text in sorted(footer.items()):
            x0 = margin + gap + (c - 1) * (_COL_W + gap)
            mid = x0 + (_COL_W - len(text)) // 2
            for off, ch in enumerate(text):
                grid[r][mid + off] = ch

    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


_SVG_COL = 40
_SVG_GAP = 72
_SVG_ROW = 40
_SVG_MARGIN = 24


def _render_svg(arr: Arrangement) -> str:
    d = arr.d
    labels = _chamber_text_labels(arr)
    footer = _footer_labels(arr)
    ncols = len(arr.columns)
    width = 2 * _SVG_MARGIN + (ncols + 1) * _SVG_GAP + ncols * _SVG_COL
    height = 2 * _SVG_MARGIN + (d - 1) * _SVG_ROW + (20 if footer else 0)

    def ypos(p: int) -> float:
        return _SVG_MARGIN + (d - p) * _SVG_ROW

    def col_left(c: int) -> float:
        return _SVG_MARGIN + _SVG_GAP + (c - 1) * (_SVG_COL + _SVG_GAP)

    x_start = float(_SVG_MARGIN)
    x_end = float(width - _SVG_MARGIN)

    paths: dict[int, list[list[tuple[float, float]]]] = {
        s: [[(x_start, ypos(s))]] for s in range(1, d + 1)
    }
    dots: list[tuple[float, float]] = []
    pos = list(range(1, d + 1))
    for c, col in enumerate(arr.columns, start=1):
        if col.kind == STRAIGHT:
            continue
        i = col.level
        xl, xr = col_left(c), col_left(c) + _SVG_COL
        lower_strand, upper_strand = pos[i - 1], pos[i]
        y_low, y_high = ypos(i), ypos(i + 1)
        for strand, y_from, y_to in (
            (lower_strand, y_low, y_high),
            (upper_strand, y_high, y_low),
        ):
            path = paths[strand][-1]
            path.append((xl, y_from))
            ascending = y_to < y_from
            under = col.kind == BRAID and (
                (col.source == "s" and ascending)
                or (col.source == "sinv" and not ascending)
            )
            if under:
                path.append((xl + 0.38 * _SVG_COL, y_from + 0.38 * (y_to - y_from)))
                paths[strand].append(
                    [(xl + 0.62 * _SVG_COL, y_from + 0.62 * (y_to - y_from))]
                )
            paths[strand][-1].append((xr, y_to))
        if col.kind == SINGULAR:
            dots.append((xl + _SVG_COL / 2, (y_low + y_high) / 2))
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    for s in range(1, d + 1):
        paths[s][-1].append((x_end, paths[s][-1][-1][1]))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for s in range(1, d + 1):
        for path in paths[s]:
            pts = " ".join(f"{x:.1f},{y:.1f}" for x, y in path)
            parts.append(f'<polyline points="{pts}"/>')
    parts.append("</g>")
    for x, y in dots:
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="black"/>')
    for s in range(1, d + 1):
        parts.append(
            f'<text x="{x_start - 16:.1f}" y="{ypos(s) + 4:.1f}" '
            f'font-size="12" fill="black">{s}</text>'
        )
    for (level, start, end), text in sorted(labels.items()):
        x_left = _SVG_MARGIN + start * (_SVG_COL + _SVG_GAP)
        x_right = _SVG_MARGIN + end * (_SVG_COL + _SVG_GAP) + _SVG_GAP
        x_mid = (x_left + x_right) / 2
        y_mid = ypos(level + 1) + _SVG_ROW / 2 + 4
        parts.append(
            f'<text x="{x_mid:.1f}" y="{y_mid:.1f}" font-size="12" '
            f'fill="black" text-anchor="middle">{text}</text>'
        )
    if footer:
        y_f = ypos(1) + 24
        for c, text in sorted(footer.items()):
            x_mid = col_left(c) + _SVG_COL / 2
            parts.append(
                f'<text x="{x_mid:.1f}" y="{y_f:.1f}" font-size="12" '
                f'fill="black" text-anchor="middle">{text}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(arr: Arrangement, fmt: str = "text") -> str:
    """Deterministic rendering of an arrangement as text or SVG markup."""
    if fmt == "text":
        return _render_text(arr)
    if fmt == "svg":
        return _render_svg(arr)
    raise InputError(f"unknown render format {fmt!r}")
