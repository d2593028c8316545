"""Periodic parallelogram polyominoes: representation, statistics, generation.

A PPP is stored by its flat column frames. Column ``j`` occupies the flat rows
``bottoms[j] <= y < tops[j]``; ``tops[-1]`` is the number of flat rows ``R``.
The gluing size ``g`` identifies the bottom ``g`` rows of the first column with
the top ``g`` rows of the last one, so cylinder rows are residues modulo
``h = R - g``.

Equivalently a PPP is a bi-infinite parallelogram polyomino invariant under
the translation ``(w, h)`` together with a choice of first column. Most of the
structural code works on that periodic cover through :func:`cover_bottom`,
:func:`cover_top` and :func:`column_parent`.
"""
from __future__ import annotations

import bisect
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import chain
from math import comb
from typing import Iterator, NamedTuple


class PppError(ValueError):
    """Base class for rejected PPP data."""


class MismatchedCounts(PppError):
    pass


class NotParallelogram(PppError):
    pass


class GluingTooLarge(PppError):
    pass


class FullTorus(PppError):
    pass


class NonPositive(PppError):
    pass


class PppStats(NamedTuple):
    width: int
    height: int
    semi_perimeter: int
    area: int


@dataclass(frozen=True)
class Ppp:
    bottoms: tuple[int, ...]
    tops: tuple[int, ...]
    g: int

    # -- derived sizes -------------------------------------------------
    @property
    def width(self) -> int:
        return len(self.tops)

    @property
    def rows(self) -> int:
        """Number of flat rows ``R``."""
        return self.tops[-1]

    @property
    def height(self) -> int:
        return self.rows - self.g

    @property
    def semi_perimeter(self) -> int:
        return self.width + self.height

    @property
    def area(self) -> int:
        return sum(t - b for b, t in zip(self.bottoms, self.tops))

    @property
    def first_height(self) -> int:
        return self.tops[0] - self.bottoms[0]

    @property
    def last_height(self) -> int:
        return self.tops[-1] - self.bottoms[-1]

    # -- boundary words ------------------------------------------------
    @cached_property
    def upper(self) -> str:
        out, prev = [], 0
        for t in self.tops:
            out.append("N" * (t - prev) + "E")
            prev = t
        return "".join(out)

    @cached_property
    def lower(self) -> str:
        nxt = self.bottoms[1:] + (self.rows,)
        return "".join("E" + "N" * (b1 - b0) for b0, b1 in zip(self.bottoms, nxt))

    def sort_key(self):
        return (self.width, self.rows, flat_bits(self.upper), flat_bits(self.lower), self.g)

    def __repr__(self) -> str:
        return f"Ppp(upper={self.upper!r}, lower={self.lower!r}, g={self.g})"

    # -- serialization -------------------------------------------------
    def to_dict(self) -> dict:
        return {"upper": self.upper, "lower": self.lower, "g": self.g}

    @classmethod
    def from_dict(cls, d: dict) -> "Ppp":
        return validate_ppp(d["upper"], d["lower"], d["g"])


@dataclass(frozen=True)
class MarkedPpp:
    ppp: Ppp
    mark: int

    def to_dict(self) -> dict:
        return {**self.ppp.to_dict(), "mark": self.mark}

    @classmethod
    def from_dict(cls, d: dict) -> "MarkedPpp":
        p = Ppp.from_dict(d)
        if not 0 <= d["mark"] <= p.first_height - p.g:
            raise PppError(f"mark {d['mark']} out of range")
        return cls(p, d["mark"])


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _columns_of(word: str) -> list[int]:
    """Number of N steps preceding each E step."""
    out, n = [], 0
    for c in word:
        if c == "N":
            n += 1
        elif c == "E":
            out.append(n)
        else:
            raise PppError(f"bad step {c!r}")
    return out


def validate_ppp(upper: str, lower: str, g: int) -> Ppp:
    if g <= 0:
        raise NonPositive(f"gluing size must be positive, got {g}")
    if not upper or not lower:
        raise MismatchedCounts("empty path")
    if upper.count("N") != lower.count("N") or upper.count("E") != lower.count("E"):
        raise MismatchedCounts(f"{upper!r} and {lower!r} have different step counts")
    tops = _columns_of(upper)
    bottoms = _columns_of(lower)
    return from_columns(bottoms, tops, g, _rows=upper.count("N"))


def from_columns(bottoms, tops, g: int, _rows: int | None = None) -> Ppp:
    """Build a PPP from flat column frames, checking every invariant."""
    bottoms, tops = tuple(bottoms), tuple(tops)
    w = len(tops)
    if w == 0 or len(bottoms) != w:
        raise MismatchedCounts("column count mismatch")
    rows = tops[-1] if _rows is None else _rows
    if g <= 0:
        raise NonPositive(f"gluing size must be positive, got {g}")
    # upper path must start with N and end with E, lower start with E and end with N
    if bottoms[0] != 0 or tops[0] < 1 or tops[-1] != rows or bottoms[-1] >= rows:
        raise NotParallelogram("paths touch at an internal point")
    for j in range(1, w):
        if bottoms[j] >= tops[j - 1]:
            raise NotParallelogram(f"columns {j - 1} and {j} do not overlap")
    p = Ppp(bottoms, tops, g)
    if g > min(p.first_height, p.last_height):
        raise GluingTooLarge(f"g={g} exceeds the first/last column heights")
    if g >= rows:
        raise FullTorus("rectangle glued along full columns")
    return p


# ---------------------------------------------------------------------------
# Statistics, words, rendering
# ---------------------------------------------------------------------------

def stats(p: Ppp) -> PppStats:
    return PppStats(p.width, p.height, p.semi_perimeter, p.area)


def flat_bits(word: str) -> str:
    """Direct 0/1 encoding of a step word (N -> 0, E -> 1)."""
    return word.replace("N", "0").replace("E", "1")


def decode_bits(upper_bits: str, lower_bits: str, g: int) -> Ppp:
    tr = str.maketrans("01", "NE")
    return validate_ppp(upper_bits.translate(tr), lower_bits.translate(tr), g)


def path_words(p: Ppp) -> tuple[str, str]:
    """Boundary words of one period of the cylinder, as 0/1 strings.

    The upper word reads ``0^(t_j - t_{j-1}) 1`` over the columns, with the
    top of column ``-1`` taken from the periodic cover; the lower word reads
    ``1 0^(b_{j+1} - b_j)``. Each word has ``h`` zeros and ``w`` ones. Unlike
    the flat words these are unchanged by derivation.
    """
    h, w = p.height, p.width
    prev = p.tops[-1] - h
    up = []
    for t in p.tops:
        up.append("0" * (t - prev) + "1")
        prev = t
    nxt = p.bottoms[1:] + (p.bottoms[0] + h,)
    low = "".join("1" + "0" * (b1 - b0) for b0, b1 in zip(p.bottoms, nxt))
    return "".join(up), low


def render_ascii(p: Ppp) -> str:
    """Cells as ``#``; ``>`` flags the top glued row of the first column and
    ``<`` the bottom glued row of the last column."""
    lines = []
    for y in range(p.rows - 1, -1, -1):
        cells = "".join("#" if b <= y < t else "." for b, t in zip(p.bottoms, p.tops))
        left = ">" if y == p.g - 1 else " "
        right = "<" if y == p.rows - p.g else " "
        lines.append(left + cells + right)
    return "\n".join(lines)


def parse_ascii(text: str) -> Ppp:
    lines = text.split("\n")
    rows = len(lines)
    width = len(lines[0]) - 2
    bottoms, tops = [], []
    for j in range(width):
        ys = [rows - 1 - i for i, line in enumerate(lines) if line[j + 1] == "#"]
        bottoms.append(min(ys))
        tops.append(max(ys) + 1)
    g = next(rows - i for i, line in enumerate(lines) if line[0] == ">")
    return from_columns(bottoms, tops, g)


# ---------------------------------------------------------------------------
# Periodic cover
# ---------------------------------------------------------------------------

def cover_bottom(p: Ppp, j: int) -> int:
    q, r = divmod(j, p.width)
    return p.bottoms[r] + q * p.height


def cover_top(p: Ppp, j: int) -> int:
    q, r = divmod(j, p.width)
    return p.tops[r] + q * p.height


def row_parent(p: Ppp, y: int) -> int:
    """Cover column holding the rightmost cell of cover row ``y``."""
    q, y0 = divmod(y, p.height)
    return q * p.width + bisect.bisect_right(p.bottoms, y0) - 1


def column_parent(p: Ppp, j: int) -> int:
    """Cover row of the top cell of cover column ``j``."""
    return cover_top(p, j) - 1


def column_map(p: Ppp, j: int) -> int:
    """Column to grand-parent column in the cover; always moves right."""
    return row_parent(p, column_parent(p, j))


def row_children(p: Ppp, j: int) -> range:
    """Cover rows whose rightmost cell lies in cover column ``j``."""
    return range(cover_bottom(p, j), cover_bottom(p, j + 1))


def column_children(p: Ppp, y: int) -> list[int]:
    """Cover columns whose top cell lies in cover row ``y``, left to right."""
    out = []
    for r, t in enumerate(p.tops):
        q, rem = divmod(y + 1 - t, p.height)
        if rem == 0:
            out.append(r + q * p.width)
    return sorted(out)


class CycleData(NamedTuple):
    columns: tuple[int, ...]  # cycle columns of one period, in [0, w)
    length: int  # columns per cycle
    winding: int  # periods travelled per turn of one cycle

    @property
    def trunk_width(self) -> int:
        return len(self.columns)

    @property
    def thickness(self) -> int:
        return self.trunk_width * self.winding // self.length


def cycle_data(p: Ppp) -> CycleData:
    """Periodic columns of the column-to-column map and their rotation.

    The map is non-decreasing and commutes with the period shift, so every
    cycle shares one rotation number ``winding / length``; the intrinsic
    thickness is that rotation number times the number of cycle columns.
    """
    w = p.width
    nxt = [column_map(p, j) for j in range(w)]
    state = [0] * w  # 0 unseen, 1 on stack, 2 done
    periodic = set()
    for start in range(w):
        path, j = [], start
        while state[j] == 0:
            state[j] = 1
            path.append(j)
            j = nxt[j] % w
        if state[j] == 1:
            periodic.update(path[path.index(j):])
        for v in path:
            state[v] = 2
    c = min(periodic)
    m, x = 0, c
    while True:
        x = column_map(p, x)
        m += 1
        if x % w == c:
            break
    return CycleData(tuple(sorted(periodic)), m, (x - c) // w)


def thickness(p: Ppp) -> int:
    return cycle_data(p).thickness


# ---------------------------------------------------------------------------
# Exhaustive generation
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _tops(bottoms, h, j, lo_prev, t0, area_left, out, acc):
    w = len(bottoms)
    nxt_b = bottoms[j + 1] if j + 1 < w else h
    lo = max(lo_prev, nxt_b + 1)
    hi = t0 + h if j == w - 1 else t0 + h
    if j == 0:
        lo, hi = t0, t0
    for t in range(lo, hi + 1):
        cells = t - bottoms[j]
        if area_left is not None and cells > area_left:
            break
        acc.append(t)
        if j == w - 1:
            out.append(tuple(acc))
        else:
            _tops(bottoms, h, j + 1, t, t0, None if area_left is None else area_left - cells,
                  out, acc)
        acc.pop()


def _shapes(w: int, h: int, max_t0: int, max_area: int | None) -> Iterator[Ppp]:
    for comp in _compositions(h, w):
        bottoms = tuple(chain((0,), _partial_sums(comp[:-1])))
        for t0 in range(bottoms[1] + 1 if w > 1 else h + 1, max_t0 + 1):
            if max_area is not None and t0 > max_area:
                break
            out: list[tuple[int, ...]] = []
            _tops(bottoms, h, 0, t0, t0, max_area, out, [])
            for tops in out:
                g = tops[-1] - h
                yield Ppp(bottoms, tops, g)


def _partial_sums(xs):
    s = 0
    for x in xs:
        s += x
        yield s


def _search_width(args) -> list[Ppp]:
    n, w, cap, max_area = args
    h = n - w
    # t0 > (cap + 2) h forces every column to reach cap + 1 periods ahead
    max_t0 = (cap + 2) * h
    found = []
    for p in _shapes(w, h, max_t0, max_area):
        if thickness(p) <= cap:
            found.append(p)
    found.sort(key=Ppp.sort_key)
    return found


def enumerate_ppps(n: int, thickness_cap: int, *, max_area: int | None = None,
                   jobs: int = 1) -> Iterator[Ppp]:
    """Every PPP of semi-perimeter ``n`` and intrinsic thickness at most
    ``thickness_cap``, by direct search over column frames.

    Order is lexicographic in (width, rows, upper bits, lower bits, g).
    ``max_area`` optionally drops shapes with more cells.
    """
    tasks = [(n, w, thickness_cap, max_area) for w in range(1, n)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_search_width, tasks))
    else:
        parts = map(_search_width, tasks)
    for part in parts:
        yield from part


def marking_count(p: Ppp) -> int:
    return p.first_height - p.g + 1


def enumerate_marked(n: int, thickness_cap: int) -> Iterator[MarkedPpp]:
    for p in enumerate_ppps(n, thickness_cap):
        for m in range(marking_count(p)):
            yield MarkedPpp(p, m)


def thickness_one_count(n: int) -> int:
    """Closed form for thickness-1 PPPs of semi-perimeter ``n``."""
    return 4 ** (n - 1) - comb(2 * n - 1, n - 1)


def dumps(objs) -> str:
    return json.dumps([o.to_dict() for o in objs])
