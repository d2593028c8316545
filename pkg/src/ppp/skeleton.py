"""The skeleton map, trunks, intrinsic thickness and the tuple bijection.

Skeleton vertices are the columns (black) and the cylinder rows (white). A
column's parent is the row holding its top cell; a row's parent is the column
holding its rightmost cell. Children are ordered closest first, which in
cover coordinates means by decreasing index. Around a cycle vertex the
children farther than the cycle child lie in the inner face and the closer
ones in the outer face.

The tuple list of a PPP has one entry per trunk column, read left to right
starting from the trunk column whose trees contain the first column:
``(inner black, outer black, inner white, outer white)``, each a plane tree
rooted at the trunk column or at the trunk row it contains.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterator, Union

from . import core
from .core import Ppp, cover_bottom, cover_top
from .plane import UnicyclicMap, from_word, preorder, size, to_word


class MalformedMarking(ValueError):
    pass


class EmptyTupleList(ValueError):
    pass


# ---------------------------------------------------------------------------
# Skeleton
# ---------------------------------------------------------------------------

Vertex = tuple  # ("c", column) or ("r", row), reduced modulo the period


@dataclass(frozen=True)
class Skeleton:
    width: int
    height: int
    parent: dict = field(hash=False)
    children: dict = field(hash=False)
    cycles: tuple  # each a tuple of vertices following child -> parent
    root: Vertex = ("c", 0)

    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    @property
    def black_count(self) -> int:
        return sum(1 for v in self.parent if v[0] == "c")

    @property
    def white_count(self) -> int:
        return sum(1 for v in self.parent if v[0] == "r")

    def color(self, v: Vertex) -> str:
        return "black" if v[0] == "c" else "white"

    def on_cycle(self) -> set:
        return {v for cyc in self.cycles for v in cyc}


def _col_kids(p: Ppp, j: int) -> list[int]:
    return list(reversed(core.row_children(p, j)))


def _row_kids(p: Ppp, y: int) -> list[int]:
    return list(reversed(core.column_children(p, y)))


def phi(p: Ppp) -> Skeleton:
    w, h = p.width, p.height
    parent, children = {}, {}
    for j in range(w):
        parent[("c", j)] = ("r", core.column_parent(p, j) % h)
        children[("c", j)] = [("r", y % h) for y in _col_kids(p, j)]
    for y in range(h):
        parent[("r", y)] = ("c", core.row_parent(p, y) % w)
        children[("r", y)] = [("c", j % w) for j in _row_kids(p, y)]
    seen, cycles = set(), []
    for c in core.cycle_data(p).columns:
        v = ("c", c)
        if v in seen:
            continue
        cyc = []
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = parent[v]
        cycles.append(tuple(cyc))
    return Skeleton(w, h, parent, children, tuple(cycles))


def to_unicyclic_map(sk: Skeleton) -> UnicyclicMap:
    """The rooted plane map of a one-cycle skeleton (clockwise = child to parent)."""
    if len(sk.cycles) != 1:
        raise ValueError("skeleton has several cycles")
    cyc = sk.cycles[0]
    on = set(cyc)
    where = {}

    def tree(v, t, path):
        where[v] = (t, path)
        return tuple(tree(ch, t, path + (k,)) for k, ch in enumerate(sk.children[v]))

    inner, outer = [], []
    for t, v in enumerate(cyc):
        kids = sk.children[v]
        cc = next(i for i, ch in enumerate(kids) if ch in on)
        # kids run closest first: closer than the cycle child are outer
        out_k, in_k = kids[:cc], kids[cc + 1:]
        inner.append(tuple(tree(ch, t, (i,)) for i, ch in enumerate(in_k)))
        outer.append(tuple(tree(ch, t, (len(in_k) + i,)) for i, ch in enumerate(out_k)))
        where[v] = (t, ())
    return UnicyclicMap(tuple(inner), tuple(outer), where[sk.root])


# ---------------------------------------------------------------------------
# Trunk
# ---------------------------------------------------------------------------

def trunk(p: Ppp) -> Ppp:
    """Delete every column and row off the skeleton cycles.

    Deleting a leaf column drops it; deleting a leaf row compresses the rows
    above it. Both commute, so all non-cycle lines are removed at once.
    """
    sk = phi(p)
    keep = sk.on_cycle()
    w, h = p.width, p.height
    cols = [j for j in range(w) if ("c", j) in keep]
    rows = [y for y in range(h) if ("r", y) in keep]
    hh = len(rows)

    def rank(y: int) -> int:
        # number of kept cover rows strictly below cover row y
        q, y0 = divmod(y, h)
        return q * hh + sum(1 for r in rows if r < y0)

    b = [rank(cover_bottom(p, j)) for j in cols]
    t = [rank(cover_top(p, j)) for j in cols]
    # first kept column with an empty bottom offset
    b0 = b[0]
    b = [x - b0 for x in b]
    t = [x - b0 for x in t]
    g = t[-1] - hh
    return core.from_columns(b, t, g)


def trunk_params(p: Ppp) -> tuple[int, int]:
    """(k, l) of the trunk normal form, asserting the shape."""
    tp = trunk(p)
    k, l = tp.g, tp.width
    expected = core.validate_ppp("N" * k + "NE" * l, "EN" * l + "N" * k, k)
    if tp != expected:
        # the first kept column need not be the leftmost trunk column of the
        # normal form, but the normal form is invariant under rotation
        raise AssertionError(f"trunk {tp} is not in normal form")
    return k, l


def intrinsic_thickness(p: Ppp) -> int:
    return trunk(p).g


def trunk_width(p: Ppp) -> int:
    return core.cycle_data(p).trunk_width


# ---------------------------------------------------------------------------
# Tuples
# ---------------------------------------------------------------------------

FourTuple = tuple  # (innerBlack, outerBlack, innerWhite, outerWhite)

ROOTS = "roots"


@dataclass(frozen=True)
class PsiImage:
    k: int
    tuples: tuple[FourTuple, ...]
    mark: Union[str, int] = ROOTS  # ROOTS or a tuple-preorder index

    def __post_init__(self):
        if not self.tuples:
            raise EmptyTupleList("at least one 4-tuple is required")
        if self.k < 1:
            raise ValueError("thickness must be positive")
        for tp in self.tuples:
            if len(tp) != 4:
                raise ValueError("tuples must have four trees")
        if self.mark != ROOTS:
            v = _tuple_vertices(self.tuples[0])
            if not isinstance(self.mark, int) or not 0 <= self.mark < len(v):
                raise MalformedMarking(f"no vertex {self.mark!r} in the first tuple")
            tree, depth, path = v[self.mark]
            if not path:
                raise MalformedMarking("a root can only be marked as the two black roots")
            if _is_black(tree, depth) is False:
                raise MalformedMarking("marked vertex is white")

    @property
    def trunk_width(self) -> int:
        return len(self.tuples)

    @property
    def semi_perimeter(self) -> int:
        return sum(tuple_weight(t) for t in self.tuples)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "tuples": [[to_word(t) for t in tp] for tp in self.tuples],
            "mark": self.mark if self.mark == ROOTS else [0, self.mark],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PsiImage":
        mark = d["mark"]
        if mark != ROOTS:
            if mark[0] != 0:
                raise MalformedMarking("the marking lives in the first tuple")
            mark = mark[1]
        tuples = tuple(tuple(from_word(x) for x in tp) for tp in d["tuples"])
        return cls(d["k"], tuples, mark)


def _is_black(tree_index: int, depth: int) -> bool:
    return (tree_index < 2) == (depth % 2 == 0)


def _tuple_vertices(tp: FourTuple) -> list[tuple[int, int, tuple]]:
    """(tree index, depth, path) for the concatenated preorders of the tuple."""
    out = []
    for ti, tree in enumerate(tp):
        for _, depth, path in preorder(tree):
            out.append((ti, depth, path))
    return out


def tuple_weight(tp: FourTuple) -> int:
    """Semi-perimeter contribution: both roots are counted twice."""
    return sum(size(t) for t in tp) - 2


def markings(tp: FourTuple) -> list:
    marks = [ROOTS]
    for idx, (ti, depth, path) in enumerate(_tuple_vertices(tp)):
        if path and _is_black(ti, depth):
            marks.append(idx)
    return marks


# ---------------------------------------------------------------------------
# psi, forward
# ---------------------------------------------------------------------------

def _cycle_children(p: Ppp, cyc_cols: set, cyc_rows: set):
    w, h = p.width, p.height

    def col_cc(j):
        return next(y for y in core.row_children(p, j) if y % h in cyc_rows)

    def row_cc(y):
        return next(j for j in core.column_children(p, y) if j % w in cyc_cols)

    return col_cc, row_cc


def psi_forward(p: Ppp) -> PsiImage:
    w, h = p.width, p.height
    cd = core.cycle_data(p)
    cyc_cols = set(cd.columns)
    cyc_rows = {core.column_parent(p, c) % h for c in cd.columns}
    col_cc, row_cc = _cycle_children(p, cyc_cols, cyc_rows)

    # climb from the first column to the cycle
    v = ("c", 0)
    while not ((v[0] == "c" and v[1] % w in cyc_cols) or (v[0] == "r" and v[1] % h in cyc_rows)):
        v = ("r", core.column_parent(p, v[1])) if v[0] == "c" else ("c", core.row_parent(p, v[1]))
    start = v[1] if v[0] == "c" else core.row_parent(p, v[1])

    # trunk columns from `start` in cover order
    base = start - start % w
    ordered = sorted(cyc_cols)
    pos0 = ordered.index(start % w)
    trunk_cols = []
    for J in range(cd.trunk_width):
        q, r = divmod(pos0 + J, cd.trunk_width)
        trunk_cols.append(base + q * w + ordered[r])

    mark = ROOTS
    tuples = []
    for J, c in enumerate(trunk_cols):
        rho = col_cc(c)
        cc_col = row_cc(rho)
        rows = [y for y in _col_kids(p, c) if y != rho]
        cols = [j for j in _row_kids(p, rho) if j != cc_col]
        counter = [0]
        found = []

        def build_col(j):
            if j == 0:
                found.append(counter[0])
            counter[0] += 1
            return tuple(build_row(y) for y in _col_kids(p, j))

        def build_row(y):
            counter[0] += 1
            return tuple(build_col(j) for j in _row_kids(p, y))

        def root_tree(kids, builder):
            counter[0] += 1
            return tuple(builder(x) for x in kids)

        trees = (
            root_tree([y for y in rows if y < rho], build_row),
            root_tree([y for y in rows if y > rho], build_row),
            root_tree([j for j in cols if j < cc_col], build_col),
            root_tree([j for j in cols if j > cc_col], build_col),
        )
        tuples.append(trees)
        if J == 0 and found:
            mark = found[0]
    k = cd.thickness
    return PsiImage(k, tuple(tuples), mark)


# ---------------------------------------------------------------------------
# psi, inverse
# ---------------------------------------------------------------------------

def _inner_count(tp: FourTuple, white: bool) -> int:
    return len(tp[2] if white else tp[0])


def _child_rank(parent_children: int, idx: int) -> int:
    # children are stored closest first; ranks run by increasing cover index
    return parent_children - 1 - idx


def psi_inverse(im: PsiImage) -> Ppp:
    k, tuples = im.k, im.tuples
    l = len(tuples)

    # vertices: ("C", J) / ("R", J) trunk column / row J (J any integer);
    # ("T", J, ti, path) for a non-root tree vertex of tuple J mod l.
    def parent_and_rank(v):
        if v[0] == "C":
            rho = v[1] + k
            return ("R", rho), _inner_count(tuples[rho % l], True)
        if v[0] == "R":
            return ("C", v[1]), _inner_count(tuples[v[1] % l], False)
        _, J, ti, path = v
        tp = tuples[J % l]
        if len(path) == 1:
            par = ("R", J) if ti >= 2 else ("C", J)
            a = len(tp[ti & 2])
            b = len(tp[(ti & 2) + 1])
            x = path[0]
            rank = a - 1 - x if ti % 2 == 0 else a + 1 + (b - 1 - x)
            return par, rank
        node = tp[ti]
        for y in path[:-1]:
            node = node[y]
        return ("T", J, ti, path[:-1]), _child_rank(len(node), path[-1])

    def is_black(v):
        if v[0] in "CR":
            return v[0] == "C"
        return _is_black(v[2], len(v[3]))

    blacks, whites, depth = [], [], 0
    for J, tp in enumerate(tuples):
        blacks.append(("C", J))
        whites.append(("R", J))
        for ti, tree in enumerate(tp):
            for _, d, path in preorder(tree):
                if not path:
                    continue
                depth = max(depth, d)
                (blacks if _is_black(ti, d) else whites).append(("T", J, ti, path))
    w, h = len(blacks), len(whites)
    levels = depth + depth % 2

    def key(v):
        ranks = []
        for _ in range(levels):
            v, r = parent_and_rank(v)
            ranks.append(r)
        return (v[1], tuple(reversed(ranks)))

    def lift(v, m):
        if v[0] in "CR":
            return (v[0], v[1] + m * l)
        return ("T", v[1] + m * l) + v[2:]

    def shift_key(kv, m):
        return (kv[0] + m * l, kv[1])

    span = (levels // 2 + 1) * (k // l + 1) + 2
    bkeys = [key(v) for v in blacks]
    wkeys = [key(v) for v in whites]
    col_items = sorted((shift_key(kv, m), lift(v, m))
                       for m in range(-span, span + 1) for v, kv in zip(blacks, bkeys))
    row_items = sorted((shift_key(kv, m), lift(v, m))
                       for m in range(-span, span + 1) for v, kv in zip(whites, wkeys))
    col_pos = {v: i for i, (_, v) in enumerate(col_items)}
    row_pos = {v: i for i, (_, v) in enumerate(row_items)}

    first = ("C", 0) if im.mark == ROOTS else _mark_vertex(tuples[0], im.mark)
    x0 = col_pos[first]
    # bottom of a column: first row whose parent sits at or after it
    row_parent_pos = [col_pos[parent_and_rank(v)[0]] for _, v in row_items]
    tops, bottoms = [], []
    for x in range(x0, x0 + w + 1):
        v = col_items[x][1]
        tops.append(row_pos[parent_and_rank(v)[0]] + 1)
        bottoms.append(bisect.bisect_left(row_parent_pos, x))
    base = bottoms[0]
    if bottoms[w] - base != h:
        raise AssertionError("reconstruction lost periodicity")
    b = [x - base for x in bottoms[:w]]
    t = [x - base for x in tops[:w]]
    return core.from_columns(b, t, t[-1] - h)


def _mark_vertex(tp: FourTuple, mark: int):
    ti, depth, path = _tuple_vertices(tp)[mark]
    return ("T", 0, ti, path)


# ---------------------------------------------------------------------------
# Derived views
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicStructure:
    """Trunk column ``J`` (0-based, left to right) has its top cell in the
    row of trunk column ``parent[J]``."""
    trunk_width: int
    parent: tuple[int, ...]

    @property
    def labels(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """1-based (column labels, parent-row labels) around the trunk."""
        return (tuple(range(1, self.trunk_width + 1)),
                tuple(x + 1 for x in self.parent))


def cyclic_structure(p: Ppp) -> CyclicStructure:
    im = psi_forward(p)
    l = im.trunk_width
    return CyclicStructure(l, tuple((J + im.k) % l for J in range(l)))


def enumerate_psi_images(n: int, thickness_cap: int, *, thickness_from: int = 1
                         ) -> Iterator[PsiImage]:
    for tuples in tuple_lists(n):
        for mark in markings(tuples[0]):
            for k in range(thickness_from, thickness_cap + 1):
                yield PsiImage(k, tuples, mark)


def enumerate_via_psi(n: int, thickness_cap: int) -> Iterator[Ppp]:
    for im in enumerate_psi_images(n, thickness_cap):
        yield psi_inverse(im)


_TUPLE_CACHE: dict[int, list] = {}


def four_tuples(weight: int) -> list[FourTuple]:
    """All 4-tuples of plane trees with the given semi-perimeter weight."""
    if weight not in _TUPLE_CACHE:
        from .plane import _sequences
        _TUPLE_CACHE[weight] = list(_sequences(weight + 2, 4))
    return _TUPLE_CACHE[weight]


def tuple_lists(n: int) -> Iterator[tuple[FourTuple, ...]]:
    """Nonempty lists of 4-tuples with total weight ``n``."""
    if n < 2:
        return
    for first in range(2, n + 1):
        for tp in four_tuples(first):
            if first == n:
                yield (tp,)
            else:
                for rest in tuple_lists(n - first):
                    yield (tp,) + rest
