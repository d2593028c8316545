"""Plane trees, rooted unicyclic plane maps and the sets A_n, B_n.

A plane tree is a nested tuple: a vertex is the tuple of its child subtrees,
so ``()`` is a single vertex and ``((), ())`` a cherry. Vertex ids are
preorder indices.

A :class:`UnicyclicMap` stores an even cycle listed in clockwise order. At
each cycle vertex the trees drawn in the inner and in the outer face are kept
as plane trees rooted at that cycle vertex. The distinguished vertex is given
by ``root = (t, path)``: ``t`` is a cycle position and ``path`` descends from
it, its first index running over the inner children and then the outer ones.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

PlaneTree = tuple

LEAF: PlaneTree = ()


def size(t: PlaneTree) -> int:
    return 1 + sum(size(c) for c in t)


def to_word(t: PlaneTree) -> str:
    return "(" + "".join(to_word(c) for c in t) + ")"


def from_word(word: str) -> PlaneTree:
    stack: list[list] = [[]]
    for ch in word:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) == 1:
                raise ValueError(f"unbalanced tree word {word!r}")
            node = tuple(stack.pop())
            stack[-1].append(node)
        else:
            raise ValueError(f"bad character {ch!r} in tree word")
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ValueError(f"unbalanced tree word {word!r}")
    return stack[0][0]


def preorder(t: PlaneTree, depth: int = 0) -> Iterator[tuple[PlaneTree, int, tuple[int, ...]]]:
    """Yield (subtree, depth, path) in preorder."""
    stack = [(t, depth, ())]
    while stack:
        node, d, path = stack.pop()
        yield node, d, path
        for k in range(len(node) - 1, -1, -1):
            stack.append((node[k], d + 1, path + (k,)))


def subtree_at(t: PlaneTree, path) -> PlaneTree:
    for k in path:
        t = t[k]
    return t


def path_of(t: PlaneTree, index: int) -> tuple[int, ...]:
    for i, (_, _, path) in enumerate(preorder(t)):
        if i == index:
            return path
    raise IndexError(index)


def index_of(t: PlaneTree, path) -> int:
    for i, (_, _, p) in enumerate(preorder(t)):
        if p == tuple(path):
            return i
    raise KeyError(path)


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[tuple[PlaneTree, ...], ...]:
    """All ordered forests with n vertices."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for head in _trees(first):
            for tail in _forests(n - first):
                out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[PlaneTree, ...]:
    return _forests(n - 1)


def enumerate_plane_trees(n: int) -> Iterator[PlaneTree]:
    if n < 1:
        raise ValueError("trees have at least one vertex")
    yield from _trees(n)


def canonical_tree_code(t: PlaneTree) -> bytes:
    return to_word(t).encode()


# ---------------------------------------------------------------------------
# Depth triples (the set A_n)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DepthTriple:
    tree: PlaneTree
    s: int  # preorder index of a non-root vertex
    i: int

    @property
    def depth(self) -> int:
        return len(path_of(self.tree, self.s))

    def __post_init__(self):
        if not 0 < self.s < size(self.tree):
            raise ValueError("s must be a non-root vertex")
        if not 1 <= self.i <= 2 * self.depth - 1:
            raise ValueError(f"slot {self.i} out of range for depth {self.depth}")


def enumerate_A(n: int) -> Iterator[DepthTriple]:
    for tree in enumerate_plane_trees(n):
        for s, (_, depth, _) in enumerate(preorder(tree)):
            if s == 0:
                continue
            for i in range(1, 2 * depth):
                yield DepthTriple(tree, s, i)


# ---------------------------------------------------------------------------
# Rooted unicyclic plane maps (the set B_n)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnicyclicMap:
    inner: tuple[PlaneTree, ...]
    outer: tuple[PlaneTree, ...]
    root: tuple[int, tuple[int, ...]]

    def __post_init__(self):
        if len(self.inner) != len(self.outer):
            raise ValueError("inner/outer length mismatch")
        if len(self.inner) < 2 or len(self.inner) % 2:
            raise ValueError("cycle length must be even and positive")
        t, path = self.root
        if not 0 <= t < len(self.inner):
            raise ValueError("root position out of range")
        if path:
            self._root_subtree()

    @property
    def cycle_length(self) -> int:
        return len(self.inner)

    @property
    def vertex_count(self) -> int:
        return sum(size(a) + size(b) - 1 for a, b in zip(self.inner, self.outer))

    def children_at(self, t: int) -> tuple[PlaneTree, ...]:
        return self.inner[t] + self.outer[t]

    def _root_subtree(self) -> PlaneTree:
        t, path = self.root
        node = self.children_at(t)[path[0]]
        return subtree_at(node, path[1:])

    def rotated(self, shift: int) -> "UnicyclicMap":
        """Relabel cycle positions so that position ``shift`` becomes 0."""
        c = self.cycle_length
        inner = self.inner[shift:] + self.inner[:shift]
        outer = self.outer[shift:] + self.outer[:shift]
        t, path = self.root
        return UnicyclicMap(inner, outer, ((t - shift) % c, path))

    def to_dict(self) -> dict:
        return {
            "cycle": self.cycle_length,
            "inner": [[to_word(c) for c in t] for t in self.inner],
            "outer": [[to_word(c) for c in t] for t in self.outer],
            "root": [self.root[0], list(self.root[1])],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "UnicyclicMap":
        inner = tuple(tuple(from_word(w) for w in f) for f in d["inner"])
        outer = tuple(tuple(from_word(w) for w in f) for f in d["outer"])
        if len(inner) != d["cycle"]:
            raise ValueError("cycle length disagrees with forests")
        return cls(inner, outer, (d["root"][0], tuple(d["root"][1])))


def canonical_code(x) -> bytes:
    """Code equal for two structures iff they are isomorphic.

    Plane trees are rigid, so their word is canonical. For maps the only
    freedom is the rotation of the cycle, fixed by moving the cycle vertex
    carrying (or equal to) the distinguished vertex to position 0.
    """
    if isinstance(x, UnicyclicMap):
        m = x.rotated(x.root[0])
        return json.dumps(m.to_dict(), separators=(",", ":")).encode()
    return canonical_tree_code(x)


# -- rotation systems ----------------------------------------------------

@dataclass
class RotationSystem:
    """Half-edge view of a plane map.

    ``rot[v]`` lists edge ids counter-clockwise around ``v``; ``ends[e]`` is
    the pair of endpoints. ``cycle`` lists the cycle vertices clockwise and
    ``cycle_edges[k]`` joins ``cycle[k]`` to ``cycle[k + 1]`` (needed to tell
    the two parallel edges of a 2-cycle apart).
    """
    rot: dict[int, list[int]]
    ends: dict[int, tuple[int, int]]
    cycle: list[int]
    cycle_edges: list[int]
    root: int

    def other(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        return b if a == v else a


def map_to_rotation(m: UnicyclicMap) -> RotationSystem:
    c = m.cycle_length
    rot: dict[int, list[int]] = {}
    ends: dict[int, tuple[int, int]] = {t: (t, (t + 1) % c) for t in range(c)}
    where: dict[tuple, int] = {}
    counter = [c]

    # a tree vertex v hangs on the edge with id v
    def grow(tree, parent, t, path):
        v = counter[0]
        counter[0] += 1
        where[(t, path)] = v
        ends[v] = (parent, v)
        rot[v] = [v] + [grow(ch, v, t, path + (k,)) for k, ch in enumerate(tree)]
        return v

    for t in range(c):
        where[(t, ())] = t
        kids = m.children_at(t)
        edges = [grow(ch, t, t, (k,)) for k, ch in enumerate(kids)]
        a = len(m.inner[t])
        rot[t] = [(t - 1) % c] + edges[:a] + [t] + edges[a:]
    root = where[(m.root[0], tuple(m.root[1]))]
    return RotationSystem(rot, ends, list(range(c)), list(range(c)), root)


def rotation_to_map(rs: RotationSystem) -> UnicyclicMap:
    """Read a clockwise-oriented rotation system back as a UnicyclicMap."""
    c = len(rs.cycle)
    where: dict[int, tuple[int, tuple[int, ...]]] = {}
    inner, outer = [], []
    for k, v in enumerate(rs.cycle):
        r = rs.rot[v]
        a = r.index(rs.cycle_edges[k - 1])
        seq = r[a + 1:] + r[:a]
        b = seq.index(rs.cycle_edges[k])
        inner_e, outer_e = seq[:b], seq[b + 1:]
        inner.append(tuple(_tree_from(rs, rs.other(e, v), e) for e in inner_e))
        outer.append(tuple(_tree_from(rs, rs.other(e, v), e) for e in outer_e))
        where[v] = (k, ())
        for idx, e in enumerate(inner_e + outer_e):
            _locate(rs, rs.other(e, v), e, k, (idx,), where)
    assert len(inner) == c
    return UnicyclicMap(tuple(inner), tuple(outer), where[rs.root])


def _tree_from(rs, v, pe) -> PlaneTree:
    r = rs.rot[v]
    k = r.index(pe)
    return tuple(_tree_from(rs, rs.other(e, v), e) for e in r[k + 1:] + r[:k])


def _locate(rs, v, pe, t, path, where):
    where[v] = (t, path)
    r = rs.rot[v]
    k = r.index(pe)
    for idx, e in enumerate(r[k + 1:] + r[:k]):
        _locate(rs, rs.other(e, v), e, t, path + (idx,), where)


def isomorphic(m1: UnicyclicMap, m2: UnicyclicMap) -> bool:
    """Root- and orientation-preserving isomorphism test by simultaneous
    traversal of the two rotation systems, trying every starting dart."""
    if m1.vertex_count != m2.vertex_count or m1.cycle_length != m2.cycle_length:
        return False
    a = map_to_rotation(m1)
    b = map_to_rotation(m2)
    if len(a.rot[a.root]) != len(b.rot[b.root]):
        return False
    # the oriented cycle is part of the structure: each directed cycle edge
    # must go to the directed cycle edge leaving the image of its tail
    succ_a = {e: v for v, e in zip(a.cycle, a.cycle_edges)}
    succ_b = {v: e for v, e in zip(b.cycle, b.cycle_edges)}
    for start in range(len(b.rot[b.root])):
        if _walk(a, b, start, succ_a, succ_b):
            return True
    return False


def _walk(a, b, start, succ_a, succ_b) -> bool:
    vmap = {a.root: b.root}
    emap = {}
    todo = [(a.root, 0, b.root, start)]
    while todo:
        va, ka, vb, kb = todo.pop()
        ra, rb = a.rot[va], b.rot[vb]
        if len(ra) != len(rb):
            return False
        for d in range(len(ra)):
            ea = ra[(ka + d) % len(ra)]
            eb = rb[(kb + d) % len(rb)]
            if ea in emap:
                if emap[ea] != eb:
                    return False
                continue
            emap[ea] = eb
            ua, ub = a.other(ea, va), b.other(eb, vb)
            if ua in vmap:
                if vmap[ua] != ub:
                    return False
                continue
            vmap[ua] = ub
            todo.append((ua, a.rot[ua].index(ea), ub, b.rot[ub].index(eb)))
    if len(set(vmap.values())) != len(vmap):
        return False
    return all(emap[e] == succ_b[vmap[v]] for e, v in succ_a.items())


def _sequences(total: int, slots: int) -> Iterator[tuple[PlaneTree, ...]]:
    """Tuples of ``slots`` plane trees whose sizes sum to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - slots + 2):
        for t in _trees(first):
            for rest in _sequences(total - first, slots - 1):
                yield (t,) + rest


def all_vertices(m_inner, m_outer) -> Iterator[tuple[int, tuple[int, ...]]]:
    for t, (a, b) in enumerate(zip(m_inner, m_outer)):
        yield t, ()
        for k, ch in enumerate(a + b):
            for _, _, path in preorder(ch):
                yield t, (k,) + path


def enumerate_B(n: int) -> Iterator[UnicyclicMap]:
    """One representative per isomorphism class of rooted unicyclic plane maps
    with ``n`` vertices and an even cycle."""
    if n < 2:
        raise ValueError("n >= 2 required")
    seen: set[bytes] = set()
    for half in range(1, n // 2 + 1):
        c = 2 * half
        # each cycle vertex roots two trees that share it
        for trees in _sequences(n + c, 2 * c):
            inner, outer = trees[0::2], trees[1::2]
            for t, path in all_vertices(inner, outer):
                if t != 0:
                    continue  # every class has a representative rooted at position 0
                m = UnicyclicMap(inner, outer, (t, path))
                code = canonical_code(m)
                if code not in seen:
                    seen.add(code)
                    yield m
