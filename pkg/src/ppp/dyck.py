"""Bijection between depth triples (A_n) and rooted unicyclic maps (B_n).

Trees are drawn root on top, children left to right, so around a vertex the
counter-clockwise order is ``parent, first child, ..., last child``. For a
triple ``(A, s, i)`` with ``s`` at depth ``p`` on the path
``a_0, ..., a_p``, the ``2p - 1`` slots are read counter-clockwise: slots
``i < p`` sit on the right of ``a_(p-i)``, slot ``p`` is the root and slots
``i > p`` sit on the left of ``a_(i-p)``.

Forward construction:

* odd ``i``: the new edge leaves ``s`` after its last child; even ``i``: it
  leaves ``s'`` (the parent of ``s``) just before ``s``;
* on a right slot the edge lands after the last child of the ancestor, on a
  left slot just after its parent edge, at the root after the last child;
* the root children to the right of ``a_1`` move to the landing vertex, just
  after the new edge on a right slot and just before it on a left slot.

The new edge wraps around the subtrees it passes, so right slots leave the
root outside the cycle and left slots enclose it. The inverse reads the case
back from that position, finds the vertex ``u`` at the far end of the new
edge and decides the parity from whether ``u`` carries a subtree inside the
cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .plane import (
    DepthTriple, PlaneTree, RotationSystem, UnicyclicMap, map_to_rotation,
    path_of, preorder, rotation_to_map,
)


class NotUnicyclic(ValueError):
    pass


class OddCycle(ValueError):
    pass


@dataclass(frozen=True)
class AttachmentSlot:
    ancestor: int  # depth of the ancestor on the root-to-s path
    side: str  # "left", "right" or "root"
    label: int


def attachment_slots(p: int) -> list[AttachmentSlot]:
    """The ``2p - 1`` counter-clockwise slots for a vertex of depth ``p``."""
    slots = [AttachmentSlot(p - i, "right", i) for i in range(1, p)]
    slots.append(AttachmentSlot(0, "root", p))
    slots += [AttachmentSlot(i - p, "left", i) for i in range(p + 1, 2 * p)]
    return slots


def _tree_rotation(tree: PlaneTree):
    """Vertices are preorder ids; the edge above vertex v has id v."""
    rot: dict[int, list[int]] = {}
    ends: dict[int, tuple[int, int]] = {}
    parent: dict[int, int] = {}
    ids = {}
    for k, (_, _, path) in enumerate(preorder(tree)):
        ids[path] = k
    for path, v in ids.items():
        node = tree
        for x in path:
            node = node[x]
        kids = [ids[path + (c,)] for c in range(len(node))]
        rot[v] = ([v] if path else []) + kids
        for c in kids:
            ends[c] = (v, c)
            parent[c] = v
    return rot, ends, parent


def phi_cap_forward(tr: DepthTriple, trace: list | None = None) -> UnicyclicMap:
    tree, s, i = tr.tree, tr.s, tr.i
    rot, ends, parent = _tree_rotation(tree)
    path = [s]
    while path[-1] != 0:
        path.append(parent[path[-1]])
    path.reverse()  # a_0 = root, ..., a_p = s
    p = len(path) - 1
    slot = attachment_slots(p)[i - 1]
    t = path[slot.ancestor]
    x = s if i % 2 else path[p - 1]
    e = len(rot)  # fresh edge id
    ends[e] = (x, t)
    if i % 2:
        rot[s].append(e)
    else:
        rot[x].insert(rot[x].index(s), e)
    if slot.side == "left":
        rot[t].insert(1, e)
    else:
        rot[t].append(e)
    if trace is not None:
        trace.append(f"depth p={p}, slot {i} -> {slot.side} of a_{slot.ancestor}; "
                     f"edge from {'s' if i % 2 else 'parent of s'} (vertex {x}) to vertex {t}")
    if slot.side != "root":
        a1 = path[1]
        k = rot[0].index(a1)
        moved = rot[0][k + 1:]
        del rot[0][k + 1:]
        for c in moved:
            ends[c] = (t, c)
        at = rot[t].index(e)
        if slot.side == "right":
            rot[t][at + 1:at + 1] = moved
        else:
            rot[t][at:at] = moved
        if trace is not None:
            trace.append(f"moved {len(moved)} root subtree(s) right of a_1 onto vertex {t}")
    # clockwise: t -> x along the new edge, then back up the tree path
    cycle, cycle_edges = [t], [e]
    v = x
    while v != t:
        cycle.append(v)
        cycle_edges.append(v)
        v = parent[v]
    if len(cycle) % 2:
        raise OddCycle(f"cycle of length {len(cycle)}")
    rs = RotationSystem(rot, ends, cycle, cycle_edges, 0)
    m = rotation_to_map(rs)
    if trace is not None:
        trace.append(f"cycle length {len(cycle)}, {m.vertex_count} vertices")
    return m


def phi_cap_inverse(m: UnicyclicMap) -> DepthTriple:
    if not isinstance(m, UnicyclicMap):
        raise NotUnicyclic(type(m).__name__)
    if m.cycle_length % 2:
        raise OddCycle(m.cycle_length)
    rs = map_to_rotation(m)
    rot = {v: list(r) for v, r in rs.rot.items()}
    on_cycle = {v: k for k, v in enumerate(rs.cycle)}
    c = len(rs.cycle)
    r = rs.root
    stem = [r]
    while stem[-1] not in on_cycle:
        v = stem[-1]
        stem.append(rs.other(v, v))  # tree vertex v hangs on edge v
    t = stem[-1]
    j = len(stem) - 1
    kt = on_cycle[t]
    e = rs.cycle_edges[kt]
    e_in = rs.cycle_edges[kt - 1]
    u = rs.cycle[(kt + 1) % c]

    if j == 0:
        side = "root"
    else:
        stem_edge = stem[j - 1]
        rt = rot[t]
        a = rt.index(e_in)
        seq = rt[a + 1:] + rt[:a]
        side = "left" if seq.index(stem_edge) < seq.index(e) else "right"
        k = rt.index(stem_edge)
        lin = rt[k:] + rt[:k]  # starts with the stem edge
        ke = lin.index(e)
        if side == "right":
            moved = lin[ke + 1:]
            rot[t] = lin[:ke + 1]
        else:
            moved = lin[1:ke]
            rot[t] = lin[:1] + lin[ke:]
        # root linear order ends with the stem child; moved subtrees follow it
        rr = rot[r]
        ks = rr.index(r)  # r hangs on the edge with its own id
        rot[r] = ["top"] + rr[ks + 1:] + rr[:ks + 1] + moved

    # parity at u: a subtree between the new edge and the tree path edge
    ku = on_cycle[u]
    up = rs.cycle_edges[ku]
    ru = rot[u]
    a = ru.index(e)
    lin = ru[a:] + ru[:a]
    sector = lin[1:lin.index(up)]
    s_vertex = u if not sector else rs.other(sector[0], u)

    for v in (t, u):
        rot[v] = [x for x in rot[v] if x != e]
    if j == 0:
        rr = rs.rot[r]
        k = rr.index(e)
        rot[r] = ["top"] + [x for x in rr[k + 1:] + rr[:k] if x != e]

    moved_set = set(moved) if j else set()

    def other(edge, v):
        if edge in moved_set:
            return edge  # tree edge ids are the ids of their lower vertex
        return rs.other(edge, v)

    ids: dict[int, int] = {}

    def build(v, pe, depth):
        ids[v] = len(ids)
        rv = rot[v]
        k = rv.index(pe)
        kids = rv[k + 1:] + rv[:k]
        return tuple(build(other(x, v), x, depth + 1) for x in kids)

    tree = build(r, "top", 0)
    s_id = ids[s_vertex]
    p = len(path_of(tree, s_id))
    i = {"root": p, "right": p - j, "left": p + j}[side]
    return DepthTriple(tree, s_id, i)


def phi_cap_trace(tr: DepthTriple) -> list[str]:
    out: list[str] = []
    phi_cap_forward(tr, trace=out)
    return out


def triangular_area_total(m: int) -> int:
    """Total area under all Dyck paths of semilength ``m``, in triangles."""
    total = 0

    def walk(steps_left, height, area2):
        nonlocal total
        if steps_left == 0:
            if height == 0:
                total += area2 // 2
            return
        if height < steps_left:
            walk(steps_left - 1, height + 1, area2 + 2 * height + 1)
        if height > 0:
            walk(steps_left - 1, height - 1, area2 + 2 * height - 1)

    walk(2 * m, 0, 0)
    return total


def check(n: int) -> dict:
    """Counts and round-trip status for the bijection at size ``n``."""
    from .plane import canonical_code, enumerate_A, enumerate_B

    triples = list(enumerate_A(n))
    maps = list(enumerate_B(n))
    images = {}
    forward_ok = True
    for tr in triples:
        m = phi_cap_forward(tr)
        images[canonical_code(m)] = m
        forward_ok &= phi_cap_inverse(m) == tr
    backward_ok = all(phi_cap_forward(phi_cap_inverse(m)) == m for m in maps)
    return {
        "n": n,
        "A": len(triples),
        "B": len(maps),
        "image": len(images),
        "surjective": set(images) == {canonical_code(m) for m in maps},
        "inverse_after_forward": forward_ok,
        "forward_after_inverse": backward_ok,
    }


def iter_pairs(n: int) -> Iterator[tuple[DepthTriple, UnicyclicMap]]:
    from .plane import enumerate_A
    for tr in enumerate_A(n):
        yield tr, phi_cap_forward(tr)
