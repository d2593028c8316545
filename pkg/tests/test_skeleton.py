import json
from collections import Counter
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ppp import core, periodicity, plane, skeleton
from ppp.core import validate_ppp
from ppp.skeleton import PsiImage, ROOTS

SMALLEST = validate_ppp("NNE", "ENN", 1)
LEAF4 = ((), (), (), ())


def trunk_ppp(k, l):
    return validate_ppp("N" * k + "NE" * l, "EN" * l + "N" * k, k)


def all_ppps(max_n, cap):
    return [p for n in range(2, max_n + 1) for p in core.enumerate_ppps(n, cap)]


ALL7 = all_ppps(7, 3)


# -- phi ----------------------------------------------------------------------

def test_phi_smallest():
    sk = skeleton.phi(SMALLEST)
    assert sk.cycles == ((("c", 0), ("r", 0)),)
    assert sk.vertex_count == 2


def test_phi_counts():
    for p in ALL7:
        sk = skeleton.phi(p)
        assert sk.vertex_count == p.semi_perimeter
        assert sk.black_count == p.width and sk.white_count == p.height
        lengths = {len(c) for c in sk.cycles}
        assert len(lengths) == 1 and lengths.pop() % 2 == 0


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("l", range(1, 5))
def test_trunk_skeleton_is_cycles(k, l):
    sk = skeleton.phi(trunk_ppp(k, l))
    assert sk.on_cycle() == set(sk.parent)
    assert len(sk.cycles) == gcd(k, l)
    assert {len(c) for c in sk.cycles} == {2 * l // gcd(k, l)}


@pytest.mark.parametrize("n", range(2, 8))
def test_thickness_one_skeletons_are_B(n):
    codes = [plane.canonical_code(skeleton.to_unicyclic_map(skeleton.phi(p)))
             for p in core.enumerate_ppps(n, 1)]
    assert len(set(codes)) == len(codes)
    assert set(codes) == {plane.canonical_code(m) for m in plane.enumerate_B(n)}


# -- trunk and thickness ---------------------------------------------------------

def test_trunk_examples():
    assert skeleton.trunk(SMALLEST) == SMALLEST
    for k in range(1, 4):
        for l in range(1, 4):
            assert skeleton.trunk(trunk_ppp(k, l)) == trunk_ppp(k, l)


def test_sp3_trunks():
    ps = list(core.enumerate_ppps(3, 1))
    assert len(ps) == 6
    assert all(skeleton.trunk(p) == SMALLEST for p in ps)


def test_trunk_is_idempotent_normal_form():
    for p in ALL7:
        t = skeleton.trunk(p)
        assert skeleton.trunk(t) == t
        k, l = skeleton.trunk_params(p)
        assert t == trunk_ppp(k, l)
        assert skeleton.intrinsic_thickness(p) == core.thickness(p) == k
        assert skeleton.trunk_width(p) == l


def test_thickness_under_derivation():
    for p in all_ppps(6, 2):
        d = periodicity.derive(p)
        assert skeleton.intrinsic_thickness(d) == skeleton.intrinsic_thickness(p) + skeleton.trunk_width(p)


# -- psi -------------------------------------------------------------------------

def test_psi_smallest():
    im = skeleton.psi_forward(SMALLEST)
    assert im == PsiImage(1, (LEAF4,), ROOTS)
    assert skeleton.psi_inverse(im) == SMALLEST


def test_psi_staircase():
    p = skeleton.psi_inverse(PsiImage(2, (LEAF4, LEAF4), ROOTS))
    assert p == trunk_ppp(2, 2)
    assert p.semi_perimeter == 4 and core.thickness(p) == 2


def test_sp3_census():
    ims = [skeleton.psi_forward(p) for p in core.enumerate_ppps(3, 1)]
    tuples = Counter(im.tuples[0] for im in ims)
    assert len(tuples) == 4
    for tp, count in tuples.items():
        assert sorted(plane.size(t) for t in tp) == [1, 1, 1, 2]
        assert count == len(skeleton.markings(tp))
    assert sum(tuples.values()) == 6


def test_psi_round_trip_exhaustive():
    for p in ALL7:
        im = skeleton.psi_forward(p)
        assert im.k == core.thickness(p)
        assert im.semi_perimeter == p.semi_perimeter
        assert sum(sum(plane.size(t) for t in tp) for tp in im.tuples) - 2 * im.trunk_width \
            == p.semi_perimeter
        assert skeleton.psi_inverse(im) == p


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_images_are_bijective(n):
    ims = list(skeleton.enumerate_psi_images(n, 3))
    ps = [skeleton.psi_inverse(im) for im in ims]
    assert len(set(ps)) == len(ps)
    assert set(ps) == set(core.enumerate_ppps(n, 3))
    for im, p in zip(ims, ps):
        assert skeleton.psi_forward(p) == im


def test_enumerate_via_psi_examples():
    assert len(list(skeleton.enumerate_via_psi(3, 1))) == 6
    two = sorted(skeleton.enumerate_via_psi(4, 2), key=core.Ppp.sort_key)
    assert two == list(core.enumerate_ppps(4, 2))
    tower = list(skeleton.enumerate_via_psi(2, 5))
    assert [core.thickness(p) for p in tower] == [1, 2, 3, 4, 5]


def test_psi_json():
    for p in all_ppps(5, 2):
        im = skeleton.psi_forward(p)
        d = json.loads(json.dumps(im.to_dict()))
        assert set(d) == {"k", "tuples", "mark"}
        assert d["mark"] == "roots" or d["mark"][0] == 0
        assert PsiImage.from_dict(d) == im


def test_psi_errors():
    with pytest.raises(skeleton.EmptyTupleList):
        PsiImage(1, (), ROOTS)
    cherry = (((),), (), (), ())  # one white child under the first black root
    with pytest.raises(skeleton.MalformedMarking):
        PsiImage(1, (cherry,), 1)  # index 1 is the white child
    with pytest.raises(skeleton.MalformedMarking):
        PsiImage(1, (cherry,), 0)  # a root, not the two-roots marking
    with pytest.raises(skeleton.MalformedMarking):
        PsiImage(1, (cherry,), 99)
    with pytest.raises(skeleton.MalformedMarking):
        PsiImage.from_dict({"k": 1, "tuples": [["()"] * 4, ["()"] * 4], "mark": [1, 0]})
    white_tree = ((), (), ((),), ())  # a black child under the inner white root
    im = PsiImage(1, (white_tree,), 3)
    assert skeleton.psi_forward(skeleton.psi_inverse(im)) == im


def test_markings_count_black_vertices():
    for n in range(2, 6):
        for tuples in skeleton.tuple_lists(n):
            tp = tuples[0]
            blacks = sum(1 for ti, tree in enumerate(tp)
                         for _, d, path in plane.preorder(tree)
                         if path and (ti < 2) == (d % 2 == 0))
            assert len(skeleton.markings(tp)) == blacks + 1


def test_tuple_weights():
    # 4-tuples of trees by weight: coefficients of A(z)^4 / z^2
    assert [len(skeleton.four_tuples(w)) for w in range(2, 7)] == [1, 4, 14, 48, 165]


# -- cyclic structure ---------------------------------------------------------------

def test_cyclic_structure_smallest():
    cs = skeleton.cyclic_structure(SMALLEST)
    assert cs.labels == ((1,), (1,))


def test_cyclic_structure_invariants():
    for p in all_ppps(6, 2):
        cs = skeleton.cyclic_structure(p)
        assert cs == skeleton.cyclic_structure(periodicity.derive(p))
        assert cs == skeleton.cyclic_structure(skeleton.psi_inverse(skeleton.psi_forward(p)))
        assert sorted(cs.parent) == list(range(cs.trunk_width))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_images_round_trip(data):
    n = data.draw(st.integers(2, 9))
    lists = list(skeleton.tuple_lists(n)) if n <= 6 else None
    if lists is None:
        # build a random list of tuples of total weight n
        tuples, left = [], n
        while left:
            w = data.draw(st.integers(2, left)) if left >= 4 else left
            if left - w == 1:
                w = left
            tuples.append(data.draw(st.sampled_from(skeleton.four_tuples(w))))
            left -= w
        tuples = tuple(tuples)
    else:
        tuples = data.draw(st.sampled_from(lists))
    mark = data.draw(st.sampled_from(skeleton.markings(tuples[0])))
    k = data.draw(st.integers(1, 4))
    im = PsiImage(k, tuples, mark)
    p = skeleton.psi_inverse(im)
    assert p.semi_perimeter == n
    assert skeleton.psi_forward(p) == im
