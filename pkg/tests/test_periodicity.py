from math import comb

import pytest

from ppp import core, periodicity as P, skeleton
from ppp.core import validate_ppp
from ppp.periodicity import AreaSeries

SMALLEST = validate_ppp("NNE", "ENN", 1)


def all_ppps(max_n, cap):
    return [p for n in range(2, max_n + 1) for p in core.enumerate_ppps(n, cap)]


# -- derivation -------------------------------------------------------------------

def test_derive_smallest():
    d = P.derive(SMALLEST)
    assert d == validate_ppp("NNNE", "ENNN", 2)
    assert (d.semi_perimeter, d.area, core.thickness(d)) == (2, 3, 2)
    assert P.derive(d).area == SMALLEST.area + 2 * 1 * 1


def test_derivation_invariants():
    for p in all_ppps(7, 2):
        d = P.derive(p)
        assert d.semi_perimeter == p.semi_perimeter
        assert d.area == p.area + p.width * p.height
        assert core.path_words(d) == core.path_words(p)
        assert skeleton.cyclic_structure(d) == skeleton.cyclic_structure(p)
        assert P.derive(d).area == p.area + 2 * p.width * p.height
        im, imd = skeleton.psi_forward(p), skeleton.psi_forward(d)
        assert imd.tuples == im.tuples and imd.mark == im.mark
        assert imd.k == im.k + im.trunk_width
        assert P.underive(d) == p


def test_derivation_is_a_bijection_between_thickness_layers():
    for n in range(2, 7):
        ppps = list(core.enumerate_ppps(n, 6))
        for k in range(1, 4):
            layer = [p for p in ppps if core.thickness(p) == k]
            images = {P.derive(p) for p in layer}
            assert len(images) == len(layer)
            for p, q in zip(layer, map(P.derive, layer)):
                assert core.thickness(q) == k + skeleton.trunk_width(p)


def test_images_realized_at_k_and_k_plus_l():
    for n in range(2, 7):
        for im in skeleton.enumerate_psi_images(n, 2):
            l = im.trunk_width
            a = skeleton.psi_inverse(im)
            b = skeleton.psi_inverse(skeleton.PsiImage(im.k + l, im.tuples, im.mark))
            assert core.path_words(a) == core.path_words(b)
            assert skeleton.cyclic_structure(a) == skeleton.cyclic_structure(b)
            assert b.area - a.area == a.width * a.height


# -- primitives ---------------------------------------------------------------------

def test_primitive_examples():
    assert P.is_primitive(SMALLEST)
    assert not P.is_primitive(P.derive(SMALLEST))
    with pytest.raises(ValueError):
        P.underive(SMALLEST)


@pytest.mark.parametrize("n, count", [(2, 1), (3, 6), (4, 30), (5, 140), (6, 630), (7, 2772)])
def test_primitive_counts(n, count):
    assert sum(1 for _ in P.enumerate_primitive(n)) == count == P.primitive_count_formula(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_primitives_match_geometric_filter(n):
    geo = sorted((p for p in core.enumerate_ppps(n, n) if P.is_primitive(p)), key=core.Ppp.sort_key)
    assert sorted(P.enumerate_primitive(n), key=core.Ppp.sort_key) == geo


def test_unique_factorization():
    for n in range(2, 7):
        prims = set(P.enumerate_primitive(n))
        for p in core.enumerate_ppps(n, 40, max_area=40):
            q, j = P.factorize(p)
            assert q in prims
            x = q
            for _ in range(j):
                x = P.derive(x)
            assert x == p


@pytest.mark.parametrize("n", range(2, 8))
def test_marked_primitives_double(n):
    assert P.marked_primitive_count(n) == 2 * P.primitive_count_formula(n)


# -- strips -------------------------------------------------------------------------

@pytest.mark.parametrize("n, count", [(2, 1), (3, 4), (4, 15)])
def test_strip_census_small(n, count):
    assert P.strip_census(n) == count


def test_strip_keys_are_rotation_classes():
    for n in range(2, 7):
        ps = list(core.enumerate_ppps(n, 2))
        by_key = {}
        for p in ps:
            by_key.setdefault(P.strip_key(p), set()).add(P.rotation_class(p))
        assert all(len(v) == 1 for v in by_key.values())
        assert len(by_key) == len({P.rotation_class(p) for p in ps})


def test_orbit_sizes_sum_to_counts():
    for n in range(2, 7):
        sizes = P.orbit_sizes(n)
        assert sum(sizes.values()) == core.thickness_one_count(n)
        reps = {P.strip_key(p): p for p in core.enumerate_ppps(n, 1)}
        for key, size in sizes.items():
            p = reps[key]
            assert size == len({P.rotate(p, j) for j in range(p.width)})


def test_rotation_is_periodic():
    for p in all_ppps(5, 2):
        assert P.rotate(p, 0) == p
        assert P.rotate(p, p.width) == p
        assert P.strip_key(P.rotate(p, 1)) == P.strip_key(p)


def test_derivation_commutes_with_rotation():
    for n in range(2, 7):
        for k in (1, 2):
            for key, images in P.derivation_orbits(n, k).items():
                assert len(images) == 1


# -- thin PPPs ----------------------------------------------------------------------

def test_thin_examples():
    assert P.is_thin(SMALLEST)
    for p in all_ppps(7, 3):
        if P.is_thin(p):
            assert core.thickness(p) == 1


def test_thin_counts_and_offset():
    counts = {n: P.thin_count(n) for n in range(2, 8)}
    assert counts == {2: 1, 3: 5, 4: 19, 5: 69, 6: 251, 7: 923}
    assert P.thin_offset({n: counts[n] for n in (4, 5, 6)}) == -1
    for n, c in counts.items():
        assert c == comb(2 * (n - 1), n - 1) - 1


# -- area series and periods -----------------------------------------------------------

def test_lcm_bounds():
    assert P.lcm_bound(4) == 12
    assert P.lcm_bound(5) == 12
    assert P.lcm_bound(6) == 360
    assert P.lcm_bound(7) == 60


def test_series_n2():
    s = P.area_series(2, "ppp")
    assert s.coeffs[:2] == (0, 0)
    assert all(c == 1 for c in s.coeffs[2:])
    rep = P.detect_period(s)
    assert (rep.preperiod, rep.period) == (2, 1)


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("kind", P.KINDS)
def test_series_two_ways(n, kind):
    s = P.area_series(n, kind)
    assert s.cap == P.min_cap(n)
    rep = P.detect_period(s)
    assert rep.lcm_bound % rep.period == 0
    c = s.coeffs
    assert all(c[m + rep.period] == c[m] for m in range(rep.preperiod, s.cap - rep.period + 1))


@pytest.mark.parametrize("n", [5, 7])
def test_prime_marked_period(n):
    assert P.detect_period(P.area_series(n, "marked")).period == 1


def test_frozen_series_n4():
    # q^4 (14 + 16 q + 18 q^2 + ...) then alternating 16, 18 with period 2
    s = P.area_series(4, "marked")
    assert s.coeffs[:9] == (0, 0, 0, 0, 14, 16, 18, 16, 18)


def test_cap_too_small():
    with pytest.raises(P.CapTooSmall):
        P.area_series(4, "ppp", cap=10)


def test_detect_period_trivial():
    rep = P.detect_period(AreaSeries(3, "ppp", tuple([0, 0, 5] + [7] * 40)))
    assert (rep.preperiod, rep.period) == (3, 1)


def test_detect_period_rejects_short_series():
    with pytest.raises(P.NotPeriodicWithinCap):
        P.detect_period(AreaSeries(4, "ppp", tuple(range(30))))


def test_unknown_kind():
    with pytest.raises(ValueError):
        P.series_direct(3, "bogus", 10)
