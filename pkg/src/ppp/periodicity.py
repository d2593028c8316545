"""Derivation, primitive PPPs, area series and their ultimate periods, strips.

Derivation stacks one period of cells on every column: each top rises by the
height, the skeleton is unchanged and the intrinsic thickness grows by the
trunk width. A PPP is primitive when its thickness is at most its trunk
width; every PPP is a unique iterated derivation of a primitive one, so

    sum over PPPs of q^area = sum over primitives of q^area / (1 - q^(w h)),

and likewise for marked PPPs and strips. Each summand is periodic from its
own area on with period ``w h``, which bounds the ultimate period by
``lcm{i (n - i)}``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from math import comb, lcm
from typing import Iterator

from . import core, skeleton
from .core import Ppp


class CapTooSmall(ValueError):
    pass


class NotPeriodicWithinCap(RuntimeError):
    pass


KINDS = ("ppp", "marked", "strip")


# ---------------------------------------------------------------------------
# Derivation and primitives
# ---------------------------------------------------------------------------

def derive(p: Ppp) -> Ppp:
    h = p.height
    return core.from_columns(p.bottoms, [t + h for t in p.tops], p.g + h)


def underive(p: Ppp) -> Ppp:
    """Inverse of :func:`derive`; only defined for non-primitive PPPs."""
    if is_primitive(p):
        raise ValueError("a primitive PPP is not a derivation")
    h = p.height
    return core.from_columns(p.bottoms, [t - h for t in p.tops], p.g - h)


def is_primitive(p: Ppp) -> bool:
    cd = core.cycle_data(p)
    return cd.thickness <= cd.trunk_width


def factorize(p: Ppp) -> tuple[Ppp, int]:
    """The primitive ``q`` and the count ``j`` with ``p = derive^j(q)``."""
    j = 0
    while not is_primitive(p):
        p = underive(p)
        j += 1
    return p, j


def primitive_images(n: int) -> Iterator[skeleton.PsiImage]:
    for tuples in skeleton.tuple_lists(n):
        for mark in skeleton.markings(tuples[0]):
            for k in range(1, len(tuples) + 1):
                yield skeleton.PsiImage(k, tuples, mark)


def enumerate_primitive(n: int) -> Iterator[Ppp]:
    for im in primitive_images(n):
        yield skeleton.psi_inverse(im)


def marked_primitive_count(n: int) -> int:
    return sum(core.marking_count(p) for p in enumerate_primitive(n))


def primitive_count_formula(n: int) -> int:
    """``[z^n] z^2 (1 - 4z)^(-3/2)``, i.e. ``(2m + 1) C(2m, m)`` at ``m = n - 2``."""
    if n < 2:
        return 0
    m = n - 2
    return (2 * m + 1) * comb(2 * m, m)


# ---------------------------------------------------------------------------
# Strips
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class StripKey:
    k: int
    code: tuple  # tuple list, as parenthesis words, at its minimal rotation

    def to_dict(self) -> dict:
        return {"k": self.k, "tuples": [list(t) for t in self.code]}


def _min_rotation(seq: tuple) -> tuple:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def strip_key(p: Ppp) -> StripKey:
    im = skeleton.psi_forward(p)
    code = tuple(tuple(skeleton.to_word(t) for t in tp) for tp in im.tuples)
    return StripKey(im.k, _min_rotation(code))


def rotate(p: Ppp, j: int) -> Ppp:
    """The same cylinder polyomino read from cover column ``j`` on."""
    w = p.width
    b0 = core.cover_bottom(p, j)
    b = [core.cover_bottom(p, j + i) - b0 for i in range(w)]
    t = [core.cover_top(p, j + i) - b0 for i in range(w)]
    return core.from_columns(b, t, t[-1] - p.height)


def rotation_class(p: Ppp) -> Ppp:
    """Geometric representative of the strip: the least rotation."""
    return min((rotate(p, j) for j in range(p.width)), key=Ppp.sort_key)


def is_thin(p: Ppp) -> bool:
    """Some column consists of vertex cells only: its top cell and the
    rightmost cells of the rows ending in it."""
    return any(core.cover_top(p, j) == core.cover_bottom(p, j + 1) + 1
               for j in range(p.width))


def thin_count(n: int) -> int:
    return sum(1 for p in core.enumerate_ppps(n, 1) if is_thin(p))


def thin_offset(counts: dict[int, int], search: range = range(-3, 4)) -> int:
    """Offset ``d`` with ``counts[n] = C(2(n + d), n + d) - 1`` for every n."""
    for d in search:
        if all(n + d >= 0 and c == comb(2 * (n + d), n + d) - 1
               for n, c in counts.items()):
            return d
    raise ValueError("no offset fits")


# ---------------------------------------------------------------------------
# Area series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AreaSeries:
    n: int
    kind: str
    coeffs: tuple[int, ...]

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class PeriodReport:
    preperiod: int
    period: int
    lcm_bound: int


def lcm_bound(n: int) -> int:
    return lcm(*(i * (n - i) for i in range(1, n)))


def _primitive_terms(n: int, kind: str) -> list[tuple[int, int, int]]:
    """(area, w h, multiplicity) for each primitive term of the series."""
    prims = list(enumerate_primitive(n))
    if kind == "ppp":
        return [(p.area, p.width * p.height, 1) for p in prims]
    if kind == "marked":
        return [(p.area, p.width * p.height, core.marking_count(p)) for p in prims]
    if kind == "strip":
        reps = {}
        for p in prims:
            reps.setdefault(strip_key(p), p)
        return [(p.area, p.width * p.height, 1) for p in reps.values()]
    raise ValueError(f"unknown kind {kind!r}")


def min_cap(n: int) -> int:
    """Largest primitive area plus two periods of the lcm bound."""
    return max(p.area for p in enumerate_primitive(n)) + 2 * lcm_bound(n)


def series_from_primitives(n: int, kind: str, cap: int) -> list[int]:
    c = [0] * (cap + 1)
    for area, step, mult in _primitive_terms(n, kind):
        for m in range(area, cap + 1, step):
            c[m] += mult
    return c


def series_direct(n: int, kind: str, cap: int, *, jobs: int = 1) -> list[int]:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    c = [0] * (cap + 1)
    # a PPP of thickness k has more than k cells, so the area cap bounds k
    ppps = core.enumerate_ppps(n, cap, max_area=cap, jobs=jobs)
    if kind == "strip":
        for p in {rotation_class(p) for p in ppps}:
            c[p.area] += 1
    else:
        for p in ppps:
            c[p.area] += core.marking_count(p) if kind == "marked" else 1
    return c


def area_series(n: int, kind: str = "ppp", cap: int | None = None, *,
                jobs: int = 1) -> AreaSeries:
    """Area generating polynomial up to ``q^cap``, computed from primitives
    and by direct capped enumeration, which must agree."""
    if n < 2:
        raise ValueError("semi-perimeter must be at least 2")
    need = min_cap(n)
    if cap is None:
        cap = need
    if cap < need:
        raise CapTooSmall(f"cap {cap} below {need} for n={n}")
    a = series_from_primitives(n, kind, cap)
    b = series_direct(n, kind, cap, jobs=jobs)
    if a != b:
        bad = next(m for m in range(cap + 1) if a[m] != b[m])
        raise AssertionError(f"series disagree at q^{bad}: {a[bad]} vs {b[bad]}")
    return AreaSeries(n, kind, tuple(a))


def detect_period(s: AreaSeries, bound: int | None = None) -> PeriodReport:
    """Least period ``p`` and then least preperiod ``N`` of the coefficients.

    A candidate is accepted only if it is witnessed on at least ``L + p``
    consecutive coefficients (``L`` the lcm bound): any shorter agreement
    could be an accident of the truncation.
    """
    c, M = s.coeffs, s.cap
    L = lcm_bound(s.n) if bound is None else bound
    for p in range(1, M + 1):
        N = M - p + 1
        while N > 0 and c[N - 1 + p] == c[N - 1]:
            N -= 1
        if M - N + 1 >= L + p:
            if L % p:
                raise AssertionError(f"period {p} does not divide {L}")
            return PeriodReport(N, p, L)
    raise NotPeriodicWithinCap(f"no period witnessed up to q^{M}")


def strip_census(n: int, k: int = 1) -> int:
    """Number of strips of thickness ``k`` (distinct strip keys)."""
    return len({strip_key(p) for p in core.enumerate_ppps(n, k) if core.thickness(p) == k})


def orbit_sizes(n: int, k: int = 1) -> Counter:
    keys = Counter(strip_key(p) for p in core.enumerate_ppps(n, k) if core.thickness(p) == k)
    return keys


def derivation_orbits(n: int, k: int) -> dict:
    """Strip keys at thickness ``k`` mapped to the keys of their derivations."""
    out = defaultdict(set)
    for p in core.enumerate_ppps(n, k):
        if core.thickness(p) == k:
            out[strip_key(p)].add(strip_key(derive(p)))
    return dict(out)
