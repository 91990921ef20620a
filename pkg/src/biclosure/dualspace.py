"""Dual spaces of finite posets.

A dual point of P is an isotone map from P into the two-element chain,
stored as the bitmask of its one-set; isotonicity makes the one-set an
up-set of P. A Subspace is any deduplicated set of dual points over a
fixed base poset, in canonical (ascending mask) order.

Ideals and filters here are taken relative to a subspace A: an A-ideal
is an intersection of kernels x^-1(0) over a nonempty family of points
x in A, an A-filter the same with co-kernels x^-1(1). The full carrier
is not automatically a member; it shows up exactly when A contains the
right constant map. ``ideal_of``/``filter_of`` of the empty index set
return the full carrier as the empty intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import NamedTuple, Optional

from .bitops import bits
from .errors import BoundExceeded, InvalidOrthoMap, NotALattice, NotBounded
from .poset import OrthoMap, Poset

DUAL_POINT_CAP = 1 << 20


class Subspace:
    """An indexed set of dual points of a base poset."""

    def __init__(self, poset: Poset, one_sets):
        self.poset = poset
        seen = set()
        for s in one_sets:
            if s & ~poset.full:
                raise ValueError("one-set has bits outside the carrier")
            for i in bits(s):
                if poset.up[i] & ~s:
                    raise ValueError("one-set of a dual point must be an up-set")
            seen.add(s)
        self.points = tuple(sorted(seen))
        self.size = len(self.points)
        self.all_mask = (1 << self.size) - 1

    @cached_property
    def _index(self):
        return {s: i for i, s in enumerate(self.points)}

    def index_of(self, one_set: int) -> int:
        return self._index[one_set]

    @cached_property
    def _up_images(self):
        images = [0] * self.poset.n
        for i, s in enumerate(self.points):
            for p in bits(s):
                images[p] |= 1 << i
        return tuple(images)

    def up_image(self, p: int) -> int:
        """Indices of the points whose one-set contains p."""
        return self._up_images[p]

    def lo_image(self, p: int) -> int:
        """Indices of the points vanishing at p."""
        return self.all_mask ^ self._up_images[p]

    def kernel(self, i: int) -> int:
        """The zero-set of point i, as a subset of the base carrier."""
        return self.poset.full ^ self.points[i]

    def cokernel(self, i: int) -> int:
        return self.points[i]

    def restrict(self, index_mask: int) -> "Subspace":
        return Subspace(self.poset, (self.points[i] for i in bits(index_mask)))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.poset == other.poset
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.poset, self.points))

    def __repr__(self):
        return f"Subspace({self.size} points over {self.poset.n} elements)"

    def to_json(self) -> list:
        labels = self.poset.labels
        return [sorted(labels[p] for p in bits(s)) for s in self.points]


def _upsets(poset: Poset, cap: int) -> list:
    # maximal elements first: everything above e is decided when e is reached
    order = sorted(
        range(poset.n),
        key=lambda i: bin(poset.down[i]).count("1"),
        reverse=True,
    )
    out = []

    def grow(k, acc):
        if k == poset.n:
            out.append(acc)
            if len(out) > cap:
                raise BoundExceeded(
                    f"up-set count exceeds the configured cap {cap}"
                )
            return
        e = order[k]
        grow(k + 1, acc)
        if poset.up[e] & ~(acc | 1 << e) == 0:
            grow(k + 1, acc | 1 << e)

    grow(0, 0)
    return out


def dual_space(poset: Poset, cap: int = DUAL_POINT_CAP) -> Subspace:
    """Every dual point of P, i.e. one point per up-set of P."""
    return Subspace(poset, _upsets(poset, cap))


def orthodual_space(poset: Poset, ortho: OrthoMap, cap: int = DUAL_POINT_CAP) -> Subspace:
    """Dual points that send complementary elements to complementary values."""
    if ortho.poset != poset:
        raise InvalidOrthoMap("orthocomplementation belongs to a different poset")
    keep = [
        s for s in _upsets(poset, cap) if ortho.image_mask(s) == poset.full ^ s
    ]
    return Subspace(poset, keep)


def lattice_dual(poset: Poset, cap: int = DUAL_POINT_CAP) -> Subspace:
    """Dual points preserving meets and joins; includes both constants."""
    if not poset.is_lattice():
        raise NotALattice("meet/join dual requires a lattice")
    mt, jt = poset._meet_table, poset._join_table
    n = poset.n
    keep = []
    for s in _upsets(poset, cap):
        ok = True
        for p in range(n):
            vp = s >> p & 1
            for q in range(p, n):
                vq = s >> q & 1
                if s >> mt[p][q] & 1 != (vp & vq) or s >> jt[p][q] & 1 != (vp | vq):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.append(s)
    return Subspace(poset, keep)


# --- ideals and filters relative to a subspace -------------------------------


@dataclass(frozen=True)
class IdealFamily:
    """All A-ideals (or A-filters) of a subspace A, in sorted mask order."""

    subspace: Subspace
    role: str  # "ideal" or "filter"
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


def _intersection_closure(generators) -> tuple:
    family: set = set()
    for g in generators:
        family |= {g} | {g & m for m in family}
    return tuple(sorted(family))


def ideals_wrt(subspace: Subspace) -> IdealFamily:
    kernels = [subspace.kernel(i) for i in range(subspace.size)]
    return IdealFamily(subspace, "ideal", _intersection_closure(kernels))


def filters_wrt(subspace: Subspace) -> IdealFamily:
    return IdealFamily(
        subspace, "filter", _intersection_closure(subspace.points)
    )


def ideal_of(subspace: Subspace, point_indices: int) -> int:
    """Intersection of the kernels of the chosen points; full carrier for none."""
    out = subspace.poset.full
    for i in bits(point_indices):
        out &= subspace.kernel(i)
    return out


def filter_of(subspace: Subspace, point_indices: int) -> int:
    out = subspace.poset.full
    for i in bits(point_indices):
        out &= subspace.points[i]
    return out


class Hull(NamedTuple):
    """Result of generating an ideal/filter from a subset of the carrier.

    ``found`` is False when no family member contains the subset; the
    hull then degenerates to the full carrier by convention.
    """

    subset: int
    found: bool


def generated_ideal(
    subspace: Subspace, subset: int, family: Optional[IdealFamily] = None
) -> Hull:
    """Smallest A-ideal containing ``subset``, if any contains it at all."""
    members = (family or ideals_wrt(subspace)).members
    holding = [m for m in members if subset & ~m == 0]
    if not holding:
        return Hull(subspace.poset.full, False)
    return Hull(reduce(lambda a, b: a & b, holding), True)


def generated_filter(
    subspace: Subspace, subset: int, family: Optional[IdealFamily] = None
) -> Hull:
    members = (family or filters_wrt(subspace)).members
    holding = [m for m in members if subset & ~m == 0]
    if not holding:
        return Hull(subspace.poset.full, False)
    return Hull(reduce(lambda a, b: a & b, holding), True)


# --- separation properties ----------------------------------------------------


def is_full(subspace: Subspace):
    """Does some point witness every non-relation p <= q?

    Returns (answer, counterexample pair or None).
    """
    poset = subspace.poset
    avail = subspace.all_mask
    for p in range(poset.n):
        for q in range(poset.n):
            if not poset.leq(p, q):
                if not subspace.up_image(p) & ~subspace.up_image(q) & avail:
                    return False, (p, q)
    return True, None


def _separating_points(points, carrier_full):
    kernels = [carrier_full ^ s for s in points]
    ideals = _intersection_closure(kernels)
    filters = _intersection_closure(points)
    for ideal in ideals:
        for filt in filters:
            if ideal & filt:
                continue
            for s in points:
                if s & ideal == 0 and filt & ~s == 0:
                    break
            else:
                return False, (ideal, filt)
    return True, None


def is_separating(subspace: Subspace):
    """Is every disjoint A-ideal/A-filter pair separated by a point of A?

    Returns (answer, counterexample (ideal, filter) masks or None).
    """
    return _separating_points(subspace.points, subspace.poset.full)


def remove_constants(subspace: Subspace) -> Subspace:
    """Drop the two constant maps; only sensible over a bounded base."""
    poset = subspace.poset
    if not poset.is_bounded():
        raise NotBounded("constant removal requires a bounded base poset")
    keep = [s for s in subspace.points if s != 0 and s != poset.full]
    return Subspace(poset, keep)
