"""Closure operators generated by subset bases.

A base is a family of subsets of a finite carrier; the closed sets are
all intersections of base members, with the empty intersection giving
the full carrier. So the full carrier is always closed, the closed sets
form a family closed under arbitrary intersection, and the closure of X
is the intersection of the base members containing X.

A subspace A of a dual space induces two such operators on A itself:
one generated by the up-images {x in A : x(p) = 1} over all p, one by
their complements. Most of the questions this package answers reduce to
how those two operators relate.
"""

from __future__ import annotations

from functools import cached_property

from .errors import CarrierMismatch, MemberOutOfRange
from .poset import SubsetFamily

EAGER_CARRIER_LIMIT = 20


class ClosureOperator:
    """Closure on {0..m-1} whose closed sets are intersections of a base."""

    def __init__(self, m: int, base):
        if not isinstance(base, SubsetFamily):
            base = SubsetFamily(m, base)
        elif base.m != m:
            raise CarrierMismatch("base family lives on a different carrier")
        self.m = m
        self.full = (1 << m) - 1
        self.base = base
        # materializing the closed family is cheap at desk scale; above the
        # limit it stays lazy and only predicates that need it will pay
        if m <= EAGER_CARRIER_LIMIT:
            self.closed_family

    @cached_property
    def closed_family(self) -> SubsetFamily:
        family: set = {self.full}
        for b in self.base:
            family |= {b & c for c in family}
        return SubsetFamily(self.m, family)

    def apply(self, x: int) -> int:
        """Smallest closed superset of x."""
        if x & ~self.full:
            raise MemberOutOfRange("argument has bits outside the carrier")
        out = self.full
        for b in self.base:
            if x & ~b == 0:
                out &= b
        return out

    def is_closed(self, x: int) -> bool:
        return self.apply(x) == x

    def is_exact(self) -> bool:
        """Is the empty set closed?"""
        return self.apply(0) == 0

    def is_topological(self) -> bool:
        """Is the union of closed sets closed?

        Equivalent to apply(X | Y) == apply(X) | apply(Y) for all X, Y:
        unions of closures are closed one way, and a union-closed family
        makes apply(X) | apply(Y) the smallest closed set over X | Y.
        """
        members = self.closed_family.members
        family = set(members)
        return all(
            (a | b) in family
            for i, a in enumerate(members)
            for b in members[i + 1 :]
        )

    def __eq__(self, other):
        return (
            isinstance(other, ClosureOperator)
            and self.m == other.m
            and self.closed_family == other.closed_family
        )

    def __hash__(self):
        return hash((self.m, self.closed_family))

    def __repr__(self):
        return f"ClosureOperator(m={self.m}, base of {len(self.base)})"


def closure_from_base(m: int, base) -> ClosureOperator:
    return ClosureOperator(m, base)


def clopen_sets(c: ClosureOperator) -> SubsetFamily:
    """Members closed together with their complement."""
    family = set(c.closed_family.members)
    return SubsetFamily(c.m, (x for x in family if (c.full ^ x) in family))


def closed_open_family(c1: ClosureOperator, c2: ClosureOperator) -> SubsetFamily:
    """Sets closed under the first operator whose complement is closed
    under the second."""
    if c1.m != c2.m:
        raise CarrierMismatch("operators live on different carriers")
    closed2 = set(c2.closed_family.members)
    return SubsetFamily(
        c1.m,
        (x for x in c1.closed_family if (c1.full ^ x) in closed2),
    )


def induced_closures(subspace) -> tuple:
    """The two closures a subspace carries: one generated by the up-images
    of the base elements, one by their complements."""
    m = subspace.size
    n = subspace.poset.n
    ups = [subspace.up_image(p) for p in range(n)]
    los = [subspace.lo_image(p) for p in range(n)]
    return ClosureOperator(m, ups), ClosureOperator(m, los)


def closures_equal(c1: ClosureOperator, c2: ClosureOperator) -> bool:
    if c1.m != c2.m:
        raise CarrierMismatch("operators live on different carriers")
    return c1.closed_family == c2.closed_family
