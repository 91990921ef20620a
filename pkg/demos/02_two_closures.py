"""Two closures on one carrier, and the sets closed both ways.

A subspace A of the dual space induces two closure operators. The first
closes X toward the points that agree on where A's members send things
to 1, the second does the same for 0. The operators usually differ, yet
the sets closed under the first whose complement is closed under the
second line up exactly with the elements of the original poset.

This script also shows what breaks when a subspace is too small to be
full, and checks the intersection formulas that compute both closures
from ideals and filters.

Run it:

    python3 demos/02_two_closures.py
"""

from biclosure import (
    build_poset,
    closed_open_family,
    dual_space,
    filter_of,
    ideal_of,
    induced_closures,
    is_full,
    representation_report,
)


def point_set(mask, size):
    return sorted(i for i in range(size) if mask >> i & 1)


vee = build_poset(["a", "b", "c"], [("a", "b"), ("a", "c")])
star = dual_space(vee)
print(f"the vee poset (a below b and c) has {star.size} dual points")

# ---------------------------------------------------------------------------
# Induce the pair of closures and compare their closed families.

c1, c2 = induced_closures(star)
print("\nclosed under the first closure: ",
      [point_set(s, star.size) for s in sorted(c1.closed_family)])
print("closed under the second closure:",
      [point_set(s, star.size) for s in sorted(c2.closed_family)])
print("operators equal:", c1 == c2)

family = closed_open_family(c1, c2)
print(f"\nclosed-open sets, one per poset element ({len(family)} of them):")
for s in sorted(family):
    print("  ", point_set(s, star.size))

# ---------------------------------------------------------------------------
# Both closures satisfy an intersection formula. The first closure of X
# is cut out by the poset elements every member of X sends to 1, the
# second by the elements every member sends to 0.

x = 0b01010  # the dual points with one-sets {b} and {b, c}
filt = filter_of(star, x)
rhs = star.all_mask
for p in range(vee.n):
    if filt >> p & 1:
        rhs &= star.up_image(p)
print("\nclosure of {1, 3} via apply:  ", point_set(c1.apply(x), star.size))
print("closure of {1, 3} via filters:", point_set(rhs, star.size))
assert c1.apply(x) == rhs

ker = ideal_of(star, x)
rhs = star.all_mask
for p in range(vee.n):
    if ker >> p & 1:
        rhs &= star.lo_image(p)
assert c2.apply(x) == rhs
print("the second closure agrees with its ideal formula as well")

# ---------------------------------------------------------------------------
# Fullness is what makes the representation injective. Keep only the
# constant maps and the order is gone: no point separates b from c.

constants = star.restrict(
    (1 << star.index_of(0)) | (1 << star.index_of(star.poset.full))
)
ok, witness = is_full(constants)
print(f"\nconstants only: full={ok}, unseparated pair={witness}")
report = representation_report(vee, constants)
print("injective:", report.injective, "| isomorphism:", report.isomorphism)
