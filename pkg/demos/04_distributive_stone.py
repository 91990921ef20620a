"""Distributive lattices get topologies; Boolean ones get Stone spaces.

For a lattice the right dual points are the two-valued lattice
morphisms. That smaller space is full and separating exactly when the
lattice is distributive, and then both induced closures distribute over
union, so the representation is honestly topological. Specializing
further, dropping the two constant maps over a Boolean lattice leaves
one point per maximal ideal; the clopen algebra of the resulting space
is the lattice back again.

Run it:

    python3 demos/04_distributive_stone.py
"""

from biclosure import (
    NotDistributive,
    boolean_algebra,
    build_poset,
    chain,
    dual_space,
    is_full,
    is_separating,
    lattice_dual,
    represent_distributive,
    stone,
)


def named(poset, mask):
    inside = [poset.labels[i] for i in range(poset.n) if mask >> i & 1]
    return "{" + ", ".join(inside) + "}"


# ---------------------------------------------------------------------------
# A distributive example: the divisors of 12 under divisibility.

div12 = build_poset(
    ["1", "2", "3", "4", "6", "12"],
    [("1", "2"), ("1", "3"), ("2", "4"), ("2", "6"), ("3", "6"),
     ("4", "12"), ("6", "12")],
)
print("divisors of 12: distributive =", div12.is_distributive())

morphisms, family, report = represent_distributive(div12)
print(f"morphism dual: {morphisms.size} points "
      f"(the unrestricted dual has {dual_space(div12).size}; lattice maps are few)")
print("both closures topological:", report.topological)
print("order isomorphism onto the closed-open family:", report.isomorphism)

# ---------------------------------------------------------------------------
# The diamond M3 is the classic non-distributive lattice. Its morphism
# dual collapses to the two constants, which cannot tell atoms apart.

m3 = build_poset(
    list("0abc1"),
    [("0", x) for x in "abc"] + [(x, "1") for x in "abc"],
)
inner = lattice_dual(m3)
print(f"\nM3 morphism dual: {inner.size} points, "
      f"full={is_full(inner)[0]}, separating={is_separating(inner)[0]}")
try:
    represent_distributive(m3)
except NotDistributive as exc:
    print("represent_distributive(M3):", exc)

# ---------------------------------------------------------------------------
# Stone spaces for the small Boolean lattices. Three atoms, three
# points, eight clopen sets; each kernel is a maximal ideal.

b8 = boolean_algebra(3)
space = stone(b8)
print(f"\neight-element Boolean lattice: {space.subspace.size} points, "
      f"{len(space.clopen)} clopen sets")
print("closure exact and topological:",
      space.closure.is_exact(), space.closure.is_topological())
for i, kernel in enumerate(space.kernels):
    print(f"  kernel of point {i}: {named(b8, kernel)}")

# The trivial cases round out the picture.
for atoms in (1, 2):
    s = stone(boolean_algebra(atoms))
    print(f"{2 ** atoms}-element lattice: {s.subspace.size} point(s), "
          f"{len(s.clopen)} clopen sets")

# Chains above length two are distributive but never Boolean, so the
# Stone construction refuses them.
try:
    stone(chain(3))
except Exception as exc:
    print("stone(three-chain):", exc)
