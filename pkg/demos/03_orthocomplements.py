"""Orthocomplementations as set complements, and how to find them all.

On a bounded poset an orthocomplementation is an involutive order-
reversing map sending each element and its image to meet 0 and join 1.
Restricting the dual space to the maps compatible with one (x after the
complementation equals 1 minus x) produces a subspace where the two
induced closures coincide and the complementation becomes literal set
complementation on point images.

Going the other way, the subspaces that are full, separating, and close
the same way in both directions are exactly the shadows of
orthocomplementations: the maximal ones correspond to them one to one.

Run it:

    python3 demos/03_orthocomplements.py
"""

from biclosure import (
    NotBounded,
    build_poset,
    find_orthocomplementations,
    induced_orthocomplementation,
    maximal_subspaces,
    ortho_correspondence,
    represent_orthoposet,
    selfdual_subspaces,
)

m4 = build_poset(
    list("0abcd1"),
    [("0", x) for x in "abcd"] + [(x, "1") for x in "abcd"],
)

# ---------------------------------------------------------------------------
# Four incomparable middles can be paired up in three ways.

orthos = find_orthocomplementations(m4)
print(f"orthocomplementations of the four-atom bundle: {len(orthos)}")
for f in orthos:
    pairs = sorted((a, b) for a, b in f.to_json().items() if a < b)
    print("  middles swapped as", pairs)

# ---------------------------------------------------------------------------
# Represent one of them. The clopen family mirrors the poset and the
# complementation acts as set complement on images.

f = orthos[0]
space, report = represent_orthoposet(m4, f)
print(f"\northodual subspace size: {space.subspace.size}")
print(f"clopen sets: {len(space.clopen)}")
print("closures coincide and represent:", report.closures_coincide,
      report.isomorphism)
for p, label in enumerate(m4.labels):
    image = space.subspace.up_image(p)
    partner = space.subspace.up_image(f(p))
    assert partner == space.subspace.all_mask ^ image
print("image of f(p) is the set complement of the image of p: checked")

# ---------------------------------------------------------------------------
# The sweep direction. All subspaces of the dual space that are full,
# separating, and induce a single closure; the maximal ones biject with
# the orthocomplementations. M4's dual space has 18 points, so lift the
# sweep cap above its default.

spaces = selfdual_subspaces(m4, cap=18)
maxima = maximal_subspaces(spaces)
print(f"\nqualifying subspaces: {len(spaces)}, maximal: {len(maxima)}")

matched, summary = ortho_correspondence(m4, cap=18)
print("bijection with orthocomplementations verified:", matched)
print("summary:", summary)

g = induced_orthocomplementation(maxima[0])
print("complementation recovered from a maximal subspace:",
      sorted(g.to_json().items()))

# ---------------------------------------------------------------------------
# A caveat worth knowing. Unbounded posets can carry qualifying
# subspaces while admitting no orthocomplementation at all, so the
# correspondence refuses to run there.

vee = build_poset(["a", "b", "c"], [("a", "b"), ("a", "c")])
print(f"\nvee: qualifying subspaces {len(selfdual_subspaces(vee))}, "
      f"orthocomplementations {len(find_orthocomplementations(vee))}")
try:
    ortho_correspondence(vee)
except NotBounded as exc:
    print("correspondence on the vee:", exc)
