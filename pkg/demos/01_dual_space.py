"""A poset, its dual space, and the point-image representation.

The dual space of a finite poset P collects every isotone map from P
into the two-element chain 0 < 1. Each map is determined by its one-set,
which is an up-set of P, so the dual space is just the family of up-sets
in disguise. Sending an element p to the set of dual points that map it
to 1 embeds P into that family, and ordering images by inclusion gives
the order of P back.

Run it:

    python3 demos/01_dual_space.py
"""

from biclosure import (
    are_isomorphic,
    build_poset,
    dual_space,
    poset_of_family,
    representation_report,
)


def named(poset, mask):
    inside = [poset.labels[i] for i in range(poset.n) if mask >> i & 1]
    return "{" + ", ".join(inside) + "}"


# ---------------------------------------------------------------------------
# The running example: a four-element diamond, two incomparable middles.

diamond = build_poset(
    ["bot", "x", "y", "top"],
    [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
)
print("poset:", ", ".join(diamond.labels))

star = dual_space(diamond)
print(f"dual space has {star.size} points, one per up-set:")
for i, one_set in enumerate(star.points):
    print(f"  point {i}: one-set {named(diamond, one_set)}")

# ---------------------------------------------------------------------------
# The point-image map. up_image(p) is the set of dual points sending p
# to 1; comparable elements give nested images, incomparable ones do not.

print("\npoint images:")
for p, label in enumerate(diamond.labels):
    points = [i for i in range(star.size) if star.up_image(p) >> i & 1]
    print(f"  {label} -> dual points {points}")

# ---------------------------------------------------------------------------
# representation_report verifies the embedding end to end: isotone,
# injective, order reflecting, and onto the family of sets that are
# closed one way with complement closed the other way.

report = representation_report(diamond, star)
print("\nrepresentation flags:")
for flag in ("isotone", "injective", "order_reflecting", "surjective",
             "isomorphism", "full", "separating"):
    print(f"  {flag}: {getattr(report, flag)}")

# The image family, ordered by inclusion, is the diamond again.
family_poset = poset_of_family(report.family)
iso, _ = are_isomorphic(family_poset, diamond)
print("\nimage family isomorphic to the input:", iso)
