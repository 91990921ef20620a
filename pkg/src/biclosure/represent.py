"""The representation engine.

Every poset P embeds into the closed-open family of its dual space: send
p to the set of dual points taking the value 1 at p. When the subspace
used is full and separating, that map is an order isomorphism. Special
subspaces specialize the picture: the orthodual of an orthocomplemented
poset carries a single closure and a clopen representation, the morphism
dual of a distributive lattice carries two topological closures, and for
a Boolean lattice the constant-free morphism dual is a point space in
the classical sense.

This module computes the map, verifies all of the above mechanically on
concrete instances, enumerates the subspaces that induce
orthocomplementations, and packages everything as reports with
machine-readable witnesses.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bitops import bits
from .closure import (
    ClosureOperator,
    clopen_sets,
    closed_open_family,
    closures_equal,
    induced_closures,
)
from .dualspace import (
    DUAL_POINT_CAP,
    Subspace,
    _separating_points,
    dual_space,
    filter_of,
    filters_wrt,
    generated_filter,
    generated_ideal,
    ideal_of,
    ideals_wrt,
    is_full,
    is_separating,
    lattice_dual,
    orthodual_space,
    remove_constants,
)
from .errors import (
    BoundExceeded,
    NotBoolean,
    NotBounded,
    NotDistributive,
    NotSelfdual,
)
from .poset import (
    MAX_CATALOG_N,
    OrthoMap,
    Poset,
    SubsetFamily,
    enumerate_posets,
    find_orthocomplementations,
    poset_to_json,
)

SWEEP_CAP = 14


def up_image(subspace: Subspace, p: int) -> int:
    """The canonical image of element p: all points of A that are 1 at p."""
    return subspace.up_image(p)


# --- representation reports ---------------------------------------------------


@dataclass(frozen=True)
class RepresentationReport:
    """Everything worth knowing about the point-image map on one subspace."""

    subspace: Subspace
    sigma_table: tuple
    family: SubsetFamily
    isotone: bool
    injective: bool
    into: bool
    surjective: bool
    order_reflecting: bool
    isomorphism: bool
    full: bool
    separating: bool
    consistent: bool
    closures_coincide: bool
    exact: tuple
    topological: tuple
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        labels = self.subspace.poset.labels
        return {
            "points": self.subspace.to_json(),
            "sigma": {
                labels[p]: sorted(bits(img))
                for p, img in enumerate(self.sigma_table)
            },
            "family": [sorted(bits(x)) for x in self.family],
            "flags": {
                "isotone": self.isotone,
                "injective": self.injective,
                "into": self.into,
                "surjective": self.surjective,
                "order_reflecting": self.order_reflecting,
                "isomorphism": self.isomorphism,
                "full": self.full,
                "separating": self.separating,
                "consistent": self.consistent,
                "closures_coincide": self.closures_coincide,
                "exact": list(self.exact),
                "topological": list(self.topological),
            },
            "witnesses": self.witnesses,
        }


def representation_report(poset: Poset, subspace: Subspace) -> RepresentationReport:
    """Check the point-image map p -> {x in A : x(p) = 1} on one subspace.

    The isomorphism verdict is decided directly (isotone, injective, into
    and onto the closed-open family, order reflecting); the full and
    separating flags are computed independently so callers can confirm
    the expected implications rather than assume them.
    """
    n = poset.n
    table = tuple(subspace.up_image(p) for p in range(n))
    c1, c2 = induced_closures(subspace)
    family = closed_open_family(c1, c2)
    witnesses: dict = {}

    isotone = True
    for p in range(n):
        for q in bits(poset.up[p]):
            if table[p] & ~table[q]:
                isotone = False
                witnesses.setdefault("isotone", (poset.labels[p], poset.labels[q]))

    seen: dict = {}
    injective = True
    for p in range(n):
        if table[p] in seen:
            injective = False
            witnesses.setdefault(
                "injective", (poset.labels[seen[table[p]]], poset.labels[p])
            )
            break
        seen[table[p]] = p

    into = all(x in family for x in table)
    if not into:
        bad = next(x for x in table if x not in family)
        witnesses["into"] = sorted(bits(bad))

    image = set(table)
    missing = next((x for x in family if x not in image), None)
    surjective = missing is None
    if missing is not None:
        witnesses["surjective"] = sorted(bits(missing))

    order_reflecting = True
    for p in range(n):
        for q in range(n):
            if table[p] & ~table[q] == 0 and not poset.leq(p, q):
                order_reflecting = False
                witnesses.setdefault(
                    "order_reflecting", (poset.labels[p], poset.labels[q])
                )

    isomorphism = isotone and injective and into and surjective and order_reflecting

    full_ok, full_wit = is_full(subspace)
    sep_ok, sep_wit = is_separating(subspace)
    if full_wit is not None:
        witnesses["full"] = (poset.labels[full_wit[0]], poset.labels[full_wit[1]])
    if sep_wit is not None:
        witnesses["separating"] = [
            sorted(poset.labels[i] for i in bits(sep_wit[0])),
            sorted(poset.labels[i] for i in bits(sep_wit[1])),
        ]
    # Separation forces every closed-open set onto a point image EXCEPT
    # possibly the empty set and A itself: ideal families are generated
    # by nonempty point families, so the argument pinning B to an image
    # needs B and its complement both nonempty. Both gaps are realized
    # (two incomparable one-point images over the 2-antichain), so the
    # cross-check must not demand more.
    missable = {0, subspace.all_mask}
    covered = all(x in image for x in family if x not in missable)
    consistent = (not full_ok or injective) and (not sep_ok or covered)

    return RepresentationReport(
        subspace=subspace,
        sigma_table=table,
        family=family,
        isotone=isotone,
        injective=injective,
        into=into,
        surjective=surjective,
        order_reflecting=order_reflecting,
        isomorphism=isomorphism,
        full=full_ok,
        separating=sep_ok,
        consistent=consistent,
        closures_coincide=closures_equal(c1, c2),
        exact=(c1.is_exact(), c2.is_exact()),
        topological=(c1.is_topological(), c2.is_topological()),
        witnesses=witnesses,
    )


def represent(poset: Poset, dual_cap: int = DUAL_POINT_CAP):
    """Represent P inside the closed-open family of its full dual space.

    Returns (subspace, family, report). The isomorphism holds for every
    finite poset, so a failure here is a bug and raises RuntimeError.
    """
    star = dual_space(poset, dual_cap)
    report = representation_report(poset, star)
    if not report.isomorphism:
        raise RuntimeError("representation over the full dual space failed")
    return star, report.family, report


# --- specialized representations ----------------------------------------------


@dataclass(frozen=True)
class ClosureSpace:
    """A subspace carrying one closure, with its clopen family."""

    subspace: Subspace
    closure: ClosureOperator
    clopen: SubsetFamily


@dataclass(frozen=True)
class StoneSpace:
    """A point space for a Boolean lattice: constant-free morphism dual,
    its (single) closure, the clopen algebra, and one kernel per point."""

    subspace: Subspace
    closure: ClosureOperator
    clopen: SubsetFamily
    kernels: tuple


def represent_orthoposet(poset: Poset, ortho: OrthoMap):
    """Clopen representation over the orthodual of an orthocomplementation.

    The two induced closures coincide, the clopen family of the common
    closure recovers the poset, and the orthocomplementation turns into
    set complementation. All three facts are verified; a failure is a
    bug and raises RuntimeError.
    """
    space = orthodual_space(poset, ortho)
    c1, c2 = induced_closures(space)
    if not closures_equal(c1, c2):
        raise RuntimeError("orthodual closures differ")
    report = representation_report(poset, space)
    if not report.isomorphism:
        raise RuntimeError("orthodual representation failed")
    for p in range(poset.n):
        if space.up_image(ortho(p)) != space.all_mask ^ space.up_image(p):
            raise RuntimeError("complementation is not realized as set complement")
    return ClosureSpace(space, c1, clopen_sets(c1)), report


def represent_distributive(poset: Poset):
    """Topological representation of a distributive lattice over its
    morphism dual. Raises NotDistributive on other inputs."""
    if not poset.is_distributive():
        raise NotDistributive("morphism-dual representation needs distributivity")
    morph = lattice_dual(poset)
    c1, c2 = induced_closures(morph)
    if not (c1.is_topological() and c2.is_topological()):
        raise RuntimeError("morphism-dual closures are not topological")
    report = representation_report(poset, morph)
    if not report.isomorphism:
        raise RuntimeError("morphism-dual representation failed")
    return morph, report.family, report


def stone(poset: Poset) -> StoneSpace:
    """Point space of a Boolean lattice: the constant-free morphism dual.

    The two closures coincide, are exact and topological, the clopen
    algebra is isomorphic to the input, and each point's kernel is a
    maximal lattice ideal (annotated on the result).
    """
    if not poset.is_boolean():
        raise NotBoolean("point-space construction needs a Boolean lattice")
    points = remove_constants(lattice_dual(poset))
    c1, c2 = induced_closures(points)
    if not closures_equal(c1, c2):
        raise RuntimeError("point-space closures differ")
    if not c1.is_exact() or not c1.is_topological():
        raise RuntimeError("point-space closure is not an exact topology")
    report = representation_report(poset, points)
    if not report.isomorphism:
        raise RuntimeError("point-space representation failed")
    kernels = tuple(points.kernel(i) for i in range(points.size))
    return StoneSpace(points, c1, clopen_sets(c1), kernels)


# --- subspaces inducing orthocomplementations -----------------------------------


def _coincide_mask(ups, sub, n) -> bool:
    # families generated by {up & sub} and {sub \ up} coincide iff each
    # generator of one is an intersection of generators of the other
    for p in range(n):
        lo = sub & ~ups[p]
        c = sub
        for q in range(n):
            u = ups[q] & sub
            if lo & ~u == 0:
                c &= u
        if c != lo:
            return False
    for p in range(n):
        hi = ups[p] & sub
        c = sub
        for q in range(n):
            l = sub & ~ups[q]
            if hi & ~l == 0:
                c &= l
        if c != hi:
            return False
    return True


def selfdual_subspaces(
    poset: Poset, cap: int = SWEEP_CAP, dual_cap: int = DUAL_POINT_CAP
) -> list:
    """All subspaces of the dual space that are full, separating, and whose
    two induced closures coincide.

    The sweep is exhaustive over all subsets of the dual space, so it is
    guarded by ``cap`` on the dual point count. The empty subspace can
    qualify only over a one-element poset (fullness is vacuous exactly
    there); it is kept in that degenerate case because it is the
    orthodual of the identity complementation.
    """
    star = dual_space(poset, dual_cap)
    m = star.size
    if m > cap:
        raise BoundExceeded(
            f"dual space has {m} points, subset sweep bound is {cap}"
        )
    n = poset.n
    ups = [star.up_image(p) for p in range(n)]
    pair_wit = [
        ups[p] & ~ups[q]
        for p in range(n)
        for q in range(n)
        if not poset.leq(p, q)
    ]
    carrier = poset.full
    points = star.points
    found = []
    for sub in range(1 << m):
        full = True
        for w in pair_wit:
            if not sub & w:
                full = False
                break
        if not full:
            continue
        if not _coincide_mask(ups, sub, n):
            continue
        pts = [points[i] for i in bits(sub)]
        if not _separating_points(pts, carrier)[0]:
            continue
        found.append(star.restrict(sub))
    return found


def maximal_subspaces(spaces) -> list:
    out = []
    for a in spaces:
        pa = set(a.points)
        if not any(set(b.points) > pa for b in spaces):
            out.append(a)
    return out


def induced_orthocomplementation(subspace: Subspace) -> OrthoMap:
    """Pull set complementation on the represented family back to the poset.

    The base poset must be bounded and the subspace full, separating,
    and carrying coinciding closures; NotBounded or NotSelfdual is
    raised otherwise. Boundedness matters: without a bottom and top the
    empty set and the whole subspace need not be point images, and the
    complementation has nowhere to send them.
    """
    poset = subspace.poset
    if not poset.is_bounded():
        raise NotBounded("complementation needs a bottom and a top")
    if not is_full(subspace)[0]:
        raise NotSelfdual("subspace is not full")
    if not is_separating(subspace)[0]:
        raise NotSelfdual("subspace is not separating")
    c1, c2 = induced_closures(subspace)
    if not closures_equal(c1, c2):
        raise NotSelfdual("the two induced closures differ")
    table = [subspace.up_image(p) for p in range(poset.n)]
    where = {img: p for p, img in enumerate(table)}
    perm = []
    for p in range(poset.n):
        q = where.get(subspace.all_mask ^ table[p])
        if q is None:
            raise RuntimeError("complement of a point image is not a point image")
        perm.append(q)
    return OrthoMap(poset, tuple(perm))


def ortho_correspondence(poset: Poset, cap: int = SWEEP_CAP):
    """Match orthocomplementations with maximal selfdual subspaces.

    Verifies that f -> orthodual(f) is a bijection onto the maximal
    subspaces and that the induced complementation inverts it. Returns
    (verdict, report dict). The statement is about bounded posets;
    NotBounded is raised otherwise (an unbounded poset can have
    nonempty selfdual collection yet no orthocomplementation at all).
    """
    if not poset.is_bounded():
        raise NotBounded("the correspondence is stated for bounded posets")
    orthos = find_orthocomplementations(poset)
    spaces = selfdual_subspaces(poset, cap)
    maxima = maximal_subspaces(spaces)
    max_points = {a.points for a in maxima}
    ok = len(orthos) == len(maxima)
    seen = set()
    for f in orthos:
        pts = orthodual_space(poset, f).points
        if pts not in max_points or pts in seen:
            ok = False
        seen.add(pts)
    for a in maxima:
        g = induced_orthocomplementation(a)
        if g not in orthos:
            ok = False
        if orthodual_space(poset, g).points != a.points:
            ok = False
    report = {
        "orthocomplementations": len(orthos),
        "selfdual_subspaces": len(spaces),
        "maximal_subspaces": len(maxima),
        "matched": ok,
    }
    return ok, report


# --- check suites ----------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    statement: str
    passed: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "pass": self.passed,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class SuiteReport:
    poset: Poset
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "poset": poset_to_json(self.poset),
            "checks": [c.to_json() for c in self.checks],
        }


def _subset_labels(poset: Poset, mask: int) -> list:
    return sorted(poset.labels[i] for i in bits(mask))


def _lattice_ideals(poset: Poset) -> list:
    out = []
    for d in range(1 << poset.n):
        ok = all(poset.down[i] & ~d == 0 for i in bits(d))
        if ok:
            items = list(bits(d))
            ok = all(d >> poset.join(i, j) & 1 for i in items for j in items)
        if ok:
            out.append(d)
    return out


def _lattice_filters(poset: Poset) -> list:
    out = []
    for d in range(1 << poset.n):
        ok = all(poset.up[i] & ~d == 0 for i in bits(d))
        if ok:
            items = list(bits(d))
            ok = all(d >> poset.meet(i, j) & 1 for i in items for j in items)
        if ok:
            out.append(d)
    return out


def _closure_formula_agrees(subspace: Subspace, c1, c2, xs):
    """Compare apply() against the filter/ideal intersection formulas."""
    for x in xs:
        f = filter_of(subspace, x)
        rhs = subspace.all_mask
        for p in bits(f):
            rhs &= subspace.up_image(p)
        if c1.apply(x) != rhs:
            return False, x
        ker = ideal_of(subspace, x)
        rhs = subspace.all_mask
        for p in bits(ker):
            rhs &= subspace.lo_image(p)
        if c2.apply(x) != rhs:
            return False, x
    return True, None


def _subset_sample(m: int, exhaustive_limit: int = 12, samples: int = 2048):
    if m <= exhaustive_limit:
        return range(1 << m)
    rng = random.Random(0xB1C105)
    return [rng.getrandbits(m) for _ in range(samples)]


SUITES = ("all", "general", "ortho", "distributive", "boolean")


def check_poset(
    poset: Poset,
    suite: str = "all",
    sweep_cap: int = SWEEP_CAP,
    dual_cap: int = DUAL_POINT_CAP,
) -> SuiteReport:
    """Run every applicable law check on one poset and report the outcomes.

    ``suite`` restricts attention to one group of checks; preconditions
    (bounded, lattice, distributive, Boolean) are detected, not assumed,
    so the suite runs on any poset and simply skips what does not apply.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, choose from {SUITES}")
    checks = []
    star = dual_space(poset, dual_cap)
    bounded = poset.is_bounded()

    if suite in ("all", "general"):
        rep = representation_report(poset, star)
        checks.append(
            CheckResult(
                "dual-representation",
                "the point-image map is an order isomorphism onto the "
                "closed-open family of the full dual space",
                rep.isomorphism and rep.consistent,
                {"flags": rep.to_json()["flags"]} if not rep.isomorphism else None,
            )
        )
        checks.append(
            CheckResult(
                "dual-full-separating",
                "the full dual space is full and separating",
                rep.full and rep.separating,
                None if rep.full and rep.separating else rep.witnesses,
            )
        )

        downsets = tuple(sorted(poset.full ^ s for s in star.points))
        ideals_ok = ideals_wrt(star).members == downsets
        filters_ok = filters_wrt(star).members == star.points
        checks.append(
            CheckResult(
                "ideals-are-downsets",
                "ideals relative to the full dual space are exactly the "
                "down-sets and filters exactly the up-sets",
                ideals_ok and filters_ok,
                None if ideals_ok and filters_ok else {"ideals": ideals_ok, "filters": filters_ok},
            )
        )

        c1, c2 = induced_closures(star)
        eq_ok, eq_wit = _closure_formula_agrees(
            star, c1, c2, _subset_sample(star.size)
        )
        checks.append(
            CheckResult(
                "closure-equations",
                "the base-generated closures agree with the filter- and "
                "ideal-driven intersection formulas",
                eq_ok,
                None if eq_ok else {"subset": sorted(bits(eq_wit))},
            )
        )

        ideals = ideals_wrt(star)
        filters = filters_wrt(star)
        hyp = True
        for p in range(poset.n):
            for q in range(poset.n):
                if not poset.leq(q, p):
                    gi = generated_ideal(star, 1 << p, ideals)
                    gf = generated_filter(star, 1 << q, filters)
                    if gi.subset & gf.subset:
                        hyp = False
        sep_ok = rep.separating
        full_ok = rep.full
        checks.append(
            CheckResult(
                "separating-cone-fullness",
                "a separating subspace with disjoint generated cones over "
                "every non-related pair is full",
                (not (sep_ok and hyp)) or full_ok,
                {"separating": sep_ok, "cones_disjoint": hyp, "full": full_ok},
            )
        )

        if bounded:
            trimmed = remove_constants(star)
            rep2 = representation_report(poset, trimmed)
            ok = rep2.full and rep2.separating and rep2.isomorphism
            checks.append(
                CheckResult(
                    "constant-removal",
                    "dropping the two constant points keeps the dual full, "
                    "separating, and representing",
                    ok,
                    None if ok else rep2.witnesses,
                )
            )

    if suite in ("all", "ortho"):
        orthos = find_orthocomplementations(poset) if bounded else []
        for k, f in enumerate(orthos):
            space = orthodual_space(poset, f)
            oc1, oc2 = induced_closures(space)
            rep3 = representation_report(poset, space)
            complement_ok = all(
                space.up_image(f(p)) == space.all_mask ^ space.up_image(p)
                for p in range(poset.n)
            )
            fam_ideals = ideals_wrt(space)
            fam_filters = filters_wrt(space)
            cones_ok = all(
                generated_ideal(space, 1 << p, fam_ideals).subset == poset.down[p]
                and generated_filter(space, 1 << p, fam_filters).subset == poset.up[p]
                for p in range(poset.n)
            )
            ok = (
                rep3.closures_coincide
                and rep3.isomorphism
                and complement_ok
                and cones_ok
            )
            checks.append(
                CheckResult(
                    f"ortho-representation-{k}",
                    "the orthodual carries one closure whose clopen family "
                    "recovers the poset, complementation becoming set "
                    "complement and generated cones the order cones",
                    ok,
                    None
                    if ok
                    else {
                        "closures_coincide": rep3.closures_coincide,
                        "isomorphism": rep3.isomorphism,
                        "complement_as_set_complement": complement_ok,
                        "cones": cones_ok,
                    },
                )
            )
        if bounded and star.size <= sweep_cap:
            ok, detail = ortho_correspondence(poset, sweep_cap)
            checks.append(
                CheckResult(
                    "ortho-correspondence",
                    "orthocomplementations correspond bijectively to maximal "
                    "full separating subspaces with coinciding closures",
                    ok,
                    detail,
                )
            )

    is_lat = poset.is_lattice()
    is_dist = is_lat and poset.is_distributive()

    if suite in ("all", "distributive") and is_lat:
        morph = lattice_dual(poset)
        fullsep = is_full(morph)[0] and is_separating(morph)[0]
        checks.append(
            CheckResult(
                "distributive-iff-full-separating",
                "the lattice is distributive exactly when its morphism dual "
                "is full and separating",
                poset.is_distributive() == fullsep,
                {"distributive": poset.is_distributive(), "full_separating": fullsep},
            )
        )
        if is_dist and poset.n <= 16:
            li = tuple(sorted(_lattice_ideals(poset)))
            lf = tuple(sorted(_lattice_filters(poset)))
            ok = (
                ideals_wrt(morph).members == li
                and filters_wrt(morph).members == lf
            )
            checks.append(
                CheckResult(
                    "lattice-ideals-coincide",
                    "ideals relative to the morphism dual are exactly the "
                    "lattice ideals, filters the lattice filters",
                    ok,
                    None,
                )
            )
        if is_dist:
            mc1, mc2 = induced_closures(morph)
            repd = representation_report(poset, morph)
            ok = (
                mc1.is_topological()
                and mc2.is_topological()
                and repd.isomorphism
            )
            checks.append(
                CheckResult(
                    "distributive-representation",
                    "both closures on the morphism dual are topological and "
                    "its closed-open family recovers the lattice",
                    ok,
                    None if ok else {"flags": repd.to_json()["flags"]},
                )
            )

    if suite in ("all", "boolean") and is_dist:
        trimmed = remove_constants(lattice_dual(poset))
        tc1, tc2 = induced_closures(trimmed)
        coincide = closures_equal(tc1, tc2)
        checks.append(
            CheckResult(
                "boolean-iff-coincident-closures",
                "the lattice is Boolean exactly when the two closures on its "
                "constant-free morphism dual coincide",
                poset.is_boolean() == coincide,
                {"boolean": poset.is_boolean(), "closures_coincide": coincide},
            )
        )
        if poset.is_boolean():
            space = stone(poset)
            atoms = [
                i
                for i in range(poset.n)
                if poset.covers[poset.bottom] >> i & 1
            ]
            ideals = _lattice_ideals(poset) if poset.n <= 16 else None
            kernels_ok = True
            if ideals is not None:
                for ker in space.kernels:
                    if ker not in ideals or ker == poset.full:
                        kernels_ok = False
                    elif any(
                        m != poset.full and m != ker and ker & ~m == 0
                        for m in ideals
                    ):
                        kernels_ok = False
            point_count_ok = space.subspace.size == len(atoms)
            clopen_ok = len(space.clopen) == poset.n
            ok = kernels_ok and point_count_ok and clopen_ok
            checks.append(
                CheckResult(
                    "stone-representation",
                    "the constant-free morphism dual has one point per atom, "
                    "its clopen algebra matches the lattice, and every kernel "
                    "is a maximal lattice ideal",
                    ok,
                    {
                        "points": space.subspace.size,
                        "atoms": len(atoms),
                        "clopen": len(space.clopen),
                        "kernels_maximal_ideals": kernels_ok,
                    },
                )
            )

    return SuiteReport(poset, tuple(checks))


# --- catalog sweeps ---------------------------------------------------------------


def _check_args(args):
    poset, suite, sweep_cap = args
    return check_poset(poset, suite=suite, sweep_cap=sweep_cap)


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("BICLOSURE_THREADS", "1")))
    except ValueError:
        return 1


def sweep_catalog(
    max_n: int,
    suite: str = "all",
    sweep_cap: int = SWEEP_CAP,
    catalog_bound: int = MAX_CATALOG_N,
    workers: Optional[int] = None,
) -> list:
    """Run the check suite over every isomorphism class up to ``max_n``.

    Worker count comes from BICLOSURE_THREADS unless given explicitly;
    results are in deterministic catalog order either way.
    """
    posets = []
    for n in range(1, max_n + 1):
        posets.extend(enumerate_posets(n, max_n=catalog_bound))
    jobs = [(p, suite, sweep_cap) for p in posets]
    count = _worker_count(workers)
    if count > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=count) as pool:
            return list(pool.map(_check_args, jobs))
    return [_check_args(j) for j in jobs]
