"""Independent brute-force reference implementations.

Everything in this module recomputes a quantity from first principles,
deliberately avoiding the package's own data structures and algorithms:
sets of frozensets instead of bitmasks, itertools sweeps instead of
incremental closures, naive scans instead of cached tables. Slow on
purpose; meant for small carriers only.
"""

import itertools
from functools import reduce


# --- order primitives ----------------------------------------------------------


def leq_fn(poset):
    """Comparison callback detached from the poset's internals."""
    pairs = {
        (i, j) for i in range(poset.n) for j in range(poset.n) if poset.leq(i, j)
    }
    return lambda a, b: (a, b) in pairs


def naive_meet(n, leq, a, b):
    lower = [z for z in range(n) if leq(z, a) and leq(z, b)]
    tops = [z for z in lower if all(leq(w, z) for w in lower)]
    return tops[0] if len(tops) == 1 else None


def naive_join(n, leq, a, b):
    upper = [z for z in range(n) if leq(a, z) and leq(b, z)]
    bottoms = [z for z in upper if all(leq(z, w) for w in upper)]
    return bottoms[0] if len(bottoms) == 1 else None


# --- dual space ------------------------------------------------------------------


def brute_isotone_01_maps(n, leq):
    """All isotone maps into {0, 1}, each as the frozenset where it is 1."""
    out = set()
    for values in itertools.product((0, 1), repeat=n):
        if all(
            values[p] <= values[q] for p in range(n) for q in range(n) if leq(p, q)
        ):
            out.add(frozenset(i for i in range(n) if values[i]))
    return out


def brute_upsets(n, leq):
    out = set()
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            s = set(combo)
            if all(q in s for p in s for q in range(n) if leq(p, q)):
                out.add(frozenset(s))
    return out


def brute_lattice_01_morphisms(n, leq):
    """Isotone 0/1 maps preserving binary meets and joins (as one-sets)."""
    out = set()
    for one_set in brute_isotone_01_maps(n, leq):
        ok = True
        for a in range(n):
            for b in range(n):
                m = naive_meet(n, leq, a, b)
                j = naive_join(n, leq, a, b)
                if m is None or j is None:
                    ok = False
                    break
                if ((m in one_set) != (a in one_set and b in one_set)) or (
                    (j in one_set) != (a in one_set or b in one_set)
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(one_set)
    return out


# --- ideals, fullness, separation --------------------------------------------------


def brute_ideal_family(point_one_sets, n):
    """All intersections of kernels over nonempty point families."""
    kernels = [frozenset(range(n)) - s for s in point_one_sets]
    out = set()
    for r in range(1, len(kernels) + 1):
        for combo in itertools.combinations(kernels, r):
            out.add(frozenset(reduce(lambda a, b: a & b, combo)))
    return out


def brute_filter_family(point_one_sets, n):
    out = set()
    sets = [frozenset(s) for s in point_one_sets]
    for r in range(1, len(sets) + 1):
        for combo in itertools.combinations(sets, r):
            out.add(frozenset(reduce(lambda a, b: a & b, combo)))
    return out


def brute_is_full(point_one_sets, n, leq):
    for p in range(n):
        for q in range(n):
            if not leq(p, q):
                if not any(p in s and q not in s for s in point_one_sets):
                    return False
    return True


def brute_is_separating(point_one_sets, n):
    ideals = brute_ideal_family(point_one_sets, n)
    filters = brute_filter_family(point_one_sets, n)
    for ideal in ideals:
        for filt in filters:
            if ideal & filt:
                continue
            if not any(
                filt <= s and not (ideal & s) for s in point_one_sets
            ):
                return False
    return True


# --- closures ----------------------------------------------------------------------


def brute_closed_family(m, base_sets):
    """All intersections of base members, plus the full carrier."""
    full = frozenset(range(m))
    out = {full}
    sets = [frozenset(s) for s in base_sets]
    for r in range(1, len(sets) + 1):
        for combo in itertools.combinations(sets, r):
            out.add(frozenset(reduce(lambda a, b: a & b, combo)))
    return out


def brute_closure_apply(m, base_sets, x):
    """Smallest member of the brute family containing x."""
    family = brute_closed_family(m, base_sets)
    candidates = [c for c in family if set(x) <= c]
    return frozenset(reduce(lambda a, b: a & b, candidates))


# --- counting oracles -----------------------------------------------------------------


def count_labeled_posets(n):
    """Count partial orders on {0..n-1} by sweeping all antisymmetric
    relations: each unordered pair is <, >, or incomparable."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        less = set()
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                less.add((a, b))
            elif c == 2:
                less.add((b, a))
        ok = True
        for (a, b) in less:
            for c in range(n):
                if (b, c) in less and (a, c) not in less:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def canonical_relation(n, leq):
    """Lexicographically least relation matrix over all relabelings."""
    best = None
    for perm in itertools.permutations(range(n)):
        bitsq = tuple(
            1 if leq(perm[i], perm[j]) else 0
            for i in range(n)
            for j in range(n)
        )
        if best is None or bitsq < best:
            best = bitsq
    return best


def count_labelings(poset):
    """Number of distinct labeled copies of one isomorphism class."""
    n = poset.n
    leq = leq_fn(poset)
    seen = set()
    for perm in itertools.permutations(range(n)):
        seen.add(
            tuple(
                1 if leq(perm[i], perm[j]) else 0
                for i in range(n)
                for j in range(n)
            )
        )
    return len(seen)


def brute_orthocomplementations(poset):
    """Orthocomplementation count via naive meets and joins."""
    n = poset.n
    leq = leq_fn(poset)
    bottoms = [i for i in range(n) if all(leq(i, j) for j in range(n))]
    tops = [i for i in range(n) if all(leq(j, i) for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        return []
    bottom, top = bottoms[0], tops[0]
    found = []
    for perm in itertools.permutations(range(n)):
        if any(perm[perm[i]] != i for i in range(n)):
            continue
        if any(
            leq(a, b) and not leq(perm[b], perm[a])
            for a in range(n)
            for b in range(n)
        ):
            continue
        if any(
            naive_meet(n, leq, i, perm[i]) != bottom
            or naive_join(n, leq, i, perm[i]) != top
            for i in range(n)
        ):
            continue
        found.append(perm)
    return found


def brute_lattice_ideals(poset):
    """Down-sets closed under naive binary join, the empty set included."""
    n = poset.n
    leq = leq_fn(poset)
    out = set()
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            s = set(combo)
            if any(leq(w, z) and w not in s for z in s for w in range(n)):
                continue
            if any(naive_join(n, leq, a, b) not in s for a in s for b in s):
                continue
            out.add(frozenset(s))
    return out


def brute_is_distributive(poset):
    n = poset.n
    leq = leq_fn(poset)
    for a in range(n):
        for b in range(n):
            if naive_meet(n, leq, a, b) is None or naive_join(n, leq, a, b) is None:
                return False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = naive_meet(n, leq, a, naive_join(n, leq, b, c))
                rhs = naive_join(
                    n, leq, naive_meet(n, leq, a, b), naive_meet(n, leq, a, c)
                )
                if lhs != rhs:
                    return False
    return True
