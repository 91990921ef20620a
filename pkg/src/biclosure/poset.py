"""Finite posets: construction, lattice predicates, orthocomplementations,
isomorphism testing, and small-instance catalogs.

Elements are indices 0..n-1 everywhere inside the package; labels exist
only at the I/O boundary. The order is stored as bitmask rows, one mask
per element, so comparisons and cone computations are word operations.

Conventions:
  * ``up[i]`` is the mask of all j with i <= j (bit i always set).
  * A missing meet or join is reported as None, never as a sentinel
    element.
  * Every constructor validates reflexivity, antisymmetry and
    transitivity; there is no unchecked path to a ``Poset``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .bitops import bits, mask_of
from .errors import (
    BoundExceeded,
    CycleError,
    InvalidOrthoMap,
    MemberOutOfRange,
    UnknownLabel,
)

MAX_CATALOG_N = 6


class Poset:
    """A finite partial order on indices 0..n-1 with label decoration."""

    def __init__(self, labels, up):
        self.labels = tuple(str(x) for x in labels)
        self.up = tuple(up)
        self.n = len(self.labels)
        self.full = (1 << self.n) - 1
        if len(set(self.labels)) != self.n:
            raise ValueError("labels must be distinct")
        if len(self.up) != self.n:
            raise ValueError("one up-mask per element required")
        self._check_axioms()

    def _check_axioms(self):
        for i, row in enumerate(self.up):
            if row & ~self.full:
                raise MemberOutOfRange(f"up[{i}] has bits outside the carrier")
            if not row >> i & 1:
                raise ValueError(f"order not reflexive at {self.labels[i]}")
        for i in range(self.n):
            reach = 0
            for j in bits(self.up[i]):
                reach |= self.up[j]
                if j != i and self.up[j] >> i & 1:
                    raise ValueError(
                        f"order not antisymmetric: {self.labels[i]} and {self.labels[j]}"
                    )
            if reach != self.up[i]:
                raise ValueError(f"order not transitive at {self.labels[i]}")

    # --- basic queries ----------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def leq_labels(self, a, b) -> bool:
        return self.leq(self.index(a), self.index(b))

    def index(self, label) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabel(f"unknown label: {label!r}") from None

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def down(self):
        """down[j] is the mask of all i with i <= j."""
        out = [0] * self.n
        for i, row in enumerate(self.up):
            for j in bits(row):
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def covers(self):
        """covers[i] is the mask of elements covering i (immediate successors)."""
        out = []
        for i in range(self.n):
            strict_up = self.up[i] & ~(1 << i)
            cov = 0
            for j in bits(strict_up):
                between = strict_up & self.down[j] & ~(1 << j)
                if not between:
                    cov |= 1 << j
            out.append(cov)
        return tuple(out)

    @cached_property
    def bottom(self):
        for i in range(self.n):
            if self.up[i] == self.full:
                return i
        return None

    @cached_property
    def top(self):
        for i in range(self.n):
            if self.down[i] == self.full:
                return i
        return None

    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    # --- lattice structure ------------------------------------------------

    @cached_property
    def _meet_table(self):
        table = [[None] * self.n for _ in range(self.n)]
        for p in range(self.n):
            for q in range(p, self.n):
                common = self.down[p] & self.down[q]
                found = None
                for c in bits(common):
                    if common & ~self.down[c] == 0:
                        found = c
                        break
                table[p][q] = table[q][p] = found
        return table

    @cached_property
    def _join_table(self):
        table = [[None] * self.n for _ in range(self.n)]
        for p in range(self.n):
            for q in range(p, self.n):
                common = self.up[p] & self.up[q]
                found = None
                for c in bits(common):
                    if common & ~self.up[c] == 0:
                        found = c
                        break
                table[p][q] = table[q][p] = found
        return table

    def meet(self, p: int, q: int):
        """Greatest lower bound, or None when the pair has none."""
        return self._meet_table[p][q]

    def join(self, p: int, q: int):
        """Least upper bound, or None when the pair has none."""
        return self._join_table[p][q]

    def is_lattice(self) -> bool:
        return all(
            self._meet_table[p][q] is not None and self._join_table[p][q] is not None
            for p in range(self.n)
            for q in range(p + 1, self.n)
        )

    def is_distributive(self) -> bool:
        """Direct check of meet-over-join on every triple, O(n^3)."""
        if not self.is_lattice():
            return False
        mt, jt = self._meet_table, self._join_table
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    if mt[a][jt[b][c]] != jt[mt[a][b]][mt[a][c]]:
                        return False
        return True

    def is_boolean(self) -> bool:
        if not (self.is_bounded() and self.is_distributive()):
            return False
        mt, jt = self._meet_table, self._join_table
        bot, top = self.bottom, self.top
        for a in range(self.n):
            if not any(
                mt[a][x] == bot and jt[a][x] == top for x in range(self.n)
            ):
                return False
        return True

    # --- misc -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        return f"Poset({self.n} elements)"


def build_poset(labels, pairs) -> Poset:
    """Build a poset from labels and generating order assertions.

    ``pairs`` is any iterable of (low, high) label pairs; the reflexive
    transitive closure is taken, so generating assertions suffice.
    Raises UnknownLabel for an undeclared label and CycleError when the
    closure would identify two distinct labels.
    """
    labels = tuple(str(x) for x in labels)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError("labels must be distinct")
    n = len(labels)
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        try:
            i, j = index[str(a)], index[str(b)]
        except KeyError as exc:
            raise UnknownLabel(f"unknown label: {exc.args[0]!r}") from None
        up[i] |= 1 << j
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleError(
                    f"assertions force {labels[i]} <= {labels[j]} <= {labels[i]}"
                )
    return Poset(labels, up)


# --- subset families --------------------------------------------------------


class SubsetFamily:
    """A deduplicated family of subsets of {0..m-1}, kept in sorted mask order."""

    __slots__ = ("m", "full", "members")

    def __init__(self, m: int, members):
        self.m = m
        self.full = (1 << m) - 1
        seen = set()
        for x in members:
            if x & ~self.full:
                raise MemberOutOfRange(f"member {x:#x} exceeds carrier of size {m}")
            seen.add(x)
        self.members = tuple(sorted(seen))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        return (
            isinstance(other, SubsetFamily)
            and self.m == other.m
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.m, self.members))

    def __repr__(self):
        return f"SubsetFamily(m={self.m}, {len(self.members)} members)"


def poset_of_family(family: SubsetFamily) -> Poset:
    """The inclusion order on a subset family, labelled by the subsets."""
    members = family.members
    labels = ["{" + ",".join(str(b) for b in bits(x)) + "}" for x in members]
    up = []
    for i, x in enumerate(members):
        row = 0
        for j, y in enumerate(members):
            if x & ~y == 0:
                row |= 1 << j
        up.append(row)
    return Poset(labels, up)


# --- standard constructions -------------------------------------------------


def chain(k: int) -> Poset:
    labels = [f"c{i}" for i in range(k)]
    up = [((1 << k) - 1) & ~((1 << i) - 1) for i in range(k)]
    return Poset(labels, up)


def antichain(k: int) -> Poset:
    return Poset([f"a{i}" for i in range(k)], [1 << i for i in range(k)])


def boolean_algebra(num_atoms: int) -> Poset:
    """The powerset of ``num_atoms`` generators ordered by inclusion."""
    return poset_of_family(SubsetFamily(num_atoms, range(1 << num_atoms)))


# --- orthocomplementations ---------------------------------------------------


@dataclass(frozen=True)
class OrthoMap:
    """An orthocomplementation: an involutive anti-isotone permutation f
    with meet(p, f(p)) = bottom and join(p, f(p)) = top for every p."""

    poset: Poset
    perm: tuple

    def __post_init__(self):
        p = self.poset
        f = self.perm
        if sorted(f) != list(range(p.n)):
            raise InvalidOrthoMap("not a permutation of the carrier")
        if not p.is_bounded():
            raise InvalidOrthoMap("poset is not bounded")
        for i in range(p.n):
            if f[f[i]] != i:
                raise InvalidOrthoMap(f"not an involution at {p.labels[i]}")
        for i in range(p.n):
            for j in bits(p.up[i]):
                if not p.leq(f[j], f[i]):
                    raise InvalidOrthoMap(
                        f"not anti-isotone on {p.labels[i]} <= {p.labels[j]}"
                    )
        for i in range(p.n):
            if p.meet(i, f[i]) != p.bottom or p.join(i, f[i]) != p.top:
                raise InvalidOrthoMap(f"complement laws fail at {p.labels[i]}")

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.perm[i] for i in bits(mask))

    def to_json(self):
        return {self.poset.labels[i]: self.poset.labels[j] for i, j in enumerate(self.perm)}


def find_orthocomplementations(poset: Poset) -> list:
    """Exhaustive search over permutations; empty for unbounded posets."""
    if not poset.is_bounded():
        return []
    n = poset.n
    pairs = [
        (i, j) for i in range(n) for j in bits(poset.up[i] & ~(1 << i))
    ]
    out = []
    for perm in itertools.permutations(range(n)):
        if any(perm[perm[i]] != i for i in range(n)):
            continue
        if perm[poset.bottom] != poset.top:
            continue
        if any(not poset.leq(perm[j], perm[i]) for i, j in pairs):
            continue
        if any(
            poset.meet(i, perm[i]) != poset.bottom or poset.join(i, perm[i]) != poset.top
            for i in range(n)
        ):
            continue
        out.append(OrthoMap(poset, perm))
    return out


# --- isomorphism --------------------------------------------------------------


def _profiles(poset: Poset):
    base = [
        (bin(poset.down[i]).count("1"), bin(poset.up[i]).count("1"))
        for i in range(poset.n)
    ]
    refined = []
    for i in range(poset.n):
        below = tuple(sorted(base[j] for j in bits(poset.down[i] & ~(1 << i))))
        above = tuple(sorted(base[j] for j in bits(poset.up[i] & ~(1 << i))))
        refined.append((base[i], below, above))
    return refined


def _iso_key(poset: Poset):
    return (poset.n, tuple(sorted(_profiles(poset))))


def are_isomorphic(p: Poset, q: Poset):
    """Order isomorphism test; returns (answer, witness index map or None)."""
    if p.n != q.n:
        return False, None
    pp, qq = _profiles(p), _profiles(q)
    if sorted(pp) != sorted(qq):
        return False, None
    n = p.n
    cand = [[j for j in range(n) if qq[j] == pp[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(cand[i]))
    mapping = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in cand[i]:
            if used[j]:
                continue
            ok = True
            for i2 in order[:k]:
                j2 = mapping[i2]
                if p.leq(i, i2) != q.leq(j, j2) or p.leq(i2, i) != q.leq(j2, j):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
                mapping[i] = -1
        return False

    if extend(0):
        return True, tuple(mapping)
    return False, None


# --- catalogs ------------------------------------------------------------------


def _downclosed_subsets(up, k):
    # down-sets of the k-element prefix, used to attach a new maximal element
    down = [0] * k
    for i in range(k):
        for j in bits(up[i]):
            down[j] |= 1 << i
    out = []
    for d in range(1 << k):
        ok = True
        for i in bits(d):
            if down[i] & ~d:
                ok = False
                break
        if ok:
            out.append(d)
    return out


def _natural_posets(n):
    """All posets on 0..n-1 whose order respects the integer order.

    Element k is attached as a maximal element above a down-closed subset,
    so every output is transitive by construction and every isomorphism
    class appears (each finite poset has a linear extension).
    """
    posets = [()]
    for k in range(n):
        grown = []
        for up in posets:
            for d in _downclosed_subsets(up, k):
                new_up = tuple(
                    up[i] | (1 << k) if d >> i & 1 else up[i] for i in range(k)
                ) + (1 << k,)
                grown.append(new_up)
        posets = grown
    return posets


def enumerate_posets(n: int, max_n: int = MAX_CATALOG_N) -> list:
    """One representative per isomorphism class of n-element posets.

    The count grows fast (318 classes at n=6, 2045 at n=7), hence the
    guard; pass a larger ``max_n`` deliberately to go past it.
    """
    if n > max_n:
        raise BoundExceeded(
            f"poset catalog for n={n} exceeds the configured bound {max_n}"
        )
    reps = []
    buckets = {}
    for up in _natural_posets(n):
        cand = Poset([f"p{i}" for i in range(n)], up)
        key = _iso_key(cand)
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(cand, rep)[0] for rep in bucket):
            bucket.append(cand)
            reps.append(cand)
    return reps


# --- serialization -------------------------------------------------------------


def poset_to_json(poset: Poset) -> dict:
    """JSON form with generating assertions only (the covering pairs)."""
    le = []
    for i in range(poset.n):
        for j in bits(poset.covers[i]):
            le.append([poset.labels[i], poset.labels[j]])
    return {"elements": list(poset.labels), "le": le}


def poset_from_json(data: dict) -> Poset:
    if not isinstance(data, dict) or "elements" not in data:
        raise ValueError('poset JSON needs an "elements" array')
    elements = data["elements"]
    le = data.get("le", [])
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ValueError('"elements" must be an array of strings')
    if not isinstance(le, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in le
    ):
        raise ValueError('"le" must be an array of [low, high] pairs')
    return build_poset(elements, le)


def _dot_quote(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def poset_to_dot(poset: Poset, name: str = "poset") -> str:
    """Hasse diagram in DOT, edges directed low to high."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(poset.labels):
        lines.append(f'  n{i} [label="{_dot_quote(lab)}"];')
    for i in range(poset.n):
        for j in bits(poset.covers[i]):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
