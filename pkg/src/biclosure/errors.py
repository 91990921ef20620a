"""Exception types shared across the package."""


class BiclosureError(Exception):
    """Base class for every error this package raises on purpose."""


class UnknownLabel(BiclosureError):
    """An order assertion referenced a label that was never declared."""


class CycleError(BiclosureError):
    """The transitive closure of the asserted order identifies two labels."""


class BoundExceeded(BiclosureError):
    """An enumeration would exceed its configured bound.

    Every exhaustive sweep in this package is guarded: poset catalogs by
    element count, dual spaces by point count, subspace sweeps by the size
    of the dual space. Raising instead of grinding keeps runtimes honest.
    """


class NotALattice(BiclosureError):
    """A pair of elements has no meet or no join."""


class NotBounded(BiclosureError):
    """The poset has no least or no greatest element."""


class NotDistributive(BiclosureError):
    """Some triple violates the distributive law."""


class NotBoolean(BiclosureError):
    """The lattice is not Boolean (unbounded, non-distributive, or an
    element has no complement)."""


class CarrierMismatch(BiclosureError):
    """Two closure operators live on carriers of different sizes."""


class MemberOutOfRange(BiclosureError):
    """A subset mask has bits outside its declared carrier."""


class InvalidOrthoMap(BiclosureError):
    """A permutation fails one of the orthocomplementation laws."""


class NotSelfdual(BiclosureError):
    """A subspace is not full, not separating, or its two closures differ."""
