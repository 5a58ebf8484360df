"""Exception types shared across the package."""


class SizeLimitError(ValueError):
    """An input exceeds the hard-coded enumeration guard."""


class DegreeMismatchError(ValueError):
    """Two objects that must live in the same degree do not."""


class OrderViolationError(ValueError):
    """A pair of set partitions was expected to be comparable by refinement."""


class MissingEdgeError(ValueError):
    """An operation referenced an edge the digraph does not contain."""


class SymmetryViolationError(RuntimeError):
    """An internal symmetry assertion failed; indicates a bug, not bad input."""
