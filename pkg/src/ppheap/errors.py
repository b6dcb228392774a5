"""Exception types shared across the package."""


class PPHeapError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateSymbol(PPHeapError):
    """A symbol was declared twice within one alphabet set."""


class OverlappingAlphabet(PPHeapError):
    """A symbol was declared both constant and parameter."""


class UnknownSymbol(PPHeapError):
    """A symbol does not belong to the alphabet in use.

    ``position`` is the 1-based position of the offending symbol when the
    source sequence is known, else None.
    """

    def __init__(self, symbol, position=None):
        self.symbol = symbol
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"unknown symbol {symbol!r}{where}")


class InvalidNode(PPHeapError):
    """A node id does not exist in the index."""

    def __init__(self, node_id):
        self.node_id = node_id
        super().__init__(f"invalid node id {node_id!r}")


class EmptyPattern(PPHeapError):
    """Pattern matching requires a non-empty pattern."""


class StructuralError(PPHeapError):
    """An index violates one of its structural invariants."""


class AlphabetFormatError(PPHeapError):
    """An alphabet description file is malformed."""


class IndexFormatError(PPHeapError):
    """An index file is malformed or has an unsupported version."""
