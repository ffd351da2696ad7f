"""Exception hierarchy shared by the library and the command line."""


class RealGrassError(Exception):
    """Base class for every error raised by :mod:`realgrass`."""


class RangeError(RealGrassError, ValueError):
    """An index, degree or shape parameter is out of its allowed range."""


class ValidationError(RealGrassError, ValueError):
    """Malformed input: a bad Schubert symbol, a word that is not a lattice path, ..."""


class CapacityError(RealGrassError):
    """The requested shape exceeds the configured size guard."""


class FalsificationError(RealGrassError):
    """Two independent computations disagree.

    This is never expected to happen; it signals either an implementation bug
    or a counterexample to one of the closed-form results.
    """
