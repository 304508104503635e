"""Exception hierarchy shared across the package.

``InputError`` subclasses map to CLI exit code 2, ``SizeGuardError`` to 3.
"""


class BvgridError(Exception):
    """Base class for all package errors."""


class InputError(BvgridError):
    """Invalid user-supplied data or configuration (exit code 2)."""


class InstanceMismatchError(InputError):
    """Operands belong to different semigroup instances."""


class MalformedFileError(InputError):
    """Input file is not valid JSON or violates the schema."""


class NonMonotoneGridError(InputError):
    """Grid points are not strictly increasing."""


class DimensionMismatchError(InputError):
    """Value array shape disagrees with the grids."""


class EndpointError(InputError):
    """Grid does not start at 0 and end at 1."""


class ConfigError(InputError):
    """Invalid variation-family configuration or method choice."""


class GeneratorError(InputError):
    """Generator is incompatible with the semigroup instance."""


class PartitionIndexError(InputError):
    """Partition indices do not fit the function's grids."""


class SizeGuardError(BvgridError):
    """Problem size exceeds an exact-search guard (exit code 3)."""
