"""Exception hierarchy shared across the package.

Every error carries a short machine-readable ``error_code`` so the CLI can
emit structured errors (``--json-errors``) and map failures to exit codes.
"""


class ExpertAllocError(Exception):
    """Base class for all package-specific errors."""

    error_code = "error"


class ShapeError(ExpertAllocError, ValueError):
    """Operands have incompatible shapes. The message names both shapes."""

    error_code = "shape"


class ConfigurationError(ExpertAllocError, ValueError):
    """A configuration object or CLI flag combination is invalid/infeasible."""

    error_code = "config"


class ProfileLookupError(ExpertAllocError, KeyError):
    """A (layer, k) cell required by the allocator is missing from a profile."""

    error_code = "lookup"


class IntegrityError(ExpertAllocError):
    """Stored data fails its recorded checksum."""

    error_code = "integrity"


class FormatError(ExpertAllocError):
    """A file is not in a readable format (bad version, truncated, malformed)."""

    error_code = "format"
