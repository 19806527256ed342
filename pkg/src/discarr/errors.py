"""Exception types shared across the toolkit."""


class DiscarrError(Exception):
    """Base class for all toolkit errors."""


class GenericityError(DiscarrError):
    """A base arrangement failed its genericity certificate (some k x k minor vanishes)."""


class ScaleGuardError(DiscarrError):
    """An instance exceeds the desk-scale guard of the requested operation."""
