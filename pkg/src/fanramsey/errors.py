"""Exception types shared across the package."""


class FanRamseyError(Exception):
    """Base class for package-specific failures."""


class UnsupportedRangeError(FanRamseyError):
    """Parameters fall outside the range an operation supports."""


class SizeGuardError(UnsupportedRangeError):
    """Instance exceeds the size guard of an exhaustive routine."""


class ParseError(FanRamseyError):
    """Malformed input file; message carries the offending position."""


class FanExtensionError(FanRamseyError):
    """Fan extension rejected an instance.

    ``failures`` lists every violated precondition, one entry per check,
    so callers can see exactly which hypothesis broke.
    """

    def __init__(self, failures):
        failures = tuple(failures)
        super().__init__("; ".join(failures) if failures else "fan extension failed")
        self.failures = failures
