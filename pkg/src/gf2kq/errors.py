"""Exception types shared across the package."""


class Gf2kqError(Exception):
    """Base class for all package errors."""


class InputError(Gf2kqError, ValueError):
    """A caller violated an argument precondition."""


class SynthesisError(Gf2kqError):
    """Internal synthesis invariant broken (indicates a builder bug)."""


class UnsupportedFamilyError(Gf2kqError):
    """The requested construction needs a modulus family this one is not in."""


class FormError(Gf2kqError):
    """A circuit is not in the form an operation requires."""


class NetlistParseError(Gf2kqError):
    """Malformed netlist text.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class SimulationError(Gf2kqError):
    """The simulator cannot evaluate the given circuit on basis states."""


class CatalogError(Gf2kqError, LookupError):
    """No catalog entry matches the request."""
