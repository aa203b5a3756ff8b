"""Exception types shared across the library.

The CLI maps these onto process exit codes: InputError -> 2,
CapacityError -> 3.  InternalError signals a broken invariant that no
input should be able to trigger.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class CapacityError(RuntimeError):
    """A configured size bound was exceeded; the message names the bound."""


class InternalError(RuntimeError):
    """An internal consistency check failed (library bug, not user error)."""
