"""Exception types shared across the package.

The CLI maps InputError to exit code 1 and InternalConsistencyError to exit
code 2; everything else is a plain bug.
"""


class InputError(ValueError):
    """Invalid user input: bad graph document, precondition violation, bad flags."""


class InternalConsistencyError(RuntimeError):
    """A mathematical invariant the implementation guarantees was violated.

    Raised when two internal computation routes disagree (e.g. a coefficient
    outside its degree bounds).  Indicates a bug, never bad input.
    """
