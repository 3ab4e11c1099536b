"""Wall-clock budgets for potentially factorial-size enumerations."""

import time

from .errors import TimeBudgetExceeded


class Deadline:
    """A monotonic-clock deadline checked inside long enumeration loops.

    Loops that can blow up (transport-set sums, shuffle searches, block
    sweeps) call :meth:`check` periodically; once the budget is spent the
    enclosing computation aborts with :class:`TimeBudgetExceeded` carrying
    a note about where it stopped.
    """

    __slots__ = ("_limit", "seconds")

    def __init__(self, seconds: float):
        if seconds <= 0:
            raise ValueError("time budget must be positive")
        self.seconds = seconds
        self._limit = time.monotonic() + seconds

    def check(self, where: str = "enumeration") -> None:
        if time.monotonic() > self._limit:
            raise TimeBudgetExceeded(
                f"time budget of {self.seconds:g}s exceeded during {where}"
            )


def check(deadline: Deadline | None, where: str = "enumeration") -> None:
    """Check an optional deadline; no-op when none was requested."""
    if deadline is not None:
        deadline.check(where)
