"""Exception hierarchy shared by every module."""


class LeavittError(Exception):
    """Base class for all library errors."""


class RingMismatch(LeavittError, ValueError):
    pass


class UnsupportedRing(LeavittError, ValueError):
    pass


class NotUnitary(LeavittError, ValueError):
    pass


class NotReducible(LeavittError, ValueError):
    pass


class NotInUV(LeavittError, ValueError):
    """Raised by ``from_unitary``; ``reason`` is a short machine-readable tag."""

    def __init__(self, reason, detail=""):
        self.reason = reason
        self.detail = detail
        msg = f"not in U_V ({reason})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotCommuting(LeavittError, ValueError):
    pass


class InfeasibleDegree(LeavittError, ValueError):
    pass


class NotProjection(LeavittError, ValueError):
    pass


class NotStandardizable(LeavittError, ValueError):
    pass


class ZeroProjection(LeavittError, ValueError):
    pass


class CornerConditionViolated(LeavittError, ValueError):
    pass
