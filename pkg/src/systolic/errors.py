class DomainError(ValueError):
    """An argument lies outside the domain where a bound or construction is valid."""


class CountBoundViolation(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        ts = ", ".join(f"{t:g}" for t in self.violations)
        super().__init__(f"orbit count exceeds the packing bound at T = {ts}")


class EnumerationError(DomainError):
    """Raised when group enumeration cannot be trusted (hash collision, no stabilization)."""

    def __init__(self, message, saturated_depth_flag=False):
        super().__init__(message)
        self.saturated_depth_flag = saturated_depth_flag
