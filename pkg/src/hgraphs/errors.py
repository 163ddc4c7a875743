class StructuralError(ValueError):
    """Input is malformed at the type level (wrong keys, broken invariants)."""


class OracleCapError(RuntimeError):
    """A brute-force oracle refused because the instance exceeds its hard cap."""


class PromiseViolation(RuntimeError):
    """A promise-based routine detected that the promise does not hold."""


class CyclePattern(ValueError):
    """Pattern is a cycle; the caller should use a circular-arc routine instead."""
