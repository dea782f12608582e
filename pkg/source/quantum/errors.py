class QuantumError(ValueError):
    """Base class for every rejected input in the toolkit."""


class DimensionError(QuantumError):
    pass


class InvariantError(QuantumError):
    """A value-type invariant (Hermiticity, idempotency, normalization, ...) does not hold."""


class DegenerateStateError(QuantumError):
    """Zero or near-zero vector where a ray is required."""


class ExtrapolationError(QuantumError):
    pass


class CommensurabilityError(QuantumError):
    pass


class SpecError(QuantumError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
