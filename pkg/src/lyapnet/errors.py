"""Exception types shared across the package."""


class ContractViolationError(ValueError):
    """An operation was called with arguments violating its preconditions."""


class IntegrationOverflowError(RuntimeError):
    """A state or tangent vector left the representable range during integration."""


class RankDeficiencyError(RuntimeError):
    """Gram-Schmidt hit a numerically dependent column set."""


class DatasetShortageError(RuntimeError):
    """A sample pool is too small to fill the requested splits after dedup."""


class ModelLoadError(RuntimeError):
    """A model or dataset file is corrupt or incompatible."""


class NumericFaultError(RuntimeError):
    """A non-finite value appeared inside network evaluation or training."""
