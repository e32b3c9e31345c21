"""Exception types raised across the package."""


class ParameterDomainError(ValueError):
    """A physical parameter lies outside its allowed domain."""


class ConfigurationError(ValueError):
    """An input object (drive table, sweep spec, config file) is malformed."""


class DegenerateInputError(ValueError):
    """The requested quantity is undefined for the given input (e.g. zero herald mass)."""


class UnsupportedOrderError(ValueError):
    """Correlator order or enumeration size beyond what the oracle handles."""


class LowIntensityError(ValueError):
    """Joint photon table violates the low-intensity truncation guard."""

    def __init__(self, message, entry=None):
        super().__init__(message)
        self.entry = entry
