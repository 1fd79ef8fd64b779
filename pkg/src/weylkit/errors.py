class WeylError(ValueError):
    """Base class for domain errors raised by weylkit."""


class GroupTooLarge(WeylError):
    pass


class RadiusExceeded(WeylError):
    pass
