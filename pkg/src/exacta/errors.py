"""Exception types raised across the package."""


class ExactaError(Exception):
    pass


class PreconditionError(ExactaError, ValueError):
    """An operation was called on inputs outside its contract."""


class NotMonic(PreconditionError):
    pass


class NotEpic(PreconditionError):
    pass


class MalformedInput(ExactaError, ValueError):
    """A table, matrix or presentation failed validation."""


class Unsupported(ExactaError, NotImplementedError):
    """The backend does not provide this construction."""


class ResourceLimit(ExactaError):
    pass


class NoImage(ExactaError):
    """The comparison map of a morphism is not monic, so no image factorization exists."""

    def __init__(self, msg, comparison=None):
        super().__init__(msg)
        self.comparison = comparison


class NotNormal(ExactaError):
    def __init__(self, which, comparison=None):
        super().__init__(f"{which} is not a normal map")
        self.which = which
        self.comparison = comparison


class NonNormalVertical(PreconditionError):
    def __init__(self, name):
        super().__init__(f"vertical map {name} is not normal")
        self.name = name


class NotExact(ExactaError):
    def __init__(self, msg, where=None):
        super().__init__(msg)
        self.where = where
