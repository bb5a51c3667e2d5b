"""Exception hierarchy shared by all modules."""


class LatticeError(ValueError):
    """Base class for every error raised by :mod:`tolfca`."""


class DuplicateLabel(LatticeError):
    def __init__(self, label):
        super().__init__(f"duplicate element label {label!r}")
        self.label = label


class UnknownLabel(LatticeError):
    def __init__(self, label):
        super().__init__(f"unknown element label {label!r}")
        self.label = label


class CycleDetected(LatticeError):
    def __init__(self, x, y):
        super().__init__(f"order is not antisymmetric: {x!r} <= {y!r} <= {x!r}")
        self.pair = (x, y)


class NotALattice(LatticeError):
    def __init__(self, x, y, kind):
        super().__init__(f"elements {x!r} and {y!r} have no unique {kind}")
        self.pair = (x, y)
        self.kind = kind


class EmptyInput(LatticeError):
    pass


class SizeBound(LatticeError):
    pass


class HostMismatch(LatticeError):
    pass


class NotATolerance(LatticeError):
    pass


class NotAWeakOrderedRelation(LatticeError):
    pass


class NotAJoinEndomorphism(LatticeError):
    pass


class FactorNotALattice(LatticeError):
    pass


class CorrespondenceViolation(LatticeError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmbeddingViolation(LatticeError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownCheckId(LatticeError):
    pass


class FormatError(LatticeError):
    pass
