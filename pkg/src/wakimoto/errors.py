"""Shared exception types."""


class WakimotoError(Exception):
    """Base class for all package errors."""


class InvalidRank(WakimotoError):
    pass


class DimensionError(WakimotoError):
    pass


class InvalidWeylWord(WakimotoError):
    pass


class InvalidForm(WakimotoError):
    pass


class NotNilpotent(WakimotoError):
    pass


class NotInNilradical(WakimotoError):
    pass


class NotSimpleRoot(WakimotoError):
    pass


class ModuleMismatch(WakimotoError):
    pass


class EmptyWindow(WakimotoError):
    pass


class EmptyWeightSpace(WakimotoError):
    pass


class UseBracketClosure(WakimotoError):
    pass


class RealizationBug(WakimotoError):
    pass


class SizeMismatch(WakimotoError):
    pass
