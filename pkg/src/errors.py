from __future__ import annotations


class MeshPermError(Exception):
    exit_code = 1


class UsageError(MeshPermError):
    exit_code = 2


class ConfigError(UsageError):
    pass


class BudgetExceeded(MeshPermError):
    exit_code = 3


# perm_core
class NotAPermutation(MeshPermError):
    pass


class DimensionTooSmall(MeshPermError):
    pass


class DimensionMismatch(MeshPermError):
    pass


class IndexOutOfRange(MeshPermError):
    pass


class SameIndex(MeshPermError):
    pass


# pattern grammar
class PatternSyntaxError(UsageError):
    pass


class RaggedColumns(PatternSyntaxError):
    pass


class DuplicateColumn(PatternSyntaxError):
    pass


class BadSymbol(PatternSyntaxError):
    pass


class NotProjective(MeshPermError):
    pass


class NotHyperplane(MeshPermError):
    pass


# rank / construct
class CapacityExceeded(MeshPermError):
    pass


class RankInfinite(MeshPermError):
    pass


class LengthTooShort(MeshPermError):
    pass


class UnrealizableSignature(MeshPermError):
    pass


class SomePatternUnavoidable(MeshPermError):
    pass


class HasMinusAntipodalSubset(MeshPermError):
    pass


class BadAlphabet(PatternSyntaxError):
    pass


class MissingRequiredSymbol(MeshPermError):
    pass


class OutsideBijectionImage(MeshPermError):
    pass


class ConstructionFailed(MeshPermError):
    """A construction produced data that failed its own verification."""


# enumeration / series
class EnumerationError(MeshPermError):
    pass


class UnknownCase(UsageError):
    pass


class TruncationTooShort(MeshPermError):
    pass


class NotAUnit(MeshPermError):
    pass
