"""Exception hierarchy. Every library error derives from :class:`CutGroupsError`."""


class CutGroupsError(Exception):
    pass


class InvalidPermutation(CutGroupsError, ValueError):
    pass


class ClosureCapExceeded(CutGroupsError):
    pass


class UnknownCatalogName(CutGroupsError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidParams(CutGroupsError, ValueError):
    pass


class SubgroupNotInParent(CutGroupsError, ValueError):
    pass


class NotNormal(CutGroupsError, ValueError):
    pass


class NotAnAction(CutGroupsError, ValueError):
    pass


class NotNilpotent(CutGroupsError, ValueError):
    pass


class InternalInvariantViolation(CutGroupsError, AssertionError):
    pass


class GroupMismatch(CutGroupsError, ValueError):
    pass


class NotCoprime(CutGroupsError, ValueError):
    pass


class TrivialOrder(CutGroupsError, ValueError):
    pass


class NotCentralUnit(CutGroupsError, ValueError):
    pass


class LatticeCapExceeded(CutGroupsError):
    pass


class NotInfinite(CutGroupsError, ValueError):
    pass


class NotMetacyclicAction(CutGroupsError, ValueError):
    pass


class AbelianCase(CutGroupsError, ValueError):
    """Raised for r = 1: the group is abelian and is cut iff its torsion
    has exponent dividing 4 or 6."""


class UnsupportedCase(CutGroupsError, ValueError):
    pass


class ZeroParameter(CutGroupsError, ValueError):
    pass


class MissingFlags(CutGroupsError, ValueError):
    pass


class IncompatibleExponent(CutGroupsError, ValueError):
    pass


class SpecError(CutGroupsError, ValueError):
    """Malformed group-spec document."""
