# -*- coding: utf-8 -*-


class SchurRigidError(Exception):
    pass


class InputError(SchurRigidError):
    pass


class InvalidTypeError(InputError):
    pass


class AddressError(InputError):
    pass


class WordError(InputError):
    pass


class IndexOutOfRangeError(InputError):
    pass


class NotARootError(InputError):
    pass


class NotMinimalError(InputError):
    pass


class ParabolicError(InputError):
    pass


class ChartError(InputError):
    pass


class PointsFileError(InputError):
    pass


class DescriptorError(InputError):
    pass


class EnumerationLimitError(InputError):
    pass


class InvariantViolation(SchurRigidError):
    pass


class RealizationError(InvariantViolation):
    pass


class CatalogError(InvariantViolation):
    pass
