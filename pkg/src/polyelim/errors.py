"""Exception hierarchy shared by all modules."""


class PolyElimError(Exception):
    """Base class for all library errors."""


class DimensionError(PolyElimError):
    """Variable counts of the operands do not match."""


class HomogeneityError(PolyElimError):
    """A term violates the declared homogeneous degree."""


class DegreeError(PolyElimError):
    """Degrees are inconsistent with what the operation requires."""


class ShapeError(PolyElimError):
    """Matrix or system shape is not the one the formula is defined for."""


class AntisymmetryError(PolyElimError):
    """Pfaffian input is not exactly antisymmetric."""


class EulerError(PolyElimError):
    """Complex has nonzero Euler characteristic, no determinant exists."""


class DegenerateError(PolyElimError):
    """No basis-subset choice yields nonzero denominator minors."""


class SquarenessError(PolyElimError):
    """An assembled determinantal matrix failed to come out square."""


class RangeError(PolyElimError):
    """Requested order exceeds what the defining formula supports."""


class PoleError(PolyElimError):
    """Hypergeometric lower parameter hits a non-positive integer."""


class DomainError(PolyElimError):
    """Numeric evaluation requested outside the region of validity."""
