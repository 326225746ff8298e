"""Exception hierarchy shared by all lcseq modules."""


class LcseqError(Exception):
    """Base class for every error raised by this package."""


class NotPrimeError(LcseqError):
    """Field characteristic is not a prime number."""


class BadModulusError(LcseqError):
    """Extension modulus is missing, non-monic, of wrong degree, or reducible."""


class FieldMismatchError(LcseqError):
    """Operands belong to different fields."""


class LengthMismatchError(LcseqError):
    """Operands have incompatible lengths."""


class BadParamsError(LcseqError):
    """Numeric parameters outside the documented domain."""


class DegreeExceedsOrderError(LcseqError):
    """Polynomial degree is larger than the reversal window allows."""


class BadRegimeError(LcseqError):
    """The persymmetric reduction is not defined for this (sequence, order) pair."""


class DegenerateSetError(LcseqError):
    """A set operation needs at least two elements."""


class EmptySequenceError(LcseqError):
    """Operation undefined on the empty sequence."""


class DuplicatePointError(LcseqError):
    """Interpolation received two points with the same x-coordinate."""


class ParseError(LcseqError):
    """Malformed textual input; message carries the offending token position."""


class InexactDivisionError(LcseqError):
    """A division that must be exact left a remainder (internal consistency bug)."""


class GuardExceededError(LcseqError):
    """A brute-force sweep would exceed its configured size guard."""


class OracleTooLargeError(GuardExceededError):
    """Exhaustive register/sequence enumeration too large to run."""


class TooLargeError(GuardExceededError):
    """Pairwise sweep over the given set exceeds the pair-count guard."""


class DecodeFailure(LcseqError):
    """Received word lies outside the unique-decoding guarantee."""
