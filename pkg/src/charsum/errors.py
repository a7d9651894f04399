"""Exception hierarchy shared by all charsum modules."""


class CharsumError(Exception):
    """Base class for every error raised by the package."""


class OracleMismatch(CharsumError):
    """Two independent computations of the same quantity disagreed."""


# fields

class InvalidSpec(CharsumError, ValueError):
    pass


class NotPrime(InvalidSpec):
    pass


class ReducibleModulus(InvalidSpec):
    pass


class DivisionByZero(CharsumError, ZeroDivisionError):
    pass


class MixedFields(CharsumError, TypeError):
    pass


class NoSuchRoot(CharsumError, ValueError):
    pass


# groups

class CapExceeded(CharsumError):
    pass


class NotAMember(CharsumError, KeyError):
    pass


class NotNormal(CharsumError, ValueError):
    pass


class NoComplement(CharsumError, ValueError):
    pass


class NotSolvable(CharsumError, ValueError):
    pass


class InvalidTable(CharsumError, ValueError):
    pass


# presentations and characters

class InvalidPresentation(CharsumError, ValueError):
    pass


class UnknownGenerator(CharsumError, KeyError):
    pass


class InvalidMonomial(CharsumError, ValueError):
    pass


class ConstraintViolated(CharsumError, ValueError):
    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"{which}: {detail}" if detail else which)


class ZeroGrouplikeValue(CharsumError, ValueError):
    pass


class MissingValue(CharsumError, ValueError):
    pass


class MixedPresentations(CharsumError, TypeError):
    pass


# character sums

class NotInNh(CharsumError, ValueError):
    pass


class NotStabilizing(CharsumError, ValueError):
    pass


class FactorConditionFails(CharsumError, ValueError):
    pass


class NotDirect(CharsumError, ValueError):
    pass


# positive characteristic

class WrongCharacteristic(CharsumError, ValueError):
    pass


class NotSquare(CharsumError, ValueError):
    pass


class NotAbelian(CharsumError, ValueError):
    pass


class PseudoPrimitiveLetter(CharsumError, ValueError):
    pass


class CharDividesOrder(CharsumError, ValueError):
    pass


class NotPseudoPrimitive(CharsumError, ValueError):
    pass


class TooManyLetters(CharsumError, ValueError):
    pass


# constructions

class BadShape(CharsumError, ValueError):
    pass


class ZeroTargetDisallowed(CharsumError, ValueError):
    pass


class CharTooSmall(CharsumError, ValueError):
    pass


class BadChain(CharsumError, ValueError):
    pass


# root data

class InvalidRootSystem(CharsumError, ValueError):
    pass


class DependentGenerators(CharsumError, ValueError):
    pass


# command line

class ParseError(CharsumError, ValueError):
    pass


class UnknownSuite(CharsumError, ValueError):
    pass
