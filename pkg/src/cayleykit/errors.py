"""Exception hierarchy. Everything raised on bad algebraic input derives from AlgebraError."""


class AlgebraError(ValueError):
    pass


class DuplicateLabel(AlgebraError):
    def __init__(self, label):
        super().__init__(f"duplicate label {label}")
        self.label = label


class ShapeMismatch(AlgebraError):
    pass


class NotClosed(AlgebraError):
    """Raised when a product falls outside the carrier.

    ``offenders`` holds every ``(x, y, x*y)`` triple (labels) that escapes,
    in carrier order; ``pair`` and ``product`` describe the first one.
    """

    def __init__(self, offenders, op="*"):
        offenders = list(offenders)
        x, y, p = offenders[0]
        super().__init__(f"not closed: {x} {op} {y} = {p} is outside the set")
        self.offenders = offenders
        self.pair = (x, y)
        self.product = p


class EmptySubset(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    def __init__(self, triple=None, msg=None):
        if msg is None:
            msg = "operation is not associative"
            if triple is not None:
                x, y, z = triple
                msg += f": ({x}*{y})*{z} != {x}*({y}*{z})"
        super().__init__(msg)
        self.triple = triple


class NotIdempotent(AlgebraError):
    pass


class NotMonoid(AlgebraError):
    pass


class TooLarge(AlgebraError):
    pass


class AddNotAbelianGroup(AlgebraError):
    pass


class MulNotAssociative(NotAssociative):
    pass


class NotDistributive(AlgebraError):
    def __init__(self, triple, side):
        x, y, z = triple
        if side == "left":
            msg = f"left distributivity fails: {x}*({y}+{z}) != {x}*{y}+{x}*{z}"
        else:
            msg = f"right distributivity fails: ({y}+{z})*{x} != {y}*{x}+{z}*{x}"
        super().__init__(msg)
        self.triple = triple
        self.side = side


class InvalidSpec(AlgebraError):
    pass


class SinkFailure(AlgebraError):
    pass


class TableFormatError(AlgebraError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line
