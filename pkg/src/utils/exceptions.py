"""
Kernel exception hierarchy.

InputError subclasses are user mistakes (bad syntax, bad indices).
PreconditionError subclasses mean a theorem hypothesis does not hold for the
query; the CLI maps them to a separate exit code.
"""

from fractions import Fraction
from typing import Iterable, Sequence


class KernelError(Exception):
    """Base class for all kernel errors"""


class InputError(KernelError, ValueError):
    """Malformed or out-of-range input"""


class PreconditionError(KernelError, ValueError):
    """A mathematical precondition of the requested computation is violated"""


# ---- input errors ----


class ParseError(InputError):
    """Expression text does not match the grammar"""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = sorted(set(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class MissingAssignment(InputError):
    """A variable of the polynomial has no value in the evaluation point"""


class NegativeIndex(InputError):
    """Symmetric-function index must be non-negative"""


class PartitionTooLong(InputError):
    """Partition has more non-zero parts than the alphabet has variables"""


class IndexOutOfRange(InputError):
    """Index outside 1..n"""


class ExponentOverflow(InputError):
    """Exponent does not fit in a machine word"""


# ---- precondition errors ----


class DegreeTooHigh(PreconditionError):
    """Total degree exceeds the bound of the identity"""


class PartialDegreeTooHigh(PreconditionError):
    """Some partial degree exceeds the bound of the identity"""


class NotSymmetric(PreconditionError):
    """Polynomial is not symmetric in the declared alphabet"""


class NotDoublySymmetric(PreconditionError):
    """Polynomial is not symmetric in the x-alphabet and the y-alphabet separately"""


class DegreeExceedsDimension(PreconditionError):
    """Integrand has a homogeneous component above the dimension of G(k,n)"""


class NotConstant(PreconditionError):
    """Localization sum differs between two weight vectors"""

    def __init__(
        self,
        first_weights: Sequence[Fraction],
        first_value: Fraction,
        second_weights: Sequence[Fraction],
        second_value: Fraction,
    ):
        self.first_weights = tuple(first_weights)
        self.first_value = first_value
        self.second_weights = tuple(second_weights)
        self.second_value = second_value
        super().__init__(
            f"localization sum is not constant: {_fmt(first_weights)} -> {first_value}, "
            f"{_fmt(second_weights)} -> {second_value}"
        )


def _fmt(weights: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(w) for w in weights) + ")"
