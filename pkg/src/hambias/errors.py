"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own class;
the CLI maps each one to a distinct exit code.
"""

from __future__ import annotations


class HambiasError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(HambiasError):
    """A coloured-graph or cycle file violates the text format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonEdgeError(HambiasError):
    """An edge lookup referred to a vertex pair the graph does not join."""


class DegreeHypothesisError(HambiasError):
    """The input violates a minimum-degree hypothesis.

    Carries the first failing vertex and its degree so callers can report
    exactly where the bound breaks.
    """

    def __init__(self, message: str, vertex: int, degree: int, required: str):
        super().__init__(message)
        self.vertex = vertex
        self.degree = degree
        self.required = required


class InfeasibilityError(HambiasError):
    """A search step ran out of admissible choices under a relaxed hypothesis."""


class BiasGuaranteeError(HambiasError):
    """Neither assembled cycle met the promised colour bias.

    Unreachable when the strict degree hypothesis holds; kept as a hard check
    rather than an assert so permissive runs fail loudly too.
    """

    def __init__(self, message: str, cycles=()):
        super().__init__(message)
        self.cycles = tuple(cycles)


class BestEffortFailedError(HambiasError):
    """Permissive solve found no sufficiently unbalanced Hamilton cycle.

    Carries the most unbalanced cycle seen so callers can still inspect it.
    """

    def __init__(self, message: str, best_cycle=None, counts=None):
        super().__init__(message)
        self.best_cycle = best_cycle
        self.counts = counts


class EnumerationSizeError(HambiasError):
    """Exhaustive enumeration was asked to run above its size guard."""


class InternalInvariantError(HambiasError):
    """An invariant the construction guarantees failed at runtime.

    Raising instead of silently continuing is deliberate: any occurrence on an
    input that satisfies the stated hypotheses is a bug in this package.
    """
