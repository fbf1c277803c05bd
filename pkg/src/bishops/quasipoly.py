"""Quasipolynomials with exact rational coefficients.

A quasipolynomial of period p is a list of p ordinary polynomials
("constituents"); the one used at integer n is selected by the least
nonnegative residue of n mod p, which keeps evaluation well defined at
zero and negative arguments.  Interpolation recovers constituents from
exact integer samples by elimination, one residue class at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from . import linalg
from .counting import count_bishops_fast

Rational = Fraction


class InterpolationError(ValueError):
    """Base class for interpolation failures."""


class InsufficientSamplesError(InterpolationError):
    """Some residue class has fewer samples than unknown coefficients."""

    def __init__(self, residue: int, period: int, needed: int, got: int):
        super().__init__(
            f"residue class {residue} (mod {period}) has {got} samples "
            f"but needs {needed}")
        self.residue = residue
        self.period = period
        self.needed = needed
        self.got = got


class InconsistentSamplesError(InterpolationError):
    """An overdetermined system has no solution, so the degree or period
    hypothesis is wrong for the data."""


@dataclass(frozen=True)
class Quasipolynomial:
    """``constituents[r]`` holds the coefficients of the residue-r
    polynomial, ordered from the n^degree term down to the constant."""

    period: int
    degree: int
    constituents: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError("period must be positive")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.constituents)
        object.__setattr__(self, "constituents", rows)
        if len(rows) != self.period:
            raise ValueError("need exactly one constituent per residue class")
        if any(len(row) != self.degree + 1 for row in rows):
            raise ValueError("each constituent needs degree + 1 coefficients")

    def evaluate(self, n: int) -> Fraction:
        """Value at any integer n; n % period in Python is already the
        least nonnegative residue, negative n included."""
        value = Fraction(0)
        for coefficient in self.constituents[n % self.period]:
            value = value * n + coefficient
        return value

    def coefficient(self, i: int, r: int) -> Fraction:
        """gamma_i of the residue-r constituent, the coefficient of
        n^(degree - i)."""
        if not 0 <= i <= self.degree:
            raise IndexError(f"coefficient index {i} outside 0..{self.degree}")
        if not 0 <= r < self.period:
            raise IndexError(f"residue {r} outside 0..{self.period - 1}")
        return self.constituents[r][i]

    def minimize_period(self) -> "Quasipolynomial":
        """Equal quasipolynomial with the smallest period that still
        reproduces every constituent."""
        for p in range(1, self.period + 1):
            if self.period % p != 0:
                continue
            if all(self.constituents[r] == self.constituents[r % p]
                   for r in range(self.period)):
                if p == self.period:
                    return self
                return Quasipolynomial(p, self.degree, self.constituents[:p])
        raise AssertionError("a period always divides itself")

    def verify_against(self, samples: Mapping[int, int]) -> bool:
        """True iff evaluation matches every sample exactly."""
        return all(self.evaluate(n) == value for n, value in samples.items())

    def coefficient_periods(self) -> list[int]:
        """Smallest period of each coefficient sequence gamma_i(n),
        i = 0..degree.  Observational; nothing in the package depends
        on these values."""
        periods = []
        for i in range(self.degree + 1):
            for p in range(1, self.period + 1):
                if self.period % p != 0:
                    continue
                if all(self.constituents[r][i] == self.constituents[r % p][i]
                       for r in range(self.period)):
                    periods.append(p)
                    break
        return periods

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "constituents": [
                [f"{c.numerator}/{c.denominator}" for c in row]
                for row in self.constituents
            ],
        }

    def to_json(self) -> str:
        import json

        return json.dumps(self.to_json_dict(), indent=2)

    def pretty(self) -> str:
        """One human-readable polynomial per residue class."""
        lines = []
        for r, row in enumerate(self.constituents):
            terms = []
            for i, c in enumerate(row):
                if c == 0:
                    continue
                power = self.degree - i
                if power == 0:
                    body = str(abs(c))
                elif power == 1:
                    body = f"{abs(c)}*n" if abs(c) != 1 else "n"
                else:
                    body = f"{abs(c)}*n^{power}" if abs(c) != 1 else f"n^{power}"
                sign = "-" if c < 0 else "+"
                terms.append((sign, body))
            if not terms:
                text = "0"
            else:
                first_sign, first_body = terms[0]
                text = ("-" if first_sign == "-" else "") + first_body
                for sign, body in terms[1:]:
                    text += f" {sign} {body}"
            lines.append(f"n = {r} (mod {self.period}): {text}")
        return "\n".join(lines)


def interpolate(samples: Mapping[int, int], degree: int, period: int,
                leading: Fraction | None = None) -> Quasipolynomial:
    """The unique quasipolynomial of this degree and period through the
    samples, solved exactly per residue class.

    With ``leading`` supplied, gamma_0 is fixed in advance and each class
    needs only ``degree`` samples instead of degree + 1.  Extra samples
    overdetermine the system; any contradiction raises
    InconsistentSamplesError instead of being averaged away.
    """
    if period < 1:
        raise ValueError("period must be positive")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    for n in samples:
        if not isinstance(n, int) or n < 1:
            raise ValueError("sample keys must be positive integers")
    items = sorted(samples.items())
    unknowns = degree + 1 if leading is None else degree
    constituents = []
    for r in range(period):
        points = [(n, value) for n, value in items if n % period == r]
        if len(points) < unknowns:
            raise InsufficientSamplesError(r, period, unknowns, len(points))
        rows = []
        rhs = []
        for n, value in points:
            if leading is None:
                rows.append([Fraction(n) ** (degree - i) for i in range(degree + 1)])
                rhs.append(Fraction(value))
            else:
                rows.append([Fraction(n) ** (degree - i) for i in range(1, degree + 1)])
                rhs.append(Fraction(value) - Fraction(leading) * Fraction(n) ** degree)
        solution = linalg.solve(rows, rhs)
        if solution.status == linalg.INCONSISTENT:
            raise InconsistentSamplesError(
                f"samples in residue class {r} (mod {period}) admit no "
                f"degree-{degree} polynomial; the degree or period "
                f"hypothesis is wrong")
        if solution.status != linalg.UNIQUE:
            # distinct positive keys give the Vandermonde block full
            # column rank, so this cannot happen with valid input
            raise InterpolationError(
                f"residue class {r} (mod {period}) is underdetermined")
        coefficients = solution.point
        if leading is not None:
            coefficients = [Fraction(leading)] + coefficients
        constituents.append(tuple(coefficients))
    return Quasipolynomial(period, degree, tuple(constituents))


def interpolate_bishops(q: int, *, period: int = 2) -> Quasipolynomial:
    """Counting quasipolynomial of q bishops from fast counts at
    n = 1..2q*period, using the known leading coefficient 1/q!.

    With the default period 2 this is the minimal budget of 4q samples.
    The result is raw (period as given); callers decide whether to
    minimize or verify it.
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    top = 2 * q * period
    samples = {n: count_bishops_fast(q, n) for n in range(1, top + 1)}
    return interpolate(samples, 2 * q, period,
                       leading=Fraction(1, factorial(q)))
