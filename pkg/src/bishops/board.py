"""Riders, squares, configurations, and the attack predicate.

A rider attacks along every integral multiple of each of its basic move
vectors; the bishop is the rider with basic moves (1, 1) and (1, -1).
Boards are n x n with 1-based coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


@dataclass(frozen=True, order=True)
class BasicMove:
    """A primitive move direction.

    Negating a move does not change the attack relation, so moves are
    stored reduced by gcd with dx > 0, or dx = 0 and dy > 0.
    """

    dx: int
    dy: int

    def __post_init__(self) -> None:
        if (self.dx, self.dy) == (0, 0):
            raise ValueError("a basic move must be nonzero")
        g = gcd(self.dx, self.dy)
        dx, dy = self.dx // g, self.dy // g
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)


@dataclass(frozen=True)
class Rider:
    """A piece defined by a nonempty set of basic moves.

    Canonicalization makes parallel moves equal, so the stored set never
    holds two moves along the same line.
    """

    name: str
    moves: frozenset[BasicMove]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", frozenset(self.moves))
        if not self.moves:
            raise ValueError("a rider needs at least one basic move")


BISHOP = Rider("bishop", frozenset({BasicMove(1, 1), BasicMove(1, -1)}))


def parse_rider(description: str) -> Rider:
    """Build a rider from a name ("bishop") or a move list "dx,dy;dx,dy"."""
    text = description.strip()
    if text.lower() == "bishop":
        return BISHOP
    moves: list[BasicMove] = []
    for part in text.split(";"):
        fields = part.split(",")
        if len(fields) != 2:
            raise ValueError(f"bad move {part.strip()!r}: expected 'dx,dy'")
        try:
            moves.append(BasicMove(int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise ValueError(f"bad move {part.strip()!r}: {exc}") from None
    return Rider(text, frozenset(moves))


@dataclass(frozen=True, order=True)
class Square:
    """A board cell; coordinates run from 1 to n."""

    x: int
    y: int


@dataclass(frozen=True)
class Configuration:
    """An ordered (labelled) placement of pieces on an n x n board."""

    pieces: tuple[Square, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.n < 0:
            raise ValueError("board size must be nonnegative")
        for square in self.pieces:
            if not (1 <= square.x <= self.n and 1 <= square.y <= self.n):
                raise ValueError(f"{square} is off the {self.n}x{self.n} board")
        if len(set(self.pieces)) != len(self.pieces):
            raise ValueError("pieces must occupy distinct squares")

    @property
    def q(self) -> int:
        return len(self.pieces)


def attacks(a: Square, b: Square, rider: Rider) -> bool:
    """True iff b - a is a nonzero integral multiple of a basic move.

    The squares must be distinct; passing a == b is a caller error.
    Basic moves are primitive, so parallelism (a zero cross product)
    already implies an integral multiple.
    """
    dx, dy = b.x - a.x, b.y - a.y
    if (dx, dy) == (0, 0):
        raise ValueError("attacks() requires two distinct squares")
    return any(move.dx * dy == move.dy * dx for move in rider.moves)


def is_nonattacking(config: Configuration, rider: Rider) -> bool:
    """True iff no two pieces of the configuration attack each other."""
    pieces = config.pieces
    return not any(
        attacks(pieces[i], pieces[j], rider)
        for i in range(len(pieces))
        for j in range(i + 1, len(pieces))
    )
