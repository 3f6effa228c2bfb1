"""The two-generator game: turn (negative reciprocal) and add (plus one).

These two moves generate every rational tangle from [0]. Applying
add-then-turn three times is the identity, which yields a five-move macro
for subtracting one, and the whole system is a faithful shadow of SL(2,Z)
acting on fraction columns via the matrices for turn and add.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .cf import Mat2, IDENTITY, subtractive_expand
from .errors import AlreadySolved, ParseError
from .fraction import Fraction, ONE, ZERO


class Move(Enum):
    TURN = "T"
    ADD = "A"

    def __repr__(self) -> str:
        return f"Move.{self.name}"


MoveWord = tuple[Move, ...]

TURN = Move.TURN
ADD = Move.ADD


def word_to_text(word: Iterable[Move]) -> str:
    return "".join(m.value for m in word)


def word_from_text(text: str) -> MoveWord:
    try:
        return tuple(Move(ch) for ch in text)
    except ValueError:
        raise ParseError("move words use only 'T' and 'A'", 0, len(text), ("T", "A")) from None


@dataclass(frozen=True)
class DanceState:
    """A game in progress: where the dancers are, where they are going,
    and every move made so far (replaying history from 0 gives current)."""

    current: Fraction
    target: Fraction
    history: MoveWord = ()

    @property
    def solved(self) -> bool:
        return self.current == self.target


def move_value(x: Fraction, m: Move) -> Fraction:
    if m is TURN:
        return x.neg_reciprocal()
    return x + ONE


def apply_move(s: DanceState, m: Move) -> DanceState:
    return DanceState(move_value(s.current, m), s.target, s.history + (m,))


def replay(word: Iterable[Move], start: Fraction = ZERO) -> Fraction:
    x = start
    for m in word:
        x = move_value(x, m)
    return x


def subtract_macro() -> MoveWord:
    """Five moves that subtract one from any state:
    x - 1 = -1/(-1/(-1/x + 1) + 1)."""
    return (TURN, ADD, TURN, ADD, TURN)


M_TURN = Mat2(0, -1, 1, 0)
M_ADD = Mat2(1, 1, 0, 1)


def word_to_matrix(word: Sequence[Move]) -> Mat2:
    """The SL(2,Z) element a word realizes.

    Moves act on fraction columns by left multiplication, so the product
    runs last move leftmost; applied to the column (0, 1) it reproduces a
    replay from 0.
    """
    m = IDENTITY
    for mv in word:
        m = (M_TURN if mv is TURN else M_ADD) * m
    return m


def column_fraction(x: int, y: int) -> Fraction:
    """Fraction of a column vector: (a, b) stands for a/b."""
    return Fraction(x, y)


def solve_target(target: Fraction) -> MoveWord:
    """A word that reaches the target from 0.

    Built from the subtractive expansion b1 - 1/(b2 - ...): interior terms
    are >= 2 so each contributes a pure add block followed by a turn, and
    a negative leading term is handled by repeating the subtract macro.
    The infinite point is one turn away from 0.
    """
    if target.is_infinite:
        return (TURN,)
    terms = subtractive_expand(target)
    b1, rest = terms[0], terms[1:]
    word: list[Move] = []
    for b in reversed(rest):
        word.extend([ADD] * b)
        word.append(TURN)
    if b1 > 0:
        word.extend([ADD] * b1)
    elif b1 < 0:
        word.extend(subtract_macro() * (-b1))
    return tuple(word)


def hint(s: DanceState) -> Move:
    """First move of a sound path from the current state to the target.

    The path walks history backwards (turn is its own inverse; add inverts
    to the subtract macro) and then replays the solver word from 0, with
    leading turn-turn pairs cancelled.
    """
    if s.current == s.target:
        raise AlreadySolved("state already equals the target")
    inverse: list[Move] = []
    for m in reversed(s.history):
        if m is TURN:
            inverse.append(TURN)
        else:
            inverse.extend(subtract_macro())
    word = tuple(inverse) + solve_target(s.target)
    while len(word) >= 2 and word[0] is TURN and word[1] is TURN:
        word = word[2:]
    assert word, "an empty path implies current == target"
    return word[0]
