"""Integral colorings of rational tangles built by twisting.

An arc coloring obeys the rule alpha + gamma = 2*beta at every crossing
(beta on the overstrand). Rational tangles are integrally colorable: color
the two starting strands and propagate while twisting. The four peripheral
colors form the color matrix, whose fraction (ne-nw)/(ne-se) reproduces the
tangle fraction — an independent computation route the test suite plays
against the continued-fraction one.

Twist update rules, from the diagonal-sum recursion with the overstrand
chosen so the coloring fraction tracks the tangle fraction:

    right +1:   (nw, ne, sw, se) -> (nw, 2*ne - se, sw, ne)
    right -1:   (nw, ne, sw, se) -> (nw, se, sw, 2*se - ne)
    bottom +1:  (nw, ne, sw, se) -> (nw, ne, 2*sw - se, sw)
    bottom -1:  (nw, ne, sw, se) -> (nw, ne, se, 2*se - sw)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cf import CFVector, iter_positive_canonical
from .errors import (
    ClosureInconsistent,
    UndefinedColorFraction,
    WrongStartColors,
    ZeroScale,
)
from .fraction import Fraction


@dataclass(frozen=True)
class ColorMatrix:
    """Peripheral colors of a colored 2-tangle; must satisfy the diagonal
    sum rule nw + se = ne + sw."""

    nw: int
    ne: int
    sw: int
    se: int

    def __post_init__(self):
        if self.nw + self.se != self.ne + self.sw:
            raise ValueError("color matrix violates the diagonal sum rule")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.nw, self.ne, self.sw, self.se)

    def to_json(self) -> dict:
        return {"nw": self.nw, "ne": self.ne, "sw": self.sw, "se": self.se}


BuildMove = tuple[str, int]  # ("right" | "bottom", +1 | -1)


@dataclass(frozen=True)
class ColoredTangle:
    """A tangle built by twisting, with its full coloring history.

    arc_colors lists every arc color in creation order, the two starting
    strands first; there is one new arc per crossing. peripheral_arcs
    holds the indices (into arc_colors) of the arcs currently at
    NW, NE, SW, SE — needed to identify arcs when the tangle is closed.
    """

    vector: CFVector
    matrix: ColorMatrix
    arc_colors: tuple[int, ...]
    build_word: tuple[BuildMove, ...]
    peripheral_arcs: tuple[int, int, int, int]

    def crossings(self) -> int:
        return len(self.build_word)


def build_word_for(vector: Sequence[int]) -> tuple[BuildMove, ...]:
    """Twisting schedule of a standard-form vector: the innermost term is
    a horizontal block, blocks alternate bottom/right, and the outermost
    term is horizontal again (odd length guarantees this)."""
    v = tuple(vector)
    if len(v) % 2 == 0:
        raise ValueError("standard-form vectors have odd length")
    if any(a == 0 for a in v[1:]):
        raise ValueError("only the outermost term may be zero")
    word: list[BuildMove] = []
    for pos in range(len(v), 0, -1):
        a = v[pos - 1]
        kind = "right" if pos % 2 == 1 else "bottom"
        sign = 1 if a > 0 else -1
        word.extend((kind, sign) for _ in range(abs(a)))
    return tuple(word)


def color_tangle(vector: Sequence[int], start_top: int = 1, start_bottom: int = 0) -> ColoredTangle:
    """Color the tangle arc by arc while twisting it up from [0].

    With starting colors (1, 0) the coloring fraction of the result equals
    the continued-fraction value of the vector.
    """
    v = tuple(vector)
    word = build_word_for(v)
    colors = [start_top, start_bottom]
    nw, ne, sw, se = 0, 0, 1, 1  # the [0] tangle: top arc spans NW-NE, bottom spans SW-SE
    for kind, sign in word:
        new = len(colors)
        if kind == "right":
            b, d = colors[ne], colors[se]
            if sign > 0:
                colors.append(2 * b - d)
                ne, se = new, ne
            else:
                colors.append(2 * d - b)
                ne, se = se, new
        else:
            c, d = colors[sw], colors[se]
            if sign > 0:
                colors.append(2 * c - d)
                sw, se = new, sw
            else:
                colors.append(2 * d - c)
                sw, se = se, new
    matrix = ColorMatrix(colors[nw], colors[ne], colors[sw], colors[se])
    return ColoredTangle(v, matrix, tuple(colors), word, (nw, ne, sw, se))


def f_of_matrix(m: ColorMatrix) -> Fraction:
    """The coloring fraction (ne - nw)/(ne - se)."""
    if m.ne == m.nw and m.ne == m.se:
        raise UndefinedColorFraction("a constant coloring determines no fraction")
    return Fraction(m.ne - m.nw, m.ne - m.se)


def affine_recolor(m: ColorMatrix, n: int, k: int) -> ColorMatrix:
    """Recolor every arc by e -> n*e + k; any such image is again a valid
    coloring and the fraction is unchanged."""
    if n == 0:
        raise ZeroScale("scaling colors by zero destroys the coloring")
    return ColorMatrix(n * m.nw + k, n * m.ne + k, n * m.sw + k, n * m.se + k)


def rotate_matrix(m: ColorMatrix) -> ColorMatrix:
    """Matrix of the quarter-turn rotate: fraction goes to -1/f."""
    return ColorMatrix(m.ne, m.se, m.nw, m.sw)


def vertical_reflect_matrix(m: ColorMatrix) -> ColorMatrix:
    """Matrix of the vertical reflect: fraction negates."""
    return ColorMatrix(m.ne, m.nw, m.se, m.sw)


def j_map(m: ColorMatrix) -> tuple[int, int]:
    """Complex charge (ne - nw, ne - se); rotation acts as multiplication
    by i, i.e. (x, y) -> (-y, x)."""
    return (m.ne - m.nw, m.ne - m.se)


_VALID_STARTS = {(1, 0), (0, 1)}


def closure_determinant(c: ColoredTangle) -> int:
    """|ne - nw|: the determinant of the numerator closure, equal to the
    absolute numerator of the tangle fraction."""
    if tuple(c.arc_colors[:2]) not in _VALID_STARTS:
        raise WrongStartColors("determinant reading requires starting colors (1,0) or (0,1)")
    return abs(c.matrix.ne - c.matrix.nw)


class _ArcUnion:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)


def closure_coloring_mod(c: ColoredTangle, p: int) -> tuple[int, ...]:
    """Arc residues of the numerator closure N(T) in Z/pZ.

    Closing merges the NW arc with the NE arc and the SW arc with the SE
    arc, which is only consistent when their colors agree mod p — that is
    exactly the condition p | determinant.
    """
    if p < 1:
        raise ValueError("modulus must be a positive integer")
    nw, ne, sw, se = c.peripheral_arcs
    colors = c.arc_colors
    if (colors[nw] - colors[ne]) % p != 0 or (colors[sw] - colors[se]) % p != 0:
        raise ClosureInconsistent(f"closure identifies arcs with unequal colors mod {p}")
    union = _ArcUnion(len(colors))
    union.union(nw, ne)
    union.union(sw, se)
    classes: dict[int, list[int]] = {}
    for idx in range(len(colors)):
        classes.setdefault(union.find(idx), []).append(idx)
    residues = []
    for root in sorted(classes, key=lambda r: min(classes[r])):
        members = classes[root]
        reps = {colors[i] % p for i in members}
        if len(reps) != 1:
            raise ClosureInconsistent(f"arc class carries distinct colors mod {p}")
        residues.append(reps.pop())
    return tuple(residues)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class HararyInstance:
    """Distinctness report for one positive canonical vector."""

    vector: CFVector
    matrix: ColorMatrix
    determinant: int
    arc_colors: tuple[int, ...]
    arc_colors_distinct: bool
    mod_colors: tuple[int, ...] | None  # populated when the determinant is prime
    mod_colors_distinct: bool | None
    passed: bool

    def to_json(self) -> dict:
        return {
            "vector": list(self.vector),
            "matrix": self.matrix.to_json(),
            "det": self.determinant,
            "arcColors": list(self.arc_colors),
            "modColors": None if self.mod_colors is None else list(self.mod_colors),
            "distinct": self.passed,
        }


def harary_check(max_crossings: int) -> list[HararyInstance]:
    """Sweep every positive canonical vector up to the crossing bound.

    For each instance the integral arc colors must be mutually distinct;
    when the closure determinant is prime p, the closure residues mod p
    must take exactly crossing-count many distinct values. Failures are
    reported, never raised.
    """
    report = []
    for vector in iter_positive_canonical(max_crossings):
        colored = color_tangle(vector, 1, 0)
        distinct = len(set(colored.arc_colors)) == len(colored.arc_colors)
        det = closure_determinant(colored)
        mod_colors = None
        mod_distinct = None
        if _is_prime(det):
            mod_colors = closure_coloring_mod(colored, det)
            mod_distinct = len(set(mod_colors)) == colored.crossings()
        passed = distinct and mod_distinct is not False
        report.append(
            HararyInstance(
                vector, colored.matrix, det, colored.arc_colors, distinct, mod_colors, mod_distinct, passed
            )
        )
    return report
