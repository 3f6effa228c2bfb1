"""Tangle expressions and the fraction/canonical-form pipeline.

Expressions are finite immutable trees over the zero and infinite tangles,
horizontal integer twists, sum, product, mirror, inversion and quarter-turn
rotation. The vertical n-twist tangle is spelled Invert(IntTangle(n)); it
has no node of its own because inversion of an integer tangle is exactly
what it is.

The central fact driving this module: the fraction is a complete isotopy
invariant of rational tangles, so the canonical form of an expression can
be computed arithmetically (fraction, then canonical expansion) and checked
independently against the syntactic route (twist absorption, vector
read-off, transfer-move rewriting).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .cf import CFVector, expand_fraction
from .errors import InfiniteTangle, NoFlypeSite, NotRational
from .fraction import INF, ZERO, Fraction, star


@dataclass(frozen=True)
class Zero:
    """The horizontal trivial tangle; fraction 0."""


@dataclass(frozen=True)
class Infinity:
    """The vertical trivial tangle; fraction 1/0."""


@dataclass(frozen=True)
class IntTangle:
    """n horizontal twists; fraction n."""

    n: int


@dataclass(frozen=True)
class Sum:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Prod:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Mirror:
    """All crossings switched; fraction negated."""

    inner: "TangleExpr"


@dataclass(frozen=True)
class Invert:
    """The tangle inverse 1/T; on integer tangles, the vertical tangle."""

    inner: "TangleExpr"


@dataclass(frozen=True)
class Rotate:
    """Quarter-turn rotation; fraction goes to -1/F."""

    inner: "TangleExpr"


TangleExpr = Union[Zero, Infinity, IntTangle, Sum, Prod, Mirror, Invert, Rotate]


def int_tangle(n: int) -> TangleExpr:
    """Integer-twist leaf, with 0 spelled as the Zero node."""
    return Zero() if n == 0 else IntTangle(n)


def fraction_of(t: TangleExpr) -> Fraction:
    """The tangle fraction, computed structurally.

    Sum maps to projective addition, product to the harmonic star,
    mirror/invert/rotate to negation, reciprocal and negative reciprocal.
    Total on every expression except sums of two infinite-fraction
    operands, which raise IndeterminateSum.
    """
    match t:
        case Zero():
            return ZERO
        case Infinity():
            return INF
        case IntTangle(n):
            return Fraction(n)
        case Sum(left, right):
            return fraction_of(left) + fraction_of(right)
        case Prod(left, right):
            return star(fraction_of(left), fraction_of(right))
        case Mirror(inner):
            return -fraction_of(inner)
        case Invert(inner):
            return fraction_of(inner).reciprocal()
        case Rotate(inner):
            return fraction_of(inner).neg_reciprocal()
    raise TypeError(f"not a tangle expression: {t!r}")


def _is_integer_value(x: Fraction) -> bool:
    return x.den == 1


def _is_vertical_value(x: Fraction) -> bool:
    # fraction of a vertical tangle: 1/n (numerator +-1), 0, or the
    # infinite point
    return x.den == 0 or abs(x.num) <= 1


def is_rational(t: TangleExpr) -> bool:
    """Whether t stays inside the rational class.

    A sum needs an integer-fraction summand and a product needs a
    reciprocal-integer (or 0 / infinite) factor; leaves and the unary
    operations preserve rationality.
    """
    match t:
        case Zero() | Infinity() | IntTangle():
            return True
        case Mirror(inner) | Invert(inner) | Rotate(inner):
            return is_rational(inner)
        case Sum(left, right):
            if not (is_rational(left) and is_rational(right)):
                return False
            return _is_integer_value(fraction_of(left)) or _is_integer_value(fraction_of(right))
        case Prod(left, right):
            if not (is_rational(left) and is_rational(right)):
                return False
            return _is_vertical_value(fraction_of(left)) or _is_vertical_value(fraction_of(right))
    raise TypeError(f"not a tangle expression: {t!r}")


def _flatten(t: TangleExpr, kind) -> list[TangleExpr]:
    if isinstance(t, kind):
        return _flatten(t.left, kind) + _flatten(t.right, kind)
    return [t]


def twist_absorb(t: TangleExpr) -> TangleExpr:
    """Push twists to the standard positions, preserving the fraction.

    Integer summands of a sum chain merge into a single right summand;
    vertical factors of a product chain (including the ambiguous one-
    crossing tangles [+-1]) merge into a single bottom factor. This is the
    syntactic content of bringing a twist form to standard form by flypes.
    """
    match t:
        case Zero() | Infinity() | IntTangle():
            return t
        case Mirror(inner):
            return Mirror(twist_absorb(inner))
        case Invert(inner):
            return Invert(twist_absorb(inner))
        case Rotate(inner):
            return Rotate(twist_absorb(inner))
        case Sum():
            ints = 0
            cores: list[TangleExpr] = []
            for part in _flatten(t, Sum):
                match part:
                    case IntTangle(n):
                        ints += n
                    case Zero():
                        pass
                    case _:
                        cores.append(twist_absorb(part))
            if not cores:
                return int_tangle(ints)
            core = cores[0]
            for extra in cores[1:]:
                core = Sum(core, extra)
            return core if ints == 0 else Sum(core, int_tangle(ints))
        case Prod():
            verticals = 0
            cores = []
            for part in _flatten(t, Prod):
                match part:
                    case Invert(IntTangle(n)):
                        verticals += n
                    case Invert(Zero()):
                        pass
                    case IntTangle(n) if abs(n) == 1:
                        verticals += n
                    case _:
                        cores.append(twist_absorb(part))
            if not cores:
                return Invert(int_tangle(verticals))
            core = cores[0]
            for extra in cores[1:]:
                core = Prod(core, extra)
            return core if verticals == 0 else Prod(core, Invert(int_tangle(verticals)))
    raise TypeError(f"not a tangle expression: {t!r}")


def _int_leaf(t: TangleExpr) -> int | None:
    match t:
        case Zero():
            return 0
        case IntTangle(n):
            return n
    return None


def _read_standard_shape(t: TangleExpr) -> CFVector | None:
    # (((([an] * 1/[a(n-1)]) + [a(n-2)]) * ...) + [a1]; a missing
    # outermost integer layer means a1 = 0
    acc: list[int] = []
    want_sum = True
    while True:
        if want_sum:
            if isinstance(t, Sum) and _int_leaf(t.right) is not None:
                acc.append(_int_leaf(t.right))
                t = t.left
                want_sum = False
            elif isinstance(t, Prod):
                acc.append(0)
                want_sum = False
            elif _int_leaf(t) is not None:
                acc.append(_int_leaf(t))
                return tuple(acc)
            elif isinstance(t, Invert) and _int_leaf(t.inner) is not None:
                acc.extend((0, _int_leaf(t.inner)))
                return tuple(acc)
            else:
                return None
        else:
            if isinstance(t, Prod) and isinstance(t.right, Invert) and _int_leaf(t.right.inner) is not None:
                acc.append(_int_leaf(t.right.inner))
                t = t.left
                want_sum = True
            elif isinstance(t, Invert) and _int_leaf(t.inner) is not None:
                acc.append(_int_leaf(t.inner))
                return tuple(acc)
            else:
                return None


def _read_cf_shape(t: TangleExpr) -> CFVector | None:
    # [a1] + 1/([a2] + 1/(...)), the continued-fraction spelling; the
    # integer summand may sit on either side (addition of twists commutes)
    acc: list[int] = []
    while True:
        if isinstance(t, Sum):
            left_int, right_int = _int_leaf(t.left), _int_leaf(t.right)
            if left_int is not None and isinstance(t.right, Invert):
                acc.append(left_int)
                t = t.right.inner
            elif right_int is not None and isinstance(t.left, Invert):
                acc.append(right_int)
                t = t.left.inner
            else:
                return None
        elif _int_leaf(t) is not None:
            acc.append(_int_leaf(t))
            return tuple(acc)
        elif isinstance(t, Invert):
            acc.append(0)
            t = t.inner
        else:
            return None


def standard_form_vector(t: TangleExpr) -> CFVector | None:
    """Read the twist-count vector off an expression syntactically.

    Pattern-matches the standard shape or the continued-fraction shape,
    on the raw tree first and then after twist absorption. Returns None
    when neither fits, e.g. for rotation-decorated expressions.
    """
    for candidate in (t, twist_absorb(t)):
        vec = _read_standard_shape(candidate)
        if vec is None:
            vec = _read_cf_shape(candidate)
        if vec is not None:
            return vec
    return None


@dataclass(frozen=True)
class StandardFormTangle:
    """A tangle in standard form, carried entirely by its vector.

    Odd length; only the outermost term may be zero. The crossing count
    of the form is the term-magnitude sum.
    """

    vector: CFVector

    def crossings(self) -> int:
        return sum(abs(a) for a in self.vector)


def to_standard_form(t: TangleExpr) -> StandardFormTangle:
    """Standard form computed arithmetically from the fraction.

    The fraction classifies rational tangles, so expanding it canonically
    is a faithful standard form; the syntactic route through twist_absorb
    and standard_form_vector stays available as an independent check.
    """
    if not is_rational(t):
        raise NotRational("only rational tangles have a standard form")
    x = fraction_of(t)
    if x.is_infinite:
        raise InfiniteTangle("the infinite tangle has no standard-form vector")
    return StandardFormTangle(expand_fraction(x))


def standard_to_cf(s: StandardFormTangle) -> CFVector:
    """Standard form and continued-fraction form share one vector."""
    return s.vector


class _InfinityTangleType:
    """Distinguished canonical form of the infinite tangle."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "InfinityTangle"


INFINITY_TANGLE = _InfinityTangleType()

CanonicalTangle = Union[CFVector, _InfinityTangleType]


def canonical_form(t: TangleExpr) -> CanonicalTangle:
    """The unique canonical form of a rational tangle.

    The infinite tangle gets the distinguished sentinel; every other
    rational tangle gets the canonical vector of its fraction.
    """
    if not is_rational(t):
        raise NotRational("canonical form is defined for rational tangles only")
    x = fraction_of(t)
    if x.is_infinite:
        return INFINITY_TANGLE
    return expand_fraction(x)


def equivalent(a: TangleExpr, b: TangleExpr) -> bool:
    """Isotopy decision: rational tangles are isotopic iff their
    fractions coincide."""
    if not is_rational(a) or not is_rational(b):
        raise NotRational("the fraction classifies rational tangles only")
    return fraction_of(a) == fraction_of(b)


def flype_step(t: TangleExpr) -> TangleExpr:
    """Commute a single crossing from the left of the root to the right."""
    match t:
        case Sum(IntTangle(n), rest) if abs(n) == 1:
            return Sum(rest, IntTangle(n))
        case Prod(IntTangle(n), rest) if abs(n) == 1:
            return Prod(rest, IntTangle(n))
    raise NoFlypeSite("root is not [+-1] + t or [+-1] * t")


def truncations(s: StandardFormTangle) -> list[CFVector]:
    """Suffix vectors [aj, ..., an], innermost first: the stages a tangle
    passes through as it is untwisted from the outside."""
    v = s.vector
    return [v[j:] for j in range(len(v) - 1, -1, -1)]


def vector_mirror(v: Sequence[int]) -> CFVector:
    """Mirror image at vector level: negate every term."""
    return tuple(-a for a in v)


def vector_invert(v: Sequence[int]) -> CFVector:
    """Inverse at vector level: prepend a zero term."""
    return (0,) + tuple(v)


def vector_add_right(v: Sequence[int], k: int) -> CFVector:
    """Right twist addition at vector level: shift the outermost term."""
    v = tuple(v)
    return (v[0] + k,) + v[1:]


def crossing_count(c: CanonicalTangle) -> int:
    """Term-magnitude sum of a canonical vector: the minimal crossing
    number of the isotopy class."""
    if isinstance(c, _InfinityTangleType):
        raise InfiniteTangle("the infinite tangle has no crossing vector")
    return sum(abs(a) for a in c)
