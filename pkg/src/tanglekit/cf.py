"""Continued-fraction algorithms over exact projective rationals.

A continued-fraction vector [a1, ..., an] stands for
a1 + 1/(a2 + 1/(... + 1/an)), evaluated innermost first with projective
reciprocals, so zero terms and infinite intermediate values are legal.
A vector is *canonical* when its length is odd, its terms share one sign
(zeros are sign-neutral), and no term after the first is zero. Canonical
vectors are unique per value, which is what makes them usable as normal
forms for tangle isotopy classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InfiniteInput, InfiniteValue, NoMixedSigns
from .fraction import Fraction

CFVector = tuple[int, ...]


def _vec(terms: Sequence[int]) -> CFVector:
    v = tuple(int(t) for t in terms)
    if not v:
        raise ValueError("a continued-fraction vector must be non-empty")
    return v


def eval_cf(terms: Sequence[int]) -> Fraction:
    """Evaluate [a1, ..., an] exactly, innermost term first.

    Never raises: each step adds a finite integer to a projective
    reciprocal, so the excluded sum inf + inf cannot occur.
    """
    v = _vec(terms)
    acc = Fraction(v[-1])
    for a in reversed(v[:-1]):
        acc = Fraction(a) + acc.reciprocal()
    return acc


def expand_fraction(x: Fraction) -> CFVector:
    """Expand a finite fraction into its unique canonical vector.

    Greedy floor-division Euclid on |p|/q, global sign applied afterwards,
    parity fixed last, so the result is odd-length and termwise signed
    like x, with a leading 0 exactly when |x| < 1.
    """
    if x.is_infinite:
        raise InfiniteInput("the infinite point has no canonical vector")
    p, q = abs(x.num), x.den
    terms = []
    while True:
        a, r = divmod(p, q)
        terms.append(a)
        if r == 0:
            break
        p, q = q, r
    v = make_odd(terms)
    if x.num < 0:
        v = tuple(-t for t in v)
    return v


def make_odd(terms: Sequence[int]) -> CFVector:
    """Force odd length without changing the value.

    A last term of magnitude >= 2 is split off a unit of its own sign;
    a last term of +-1 is folded into its neighbour instead, since
    splitting it would plant an interior zero.
    """
    v = _vec(terms)
    if any(t == 0 for t in v[1:-1]):
        raise ValueError("make_odd requires a vector without interior zeros")
    if len(v) % 2 == 1:
        return v
    last = v[-1]
    if last > 1:
        return v[:-1] + (last - 1, 1)
    if last < -1:
        return v[:-1] + (last + 1, -1)
    if last == 0:
        raise ValueError("a trailing zero has no odd-length spelling")
    return v[:-2] + (v[-2] + last,)


def collapse_zeros(terms: Sequence[int]) -> CFVector:
    """Remove interior zeros: [..., b, 0, c, ...] -> [..., b + c, ...].

    Applied to fixpoint; merges can cascade. Leading and trailing zeros
    are not interior and are left alone. Value preserved.
    """
    out = list(_vec(terms))
    i = 1
    while i < len(out) - 1:
        if out[i] == 0:
            out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            i = max(i - 1, 1)
        else:
            i += 1
    return tuple(out)


def _first_mixed_index(v: CFVector) -> int | None:
    for i in range(1, len(v)):
        if v[i - 1] * v[i] < 0:
            return i
    return None


def transfer_step(terms: Sequence[int]) -> CFVector:
    """Eliminate the first adjacent opposite-sign pair.

    For a pivot a(i-1) > 0 the pair (a(i-1), a(i)) is rewritten to
    ..., a(i-1)-1, +1, -(a(i)+1) with the whole tail negated; a negative
    pivot goes through the fully negated mirror of the same rule. The
    rewrite drops the term-magnitude sum by exactly one; the zero
    collapse that follows can only shrink it further. Value preserved.
    """
    v = _vec(terms)
    i = _first_mixed_index(v)
    if i is None:
        raise NoMixedSigns("vector is already termwise same-signed")
    if v[i - 1] < 0:
        flipped = transfer_step(tuple(-t for t in v))
        return tuple(-t for t in flipped)
    head, a, b, tail = v[: i - 1], v[i - 1], v[i], v[i + 1 :]
    out = head + (a - 1, 1, -(b + 1)) + tuple(-t for t in tail)
    assert sum(map(abs, out)) == sum(map(abs, v)) - 1
    return collapse_zeros(out)


def _drop_infinite_tail(v: CFVector) -> CFVector:
    # [..., a, b, 0] evaluates as [..., a]: the suffix b + 1/0 is the
    # infinite point, and a + 1/inf = a.
    while len(v) >= 3 and v[-1] == 0:
        v = v[:-2]
    return v


def canonicalize_by_rewrite(terms: Sequence[int]) -> CFVector:
    """Canonicalize by local rewrites only: collapse zeros, transfer moves
    to fixpoint, then odd-length normalization.

    Agrees with expand_fraction(eval_cf(v)) on every finite-valued vector;
    a vector evaluating to the infinite point is rejected, since no
    canonical spelling exists for it.
    """
    v = _vec(terms)
    if eval_cf(v).is_infinite:
        raise InfiniteValue("no canonical vector evaluates to the infinite point")
    v = _drop_infinite_tail(collapse_zeros(v))
    while _first_mixed_index(v) is not None:
        v = _drop_infinite_tail(transfer_step(v))
    return make_odd(v)


def is_canonical(terms: Sequence[int]) -> bool:
    v = tuple(terms)
    if not v or len(v) % 2 == 0:
        return False
    if any(t == 0 for t in v[1:]):
        return False
    return all(t >= 0 for t in v) or all(t <= 0 for t in v)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix; products of term matrices have det +-1."""

    m11: int
    m12: int
    m21: int
    m22: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)


IDENTITY = Mat2(1, 0, 0, 1)


def term_matrix(a: int) -> Mat2:
    return Mat2(a, 1, 1, 0)


def matrix_form(terms: Sequence[int]) -> tuple[Mat2, Fraction]:
    """Product of the term matrices and the fraction it carries.

    Applying the product to the column (1, 0) yields (p, q) with
    p/q = eval_cf(terms), including the projective q = 0 case.
    """
    v = _vec(terms)
    m = IDENTITY
    for a in v:
        m = m * term_matrix(a)
    p, q = m.apply(1, 0)
    return m, Fraction(p, q)


def subtractive_expand(x: Fraction) -> tuple[int, ...]:
    """Ceiling-based expansion x = b1 - 1/(b2 - 1/(... - 1/bm)).

    b1 is ceil(x) and every later term is >= 2; an integer input is its
    own single term. This feeds the dance solver, whose only generators
    are add-one and negative reciprocal.
    """
    if x.is_infinite:
        raise InfiniteInput("the infinite point has no subtractive expansion")
    p, q = x.num, x.den
    terms = []
    while True:
        b = -((-p) // q)
        terms.append(b)
        s = b * q - p
        if s == 0:
            break
        p, q = q, s
    return tuple(terms)


def iter_positive_canonical(max_sum: int) -> Iterator[CFVector]:
    """All canonical vectors with every term >= 1 and term sum <= max_sum,
    in increasing total order."""
    for total in range(1, max_sum + 1):
        for length in range(1, total + 1, 2):
            yield from _compositions(total, length)


def _compositions(total: int, parts: int) -> Iterator[CFVector]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def iter_canonical_vectors(max_sum: int) -> Iterator[CFVector]:
    """Every canonical vector with term-magnitude sum <= max_sum: the zero
    vector, both signs, and the leading-zero spellings of values below one."""
    yield (0,)
    for v in iter_positive_canonical(max_sum):
        yield v
        yield tuple(-t for t in v)
    # leading-zero vectors: odd total length means an even positive tail
    for total in range(2, max_sum + 1):
        for length in range(2, total + 1, 2):
            for tail in _compositions(total, length):
                yield (0,) + tail
                yield (0,) + tuple(-t for t in tail)
