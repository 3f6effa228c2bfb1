"""Shared generators for randomized suites.

Rational trees are built rational-by-construction: every sum gets an
integer summand and every product a one-crossing or vertical factor, which
is exactly the closure property of the rational class.
"""

import random

from tanglekit.tangle import (
    Infinity,
    IntTangle,
    Invert,
    Mirror,
    Prod,
    Rotate,
    Sum,
    Zero,
    int_tangle,
)

_NONZERO = [i for i in range(-9, 10) if i != 0]


def random_rational_expr(rng: random.Random, depth: int):
    if depth == 0:
        kind = rng.randrange(6)
        if kind == 0:
            return Zero()
        if kind == 1:
            return Infinity()
        n = rng.choice(_NONZERO)
        return IntTangle(n) if kind < 4 else Invert(IntTangle(n))
    inner = random_rational_expr(rng, depth - 1)
    m = rng.choice(_NONZERO)
    kind = rng.randrange(8)
    if kind == 0:
        return Sum(inner, IntTangle(m))
    if kind == 1:
        return Sum(IntTangle(m), inner)
    if kind == 2:
        return Prod(inner, Invert(IntTangle(m)))
    if kind == 3:
        return Prod(Invert(IntTangle(m)), inner)
    if kind == 4:
        return Prod(inner, IntTangle(rng.choice([-1, 1])))
    if kind == 5:
        return Mirror(inner)
    if kind == 6:
        return Invert(inner)
    return Rotate(inner)


def random_expr(rng: random.Random, depth: int):
    """Arbitrary (not necessarily rational) expression trees, for the
    parser round-trip; shaped like anything the grammar can spell."""
    if depth == 0:
        kind = rng.randrange(5)
        if kind == 0:
            return Zero()
        if kind == 1:
            return Infinity()
        return IntTangle(rng.choice(_NONZERO))
    kind = rng.randrange(6)
    if kind == 0:
        return Sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    if kind == 1:
        return Prod(random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    if kind == 2:
        return Mirror(random_expr(rng, depth - 1))
    if kind == 3:
        return Invert(random_expr(rng, depth - 1))
    if kind == 4:
        return Rotate(random_expr(rng, depth - 1))
    return random_expr(rng, depth - 1)


def random_standard_vector(rng: random.Random, max_len: int = 9, max_term: int = 9):
    """Odd-length vector, interior terms nonzero, leading term free."""
    length = rng.choice(range(1, max_len + 1, 2))
    nonzero = [i for i in range(-max_term, max_term + 1) if i != 0]
    terms = [rng.choice(nonzero) for _ in range(length)]
    terms[0] = rng.randint(-max_term, max_term)
    return tuple(terms)


def standard_expr(vector):
    """The standard-form expression of a vector:
    (((([an] * 1/[a(n-1)]) + [a(n-2)]) * ...) + [a1]."""
    node = int_tangle(vector[-1])
    for idx in range(len(vector) - 2, -1, -1):
        position = idx + 1
        if position % 2 == 0:
            node = Prod(node, Invert(int_tangle(vector[idx])))
        else:
            node = Sum(node, int_tangle(vector[idx]))
    return node
