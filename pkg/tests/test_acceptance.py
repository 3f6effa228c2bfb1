"""Acceptance suite: the exit criteria, one test per criterion.

Every expected value here is exact; randomized criteria run at their full
stated volume with fixed seeds. Run via pytest, or standalone with
``python tests/test_acceptance.py`` for one pass/fail line per criterion.
"""

import random
import time

from conftest import random_expr
from tanglekit.cf import (
    canonicalize_by_rewrite,
    eval_cf,
    expand_fraction,
    iter_canonical_vectors,
    transfer_step,
)
from tanglekit.coloring import closure_coloring_mod, closure_determinant, color_tangle, f_of_matrix, harary_check
from tanglekit.dance import ADD, TURN, column_fraction, replay, solve_target, subtract_macro, word_to_matrix, word_to_text
from tanglekit.fraction import INF, ZERO, Fraction
from tanglekit.tangle import canonical_form, equivalent, fraction_of, standard_form_vector
from tanglekit.textio import parse_tangle, print_tangle

FIG4 = "(([3]+([1]*[3]*1/[2])+[-4])*1/[-4])+[2]"
NOTE2 = "[[2],[-3],[5]]"


def fr(p, q=1):
    return Fraction(p, q)


def test_c01_note2_reproduction():
    t = parse_tangle(NOTE2)
    assert fraction_of(t) == fr(23, 14)
    assert canonical_form(t) == (1, 1, 1, 1, 4)
    assert equivalent(t, parse_tangle("[[1],[1],[1],[1],[4]]"))


def test_c02_figure4_pipeline():
    t = parse_tangle(FIG4)
    vector = standard_form_vector(t)
    assert vector == (2, -4, -1, 3, 3)
    assert fraction_of(t) == fr(69, 38)
    assert eval_cf(vector) == fr(69, 38)
    # canonical (arithmetic) route == rewrite route
    assert canonical_form(t) == canonicalize_by_rewrite(vector) == (1, 1, 4, 2, 3)


def test_c03_transfer_move_trace():
    first = transfer_step((2, -3, 5))
    second = transfer_step(first)
    assert first == (1, 1, 2, -5)
    assert second == (1, 1, 1, 1, 4)
    sums = [sum(map(abs, v)) for v in ((2, -3, 5), first, second)]
    assert sums == [10, 9, 8]
    assert eval_cf((2, -3, 5)) == eval_cf(first) == eval_cf(second) == fr(23, 14)


def test_c04_two_fraction_agreement():
    rng = random.Random(101)
    nonzero = [i for i in range(-9, 10) if i != 0]
    started = time.monotonic()
    for _ in range(10_000):
        length = rng.choice((1, 3, 5, 7, 9))
        v = tuple(rng.choice(nonzero) for _ in range(length))
        v = (rng.randint(-9, 9),) + v[1:]
        colored = color_tangle(v, 1, 0)
        assert f_of_matrix(colored.matrix) == eval_cf(v)
    assert time.monotonic() - started < 10.0


def test_c05_figure21_coloring():
    colored = color_tangle((2, 2, 3), 1, 0)
    assert colored.matrix.as_tuple() == (1, 18, -6, 11)
    assert f_of_matrix(colored.matrix) == fr(17, 7)
    assert closure_determinant(colored) == 17
    residues = closure_coloring_mod(colored, 17)
    assert len(residues) == 7
    assert len(set(residues)) == 7


def test_c06_distinct_colors_sweep():
    started = time.monotonic()
    report = harary_check(10)
    assert report, "sweep must not be empty"
    assert all(inst.arc_colors_distinct for inst in report)
    assert all(inst.passed for inst in report)
    assert time.monotonic() - started < 60.0


def test_c07_generator_identities():
    rng = random.Random(102)

    def sample():
        roll = rng.random()
        if roll < 0.05:
            return ZERO
        if roll < 0.10:
            return INF
        return fr(rng.randint(-1000, 1000), rng.randint(1, 1000))

    triple = (TURN, ADD) * 3
    macro = subtract_macro()
    for _ in range(10_000):
        x = sample()
        assert replay(triple, x) == x
        expected = INF if x.is_infinite else x + fr(-1)
        assert replay(macro, x) == expected
    for _ in range(1000):
        word = tuple(rng.choice((TURN, ADD)) for _ in range(rng.randint(0, 30)))
        m = word_to_matrix(word)
        assert m.det() == 1
        assert column_fraction(*m.apply(0, 1)) == replay(word)


def test_c08_solver_soundness():
    rng = random.Random(103)
    for _ in range(1000):
        target = fr(rng.randint(-1000, 1000), rng.randint(1, 1000))
        assert replay(solve_target(target)) == target
    word = solve_target(fr(23, 14))
    assert word_to_text(word) == "AAAAATAAATAA"
    assert replay(word) == fr(23, 14)


def test_c09_minimality_spot_check():
    by_value = {}
    for v in iter_canonical_vectors(6):
        by_value.setdefault(eval_cf(v), []).append(v)
    for value, vectors in by_value.items():
        assert len(vectors) == 1, f"{value} has canonical spellings {vectors}"


def test_c10_parser_round_trip():
    rng = random.Random(104)
    for _ in range(10_000):
        t = random_expr(rng, rng.randint(0, 8))
        assert parse_tangle(print_tangle(t)) == t
    for text in (FIG4, NOTE2):
        t = parse_tangle(text)
        printed = print_tangle(t)
        assert parse_tangle(printed) == t
        assert print_tangle(parse_tangle(printed)) == printed


CRITERIA = [
    ("note2-reproduction", test_c01_note2_reproduction),
    ("figure4-pipeline", test_c02_figure4_pipeline),
    ("transfer-move-trace", test_c03_transfer_move_trace),
    ("two-fraction-agreement", test_c04_two_fraction_agreement),
    ("figure21-coloring", test_c05_figure21_coloring),
    ("distinct-colors-sweep", test_c06_distinct_colors_sweep),
    ("generator-identities", test_c07_generator_identities),
    ("solver-soundness", test_c08_solver_soundness),
    ("minimality-spot-check", test_c09_minimality_spot_check),
    ("parser-round-trip", test_c10_parser_round_trip),
]


def main() -> int:
    failures = 0
    for name, check in CRITERIA:
        try:
            check()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} acceptance criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
