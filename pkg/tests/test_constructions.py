"""Constructions: frozen small cases, certificates, and the layered grid."""

import itertools
import random

import pytest

from wordgrid.constructions import (
    ConstructionResult,
    CounterpointParams,
    PointProfile,
    best_construction,
    classify_point,
    counterpoint_grid,
    cross_grid,
    few_letter_word,
    flip_line_points,
    is_counter_point,
    parity_grid,
    product_grid,
    quad_grid,
    rows_grid,
    sample_counter_point,
    sample_odd_flip_set,
    sigma_parity_check,
    stripe_grid,
)
from wordgrid.core import Grid, Word
from wordgrid.lines import enumerate_lines
from wordgrid.occurrence import count_segments_word, count_word

W = Word.from_string


def grid_rows(g: Grid) -> list[str]:
    return ["".join(g.alphabet.letters[g.at((i, j))] for j in range(1, g.n + 1))
            for i in range(1, g.n + 1)]


def antisymmetric_words(n: int) -> list[Word]:
    words = []
    for half in itertools.product("AM", repeat=n // 2):
        tail = "".join("M" if c == "A" else "A" for c in reversed(half))
        words.append(W("".join(half) + tail))
    return words


def random_word(rng: random.Random, n: int, letters: str = "ABC") -> Word:
    return W("".join(rng.choice(letters) for _ in range(n)))


# ---------------------------------------------------------------- certificates

def test_result_rejects_uncertified_grid():
    g = rows_grid(W("AMM")).grid
    with pytest.raises(AssertionError):
        ConstructionResult(g, guaranteed=99, achieved=5, provenance="rows")


def test_rows_grid_reads_along_rows_and_diagonals():
    r = rows_grid(W("AMM"))
    assert grid_rows(r.grid) == ["AMM", "AMM", "AMM"]
    assert r.guaranteed == 5
    assert r.achieved == 5


def test_rows_guarantee_holds_over_random_words():
    rng = random.Random(1301)
    for _ in range(60):
        w = random_word(rng, rng.randint(2, 6))
        r = rows_grid(w)
        assert r.achieved >= r.guaranteed == w.n + 2


# ---------------------------------------------------------------- cross

def test_cross_without_mirror_upgrade():
    r = cross_grid(W("BAACA"), "A")
    assert r.guaranteed == 7  # k=3 occurrences, antidiagonal not aligned


def test_cross_with_mirror_upgrade():
    r = cross_grid(W("ABACA"), "A")
    assert r.guaranteed == 8  # every A faces an A, antidiagonal joins in


def test_cross_frozen_grids():
    r = cross_grid(W("AMM"), "M")
    assert grid_rows(r.grid) == ["AAA", "AMM", "AMM"]
    assert (r.guaranteed, r.achieved) == (5, 5)
    r = cross_grid(W("AMA"), "A")
    assert grid_rows(r.grid) == ["AMA", "MMM", "AMA"]
    assert (r.guaranteed, r.achieved) == (6, 6)


def test_cross_rejects_absent_letter():
    with pytest.raises(ValueError):
        cross_grid(W("AMM"), "Z")


def test_cross_guarantee_sweep():
    rng = random.Random(1302)
    for _ in range(60):
        w = random_word(rng, rng.randint(2, 6))
        a = w.alphabet.letters[rng.choice(w.letters_used())]
        r = cross_grid(w, a)
        assert r.achieved >= r.guaranteed >= 2 * 1 + 1


# ---------------------------------------------------------------- quad / stripe

def test_quad_frozen_grid():
    r = quad_grid(W("AMAAM"), "A", "M")
    assert r.guaranteed == 8  # T = {1, 4}
    assert grid_rows(r.grid) == ["AMAAM", "MAAMA", "AAXAA", "AMAAM", "MAAMA"]


def test_quad_rejects_empty_band():
    with pytest.raises(ValueError):
        quad_grid(W("AMA"), "A", "M")  # no A faces an M


def test_quad_cells_never_conflict():
    # every applicable case must agree wherever bands intersect
    rng = random.Random(1303)
    built = 0
    for _ in range(200):
        w = random_word(rng, rng.randint(2, 7))
        for ia, im in itertools.permutations(w.letters_used(), 2):
            a, m = w.alphabet.letters[ia], w.alphabet.letters[im]
            from wordgrid.core import word_stats
            if word_stats(w).t(a, m) == 0:
                continue
            r = quad_grid(w, a, m)
            assert r.achieved >= r.guaranteed
            built += 1
    assert built > 50


def test_stripe_frozen():
    r = stripe_grid(W("AMAAM"))
    assert r.guaranteed == 7
    assert r.achieved == 7


def test_stripe_rejects_nonbinary():
    with pytest.raises(ValueError):
        stripe_grid(W("ABC"))


def test_stripe_guarantee_sweep():
    rng = random.Random(1304)
    for _ in range(80):
        w = random_word(rng, rng.randint(2, 7), letters="AM")
        if len(w.letters_used()) != 2:
            continue
        r = stripe_grid(w)
        assert r.achieved >= r.guaranteed >= w.n


# ---------------------------------------------------------------- parity grid

def test_parity_frozen_small():
    r = parity_grid(W("AM"), 2)
    assert grid_rows(r.grid) == ["AM", "MA"]
    assert (r.guaranteed, r.achieved) == (4, 4)
    assert parity_grid(W("AM"), 3).achieved == 16
    assert parity_grid(W("AAMM"), 2).achieved == 8


def test_parity_rejects_symmetric_words():
    with pytest.raises(ValueError):
        parity_grid(W("AMA"), 2)
    with pytest.raises(ValueError):
        parity_grid(W("ABMM"), 2)  # not binary


def test_parity_count_matches_formula_and_direct_count():
    for n in (2, 4):
        for d in (1, 2, 3):
            for w in antisymmetric_words(n):
                r = parity_grid(w, d)
                want = ((n + 2) ** d - (n - 2) ** d) // 4
                assert r.guaranteed == r.achieved == want
                assert count_word(w, r.grid.to_dense()).total == want


def test_parity_stratified_count_scales_to_huge_grids():
    # 2^19 cells: the stratified count stays exact where enumeration would not
    r = parity_grid(W("AM"), 19)
    assert r.achieved == (4**19 - 0) // 4
    assert r.grid.cells is None


def test_parity_grid_procedural_rule_is_two_coloring():
    r = parity_grid(W("AAMM"), 3)
    g = r.grid
    seen = {g.at(p) for p in itertools.product(range(1, 5), repeat=3)}
    assert seen == {0, 1}


# ---------------------------------------------------------------- special words

def test_few_letter_word_frozen():
    assert few_letter_word(1).text == "AAMM"
    assert few_letter_word(2).text == "AAABCMMM"


def test_few_letter_word_beats_baseline_via_quad():
    for k in (1, 2, 3):
        w = few_letter_word(k)
        n = w.n
        assert n == 4 * k
        from wordgrid.core import word_stats
        assert word_stats(w).kmax == k + 1
        r = quad_grid(w, "A", "M")
        assert r.guaranteed == 4 * (k + 1) > n + 2


def test_few_letter_word_rejects_bad_k():
    with pytest.raises(ValueError):
        few_letter_word(0)
    with pytest.raises(ValueError):
        few_letter_word(14)


def test_product_grid_stacks_optimal_rows():
    g = product_grid(W("ABCD"), 7)
    assert grid_rows(g) == ["ABCDCBA"] * 7
    assert count_segments_word(W("ABCD"), g) >= 2 * (3 * 7 - 4 * 4)


# ---------------------------------------------------------------- layered grid

def test_counterpoint_params_are_exact_rationals():
    from fractions import Fraction
    p = CounterpointParams.for_grid(3, 40)
    assert p.c == Fraction(39 * 40, 50)
    assert p.k == Fraction(23 * 40, 50)
    assert p.c > p.k


def test_counterpoint_rejects_short_words():
    with pytest.raises(ValueError):
        counterpoint_grid(W("AM"), 5)


def test_classification_is_total_and_deterministic():
    for p in itertools.product(range(1, 4), repeat=3):
        branch = classify_point(p, 3, 3)
        assert branch in ("counter-point", "band-index", "arbitrary")
        assert classify_point(p, 3, 3) == branch


def test_point_profile_invariants():
    rng = random.Random(1305)
    for _ in range(100):
        n = rng.randint(2, 6)
        d = rng.randint(1, 10)
        p = tuple(rng.randint(1, n) for _ in range(d))
        prof = PointProfile.of(p, n)
        assert prof.d == d
        for i in range(1, n + 1):
            assert prof.tau(i) == prof.tau(n - i + 1)


def test_sampled_counter_points_classify_as_such():
    rng = random.Random(1306)
    for d in (12, 40):
        for _ in range(20):
            p = sample_counter_point(3, d, rng)
            assert is_counter_point(p, 3, d)
            assert classify_point(p, 3, d) == "counter-point"


def test_sampling_fails_when_no_boundary_count_fits():
    with pytest.raises(ValueError):
        sample_counter_point(3, 1, random.Random(0))


def test_flip_lines_from_counter_points_read_the_word():
    rng = random.Random(1307)
    for word in ("AMM", "AMA", "ABC"):
        w = W(word)
        g = counterpoint_grid(w, 12)
        for _ in range(25):
            p = sample_counter_point(3, 12, rng)
            flips = sample_odd_flip_set(p, 3, rng)
            assert len(flips) % 2 == 1
            pts = flip_line_points(p, flips, 3)
            reading = tuple(g.at(q) for q in pts)
            assert reading in (w.symbols, w.symbols[::-1])


def test_flip_line_rejects_interior_coordinates():
    with pytest.raises(ValueError):
        flip_line_points((2, 1, 3), frozenset({0, 1}), 3)


def test_sigma_parity_splits_line_sides():
    rng = random.Random(1308)
    for n, d in ((3, 2), (4, 2), (5, 2), (3, 3), (4, 3)):
        odd = [ln for ln in enumerate_lines(n, d) if ln.weight % 2 == 1]
        for ln in rng.sample(odd, min(30, len(odd))):
            assert sigma_parity_check(ln, n)


def test_sigma_parity_rejects_even_weight():
    even = next(ln for ln in enumerate_lines(3, 2) if ln.weight == 2)
    with pytest.raises(ValueError):
        sigma_parity_check(even, 3)


# ---------------------------------------------------------------- dispatch

def test_best_construction_frozen_choices():
    r = best_construction(W("AMM"))
    assert r.provenance == "cross(M)"
    assert r.achieved == 5
    assert grid_rows(r.grid) == ["AAA", "AMM", "AMM"]
    assert best_construction(W("AAMM")).achieved == 8
    assert best_construction(W("AMA")).achieved == 6
    assert best_construction(W("ABC")).achieved == 5


def test_best_construction_high_dimensional_routes():
    r = best_construction(W("AM"), 3)
    assert r.provenance == "parity"
    assert r.achieved == 16
    r = best_construction(W("AAA"), 3)
    assert r.provenance == "constant"
    assert r.achieved == 49
    r = best_construction(W("AMM"), 3)
    assert r.provenance == "counterpoint"
    assert r.guaranteed == 0
    assert r.achieved == count_word(W("AMM"), r.grid.to_dense()).total


def test_best_construction_rejects_low_dimension():
    with pytest.raises(ValueError):
        best_construction(W("AMM"), 1)


def test_best_never_loses_to_any_single_builder():
    rng = random.Random(1309)
    for _ in range(40):
        w = random_word(rng, rng.randint(2, 5))
        best = best_construction(w)
        assert best.achieved >= rows_grid(w).achieved
        for ia in w.letters_used():
            a = w.alphabet.letters[ia]
            assert best.achieved >= cross_grid(w, a).achieved
