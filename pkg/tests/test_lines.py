"""Tests for line/segment enumeration against brute-force and closed forms."""

import itertools
import math
import random

import pytest

from wordgrid.core import all_points
from wordgrid.lines import (
    MINUS,
    PLUS,
    CanonicalLine,
    Segment,
    canonicalize,
    count_lines,
    count_segments,
    decode_line_code,
    enumerate_lines,
    enumerate_segments,
    format_line,
    line_points,
    mirror_normalize,
    sample_line,
    segment_points,
)


def brute_line_sets(n, d):
    """Independent line collection: all (p, v) pairs, deduped by point set."""
    dirs = [v for v in itertools.product((-1, 0, 1), repeat=d) if any(v)]
    found = set()
    for p in all_points(n, d):
        for v in dirs:
            pts = [tuple(p[j] + i * v[j] for j in range(d)) for i in range(n)]
            if all(1 <= x <= n for q in pts for x in q):
                found.add(frozenset(pts))
    return found


def brute_segment_sets(n, d, k):
    """All in-grid k-point runs (p, v, ..., p+(k-1)v), deduped by point tuple."""
    dirs = [v for v in itertools.product((-1, 0, 1), repeat=d) if any(v)]
    found = set()
    for p in all_points(n, d):
        for v in dirs:
            pts = [tuple(p[j] + i * v[j] for j in range(d)) for i in range(k)]
            if all(1 <= x <= n for q in pts for x in q):
                found.add(min(tuple(pts), tuple(reversed(pts))))
    return found


# ---------------------------------------------------------------- canonicalize

def test_canonicalize_examples():
    assert canonicalize((3, 1), (-1, 1), 3) == CanonicalLine((1, 3), (1, -1), 2)
    assert canonicalize((1, 2), (1, 0), 3) == CanonicalLine((1, 2), (1, 0), 1)
    for i in range(1, 4):
        assert canonicalize((i, 1), (0, 1), 3) == CanonicalLine((i, 1), (0, 1), 1)


def test_canonicalize_orientation_invariant():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(2, 5)
        d = rng.randint(1, 4)
        line = sample_line(n, d, rng)
        fwd = canonicalize(line.p, line.v, n)
        endpoint = tuple(pj + (n - 1) * vj for pj, vj in zip(line.p, line.v))
        bwd = canonicalize(endpoint, tuple(-x for x in line.v), n)
        assert fwd == bwd == line
        assert canonicalize(fwd.p, fwd.v, n) == fwd


def test_canonicalize_errors():
    with pytest.raises(ValueError):
        canonicalize((1, 1), (0, 0), 3)
    with pytest.raises(ValueError):
        canonicalize((2, 1), (1, 1), 3)  # leaves the grid at step 3
    with pytest.raises(ValueError):
        canonicalize((1,), (1,), 1)


def test_line_points_examples():
    assert line_points(CanonicalLine((1, 1), (1, 1), 2), 3) == [(1, 1), (2, 2), (3, 3)]
    assert line_points(CanonicalLine((1, 3), (1, -1), 2), 3) == [(1, 3), (2, 2), (3, 1)]
    assert line_points(CanonicalLine((2, 1), (0, 1), 1), 3) == [(2, 1), (2, 2), (2, 3)]


# ---------------------------------------------------------------- enumeration

def test_enumerate_lines_counts():
    assert sum(1 for _ in enumerate_lines(3, 2)) == 8
    assert sum(1 for _ in enumerate_lines(2, 1)) == 1
    tally = {}
    for line in enumerate_lines(3, 3):
        tally[line.weight] = tally.get(line.weight, 0) + 1
    assert tally == {1: 27, 2: 18, 3: 4}


def test_enumerate_lines_matches_brute_force():
    for n, d in [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)]:
        ours = [frozenset(line_points(l, n)) for l in enumerate_lines(n, d)]
        assert len(ours) == len(set(ours))  # no duplicates
        assert set(ours) == brute_line_sets(n, d)


def test_emitted_lines_touch_boundary():
    # an up axis starts at 1, a down axis starts at n
    for n, d in [(3, 2), (4, 3)]:
        for line in enumerate_lines(n, d):
            for pj, vj in zip(line.p, line.v):
                if vj == 1:
                    assert pj == 1
                elif vj == -1:
                    assert pj == n


def test_tallies_match_closed_form():
    for n in range(2, 7):
        for d in range(1, 6):
            per_weight, total = count_lines(n, d)
            seen = {}
            for line in enumerate_lines(n, d):
                seen[line.weight] = seen.get(line.weight, 0) + 1
            assert seen == per_weight
            assert sum(seen.values()) == total


def test_count_lines_values():
    assert count_lines(3, 2)[1] == 8
    assert count_lines(3, 3)[1] == 49
    assert count_lines(5, 2)[1] == 12
    per_weight, _ = count_lines(4, 3)
    assert per_weight[1] == 3 * 16
    with pytest.raises(ValueError):
        count_lines(1, 2)


def test_weight_filter():
    diag = list(enumerate_lines(3, 3, weight=3))
    assert len(diag) == 4
    assert all(line.weight == 3 for line in diag)


# ---------------------------------------------------------------- sampling

def test_decode_and_mirror_rules():
    assert decode_line_code((PLUS, 2), 3) == CanonicalLine((1, 2), (1, 0), 1)
    assert mirror_normalize((MINUS, PLUS)) == (PLUS, MINUS)
    assert mirror_normalize((PLUS, MINUS)) == (PLUS, MINUS)
    assert mirror_normalize((2, MINUS)) == (2, PLUS)
    assert decode_line_code((PLUS, MINUS), 3) == CanonicalLine((1, 3), (1, -1), 2)


def test_sample_line_uniform_small():
    rng = random.Random(1234)
    counts = {}
    m = 100_000
    for _ in range(m):
        line = sample_line(3, 2, rng)
        counts[line] = counts.get(line, 0) + 1
    assert len(counts) == 8
    for c in counts.values():
        assert abs(c / m - 0.125) < 0.01


def test_sample_line_uniform_3d():
    rng = random.Random(5150)
    counts = {}
    m = 100_000
    for _ in range(m):
        line = sample_line(3, 3, rng)
        counts[line] = counts.get(line, 0) + 1
    assert len(counts) == 49
    p = 1 / 49
    se = math.sqrt(p * (1 - p) / m)
    for c in counts.values():
        assert abs(c / m - p) < 4 * se


# ---------------------------------------------------------------- segments

def test_count_segments_values():
    assert count_segments(3, 2, 3) == 8
    assert count_segments(5, 2, 2) == 72
    assert count_segments(5, 1, 4) == 2
    with pytest.raises(ValueError):
        count_segments(3, 2, 1)
    with pytest.raises(ValueError):
        count_segments(3, 2, 4)


def test_enumerate_segments_matches_brute_force():
    for n, d, k in [(3, 1, 2), (5, 1, 4), (3, 2, 2), (4, 2, 3), (5, 2, 2), (3, 3, 2), (4, 3, 3)]:
        segs = list(enumerate_segments(n, d, k))
        assert len(segs) == count_segments(n, d, k)
        keyed = set()
        for seg in segs:
            pts = segment_points(seg, n)
            keyed.add(min(tuple(pts), tuple(reversed(pts))))
        assert len(keyed) == len(segs)
        assert keyed == brute_segment_sets(n, d, k)


def test_segments_at_full_length_are_lines():
    for n, d in [(3, 2), (2, 3), (4, 2)]:
        segs = [(s.p, s.v) for s in enumerate_segments(n, d, n)]
        lines = [(l.p, l.v) for l in enumerate_lines(n, d)]
        assert segs == lines


def test_segment_type_checks():
    with pytest.raises(ValueError):
        Segment((1, 1), (0, 0), 2, 0)
    with pytest.raises(ValueError):
        Segment((1, 3), (-1, 1), 2, 2)  # wrong orientation


def test_format_line():
    assert format_line(CanonicalLine((1, 3), (1, -1), 2)) == "1,3 ; 1,-1"
