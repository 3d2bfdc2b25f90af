"""Counting the lines and segments of a grid that read a given word.

A line contains a word when the forward or the reversed reading equals it; a
line matching both ways still counts once. Dense grids are scanned through a
cached table of flat point indices; procedural grids take an explicit line
stream or the sampling estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .core import Grid, Word, point_index
from .lines import (
    CanonicalLine,
    count_lines,
    count_segments,
    enumerate_lines,
    enumerate_segments,
    line_points,
    sample_line,
    segment_points,
)

DEFAULT_LINE_CAP = 5_000_000

HOEFFDING_CONFIDENCE = 0.99


@dataclass(frozen=True)
class OccurrenceReport:
    """Lines containing the word: total, split by direction weight, optional list."""

    total: int
    per_weight: dict[int, int]
    matches: tuple[CanonicalLine, ...] | None = None

    def __post_init__(self) -> None:
        if self.total != sum(self.per_weight.values()):
            raise ValueError("total must equal the per-weight sum")


def _word_symbols(w: Word, grid: Grid) -> tuple[int, ...]:
    """Word letter indices translated into the grid's alphabet."""
    if w.alphabet == grid.alphabet:
        return w.symbols
    try:
        return tuple(grid.alphabet.index(ch) for ch in w.text)
    except ValueError:
        raise ValueError(
            f"word {w.text!r} uses letters outside the grid alphabet "
            f"{''.join(grid.alphabet.letters)!r}"
        ) from None


def line_contains(w: Word, grid: Grid, line: CanonicalLine) -> bool:
    """True iff the line reads w forward or backward."""
    if w.n != grid.n:
        raise ValueError(f"word length {w.n} != grid side {grid.n}")
    sym = _word_symbols(w, grid)
    reading = tuple(grid.at(q) for q in line_points(line, grid.n))
    return reading == sym or reading == sym[::-1]


@lru_cache(maxsize=32)
def compiled_lines(n: int, d: int, line_cap: int = DEFAULT_LINE_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Flat point indices of every canonical line, plus per-line weights.

    Returns (idx, weights): idx has one row per line in enumeration order,
    weights the nonzero count of each line's direction. The table is shared by
    every count over the same (n, d).
    """
    _, total = count_lines(n, d)
    if total > line_cap:
        raise ValueError(
            f"{total} lines at (n={n}, d={d}) exceed the table cap {line_cap}; "
            "use estimate_fraction"
        )
    idx = np.empty((total, n), dtype=np.int64)
    weights = np.empty(total, dtype=np.int8)
    for row, line in enumerate(enumerate_lines(n, d)):
        for i, q in enumerate(line_points(line, n)):
            idx[row, i] = point_index(q, n, d)
        weights[row] = line.weight
    return idx, weights


def _matched_mask(symbol_rows: Sequence[tuple[int, ...]], grid: Grid, line_cap: int) -> tuple[np.ndarray, np.ndarray]:
    """Boolean mask of lines whose reading hits any symbol row, plus weights."""
    idx, weights = compiled_lines(grid.n, grid.d, line_cap)
    cells = np.frombuffer(grid.cells, dtype=np.uint8)
    readings = cells[idx]
    matched = np.zeros(len(idx), dtype=bool)
    seen: set[tuple[int, ...]] = set()
    for sym in symbol_rows:
        for probe in (sym, sym[::-1]):
            if probe in seen:
                continue
            seen.add(probe)
            matched |= (readings == np.array(probe, dtype=np.uint8)).all(axis=1)
    return matched, weights


def _report_from_mask(matched: np.ndarray, weights: np.ndarray, d: int) -> OccurrenceReport:
    tally = np.bincount(weights[matched], minlength=d + 1)
    per_weight = {r: int(tally[r]) for r in range(1, d + 1)}
    return OccurrenceReport(total=int(matched.sum()), per_weight=per_weight)


def _count_stream(symbol_rows: Sequence[tuple[int, ...]], grid: Grid,
                  lines: Iterable[CanonicalLine], collect: bool) -> OccurrenceReport:
    probes = {sym for s in symbol_rows for sym in (s, s[::-1])}
    per_weight: dict[int, int] = {r: 0 for r in range(1, grid.d + 1)}
    hits: list[CanonicalLine] = []
    total = 0
    for line in lines:
        reading = tuple(grid.at(q) for q in line_points(line, grid.n))
        if reading in probes:
            total += 1
            per_weight[line.weight] += 1
            if collect:
                hits.append(line)
    return OccurrenceReport(total=total, per_weight=per_weight,
                            matches=tuple(hits) if collect else None)


def count_word(w: Word, grid: Grid, lines: Iterable[CanonicalLine] | None = None,
               collect_matches: bool = False, line_cap: int = DEFAULT_LINE_CAP) -> OccurrenceReport:
    """f(w, G): the number of lines of the grid containing w.

    Dense grids are counted over all lines via the compiled table; an explicit
    `lines` stream restricts the count to those lines (and works on procedural
    grids). Counting a partition of the stream and summing gives the full
    count.
    """
    if w.n != grid.n:
        raise ValueError(f"word length {w.n} != grid side {grid.n}")
    sym = _word_symbols(w, grid)
    if lines is not None:
        return _count_stream([sym], grid, lines, collect_matches)
    if not grid.dense:
        raise ValueError(
            "procedural grid needs an explicit line stream; use estimate_fraction "
            "when full enumeration is infeasible"
        )
    if collect_matches:
        return _count_stream([sym], grid, enumerate_lines(grid.n, grid.d), True)
    matched, weights = _matched_mask([sym], grid, line_cap)
    return _report_from_mask(matched, weights, grid.d)


def count_word_set(words: Iterable[Word], grid: Grid,
                   lines: Iterable[CanonicalLine] | None = None,
                   collect_matches: bool = False,
                   line_cap: int = DEFAULT_LINE_CAP) -> OccurrenceReport:
    """f(W, G): lines containing any word of W; a line counts once."""
    word_list = list(words)
    if not word_list:
        raise ValueError("word set must be nonempty")
    if any(w.n != grid.n for w in word_list):
        raise ValueError("all words must have length equal to the grid side")
    rows = [_word_symbols(w, grid) for w in word_list]
    if lines is not None:
        return _count_stream(rows, grid, lines, collect_matches)
    if not grid.dense:
        raise ValueError("procedural grid needs an explicit line stream")
    if collect_matches:
        return _count_stream(rows, grid, enumerate_lines(grid.n, grid.d), True)
    matched, weights = _matched_mask(rows, grid, line_cap)
    return _report_from_mask(matched, weights, grid.d)


def is_diagonal_latin(grid: Grid) -> bool:
    """True iff every row, column, and both diagonals hold n distinct letters."""
    if grid.d != 2:
        raise ValueError("diagonal Latin squares are two-dimensional")
    n = grid.n
    if len(grid.alphabet) != n:
        raise ValueError(f"alphabet size {len(grid.alphabet)} != order {n}")
    for line in enumerate_lines(n, 2):
        reading = [grid.at(q) for q in line_points(line, n)]
        if len(set(reading)) != n:
            return False
    return True


@lru_cache(maxsize=32)
def compiled_segments(n: int, d: int, k: int, cap: int = DEFAULT_LINE_CAP) -> np.ndarray:
    """Flat point indices of every canonical length-k segment, one row each."""
    total = count_segments(n, d, k)
    if total > cap:
        raise ValueError(f"{total} segments at (n={n}, d={d}, k={k}) exceed the table cap {cap}")
    idx = np.empty((total, k), dtype=np.int64)
    for row, seg in enumerate(enumerate_segments(n, d, k)):
        for i, q in enumerate(segment_points(seg, n)):
            idx[row, i] = point_index(q, n, d)
    return idx


def count_segments_word(w: Word, grid: Grid, cap: int = DEFAULT_LINE_CAP) -> int:
    """Length-k occurrences: segments of the grid reading w forward or backward."""
    k = w.n
    if k > grid.n:
        raise ValueError(f"word length {k} exceeds grid side {grid.n}")
    if not grid.dense:
        raise ValueError("segment counting needs a dense grid")
    sym = _word_symbols(w, grid)
    idx = compiled_segments(grid.n, grid.d, k, cap)
    cells = np.frombuffer(grid.cells, dtype=np.uint8)
    readings = cells[idx]
    fwd = (readings == np.array(sym, dtype=np.uint8)).all(axis=1)
    if sym == sym[::-1]:
        return int(fwd.sum())
    bwd = (readings == np.array(sym[::-1], dtype=np.uint8)).all(axis=1)
    return int((fwd | bwd).sum())


def hoeffding_radius(samples: int, confidence: float = HOEFFDING_CONFIDENCE) -> float:
    """Two-sided Hoeffding deviation radius at the given confidence."""
    return math.sqrt(math.log(2 / (1 - confidence)) / (2 * samples))


def estimate_fraction(w: Word, grid: Grid, samples: int, rng) -> tuple[float, float]:
    """Empirical fraction of lines containing w, with a 99% Hoeffding radius.

    Draws uniform lines and evaluates containment pointwise, so procedural
    grids of any dimension work.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if w.n != grid.n:
        raise ValueError(f"word length {w.n} != grid side {grid.n}")
    hits = 0
    for _ in range(samples):
        if line_contains(w, grid, sample_line(grid.n, grid.d, rng)):
            hits += 1
    return hits / samples, hoeffding_radius(samples)
