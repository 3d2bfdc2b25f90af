"""Lines and segments of [n]^d: canonical pairs, enumeration, counting, sampling.

A line is the point sequence p, p+v, ..., p+(n-1)v staying inside [n]^d; the
canonical pair orients v so its first nonzero coordinate is +1. Lines are
encoded as sequences over {1..n, +, -} with at least one sign and a leading
'+' sign: numeral a fixes a coordinate at a, '+' sweeps 1..n upward, '-'
sweeps n..1 downward. Segments of length k <= n use the same scheme with
sign symbols carrying their start offset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .core import Point

Direction = tuple[int, ...]

PLUS = "+"
MINUS = "-"

SAMPLE_CAP = 10**6


@dataclass(frozen=True)
class CanonicalLine:
    """Canonical (p; v) pair of a full line; weight is the nonzero count of v."""

    p: Point
    v: Direction
    weight: int

    def __post_init__(self) -> None:
        if len(self.p) != len(self.v):
            raise ValueError("p and v must have the same dimension")
        nz = [x for x in self.v if x != 0]
        if not nz:
            raise ValueError("direction must have a nonzero coordinate")
        if nz[0] != 1:
            raise ValueError("first nonzero direction coordinate must be +1")
        if any(x not in (-1, 0, 1) for x in self.v):
            raise ValueError("direction coordinates must be in {-1, 0, +1}")
        if self.weight != len(nz):
            raise ValueError("weight must equal the nonzero count of v")


@dataclass(frozen=True)
class Segment:
    """Canonical (p; v) pair of a length-k segment."""

    p: Point
    v: Direction
    k: int
    weight: int

    def __post_init__(self) -> None:
        if len(self.p) != len(self.v):
            raise ValueError("p and v must have the same dimension")
        nz = [x for x in self.v if x != 0]
        if not nz or nz[0] != 1:
            raise ValueError("first nonzero direction coordinate must be +1")
        if self.k < 2:
            raise ValueError("segments need k >= 2")
        if self.weight != len(nz):
            raise ValueError("weight must equal the nonzero count of v")


def canonicalize(p: Point, v: Direction, n: int) -> CanonicalLine:
    """Canonical pair of the full line through (p, v); both orientations agree."""
    if n < 2:
        raise ValueError("lines need n >= 2")
    if len(p) != len(v):
        raise ValueError("p and v must have the same dimension")
    if all(x == 0 for x in v):
        raise ValueError("direction must be nonzero")
    for i in range(n):
        for pj, vj in zip(p, v):
            x = pj + i * vj
            if not 1 <= x <= n:
                raise ValueError(f"line ({p}; {v}) leaves [1, {n}]^{len(p)} at step {i + 1}")
    first = next(x for x in v if x != 0)
    if first == -1:
        p = tuple(pj + (n - 1) * vj for pj, vj in zip(p, v))
        v = tuple(-vj for vj in v)
    return CanonicalLine(p, v, weight=sum(1 for x in v if x != 0))


def line_points(line: CanonicalLine, n: int) -> list[Point]:
    """The n points of the line in canonical order, checked against [1, n]^d."""
    pts = []
    for i in range(n):
        q = tuple(pj + i * vj for pj, vj in zip(line.p, line.v))
        if any(not 1 <= x <= n for x in q):
            raise ValueError(f"line {line} leaves [1, {n}]^{len(line.p)}")
        pts.append(q)
    return pts


def segment_points(seg: Segment, n: int) -> list[Point]:
    """The k points of the segment, checked against [1, n]^d."""
    pts = []
    for i in range(seg.k):
        q = tuple(pj + i * vj for pj, vj in zip(seg.p, seg.v))
        if any(not 1 <= x <= n for x in q):
            raise ValueError(f"segment {seg} leaves [1, {n}]^{len(seg.p)}")
        pts.append(q)
    return pts


def decode_line_code(code: tuple, n: int) -> CanonicalLine:
    """Line of an encoded sequence: numeral a -> fixed at a, '+' -> up, '-' -> down."""
    p, v = [], []
    for sym in code:
        if sym == PLUS:
            p.append(1)
            v.append(1)
        elif sym == MINUS:
            p.append(n)
            v.append(-1)
        else:
            p.append(sym)
            v.append(0)
    return CanonicalLine(tuple(p), tuple(v), weight=sum(1 for x in v if x != 0))


def mirror_normalize(code: tuple) -> tuple:
    """Swap '+' and '-' throughout if the first sign is '-'; identity otherwise."""
    first = next((sym for sym in code if sym in (PLUS, MINUS)), None)
    if first != MINUS:
        return code
    swap = {PLUS: MINUS, MINUS: PLUS}
    return tuple(swap.get(sym, sym) for sym in code)


def enumerate_lines(n: int, d: int, weight: int | None = None) -> Iterator[CanonicalLine]:
    """All canonical lines of [n]^d, each exactly once, in encoding order.

    The per-coordinate symbol order is 1..n, '+', '-', so the stream is
    lexicographic over encoded sequences and deterministic.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    symbols = list(range(1, n + 1)) + [PLUS, MINUS]
    for code in itertools.product(symbols, repeat=d):
        signs = [sym for sym in code if sym == PLUS or sym == MINUS]
        if not signs or signs[0] == MINUS:
            continue
        if weight is not None and len(signs) != weight:
            continue
        yield decode_line_code(code, n)


def count_lines(n: int, d: int) -> tuple[dict[int, int], int]:
    """Closed-form line tally per weight r and in total.

    Weight r contributes C(d,r) * 2^(r-1) * n^(d-r); the total telescopes to
    ((n+2)^d - n^d) / 2.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    per_weight = {r: comb(d, r) * 2 ** (r - 1) * n ** (d - r) for r in range(1, d + 1)}
    total = ((n + 2) ** d - n**d) // 2
    assert sum(per_weight.values()) == total
    return per_weight, total


def sample_line(n: int, d: int, rng) -> CanonicalLine:
    """One uniform canonical line, by rejection over {1..n, +, -}^d.

    Sequences without a sign are rejected; the rest are mirror-normalized so
    the first sign is '+'. Every line has exactly two preimages, so accepted
    draws are uniform over lines.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    for _ in range(SAMPLE_CAP):
        raw = [rng.randrange(n + 2) for _ in range(d)]
        if all(x < n for x in raw):
            continue
        code = tuple(x + 1 if x < n else (PLUS if x == n else MINUS) for x in raw)
        return decode_line_code(mirror_normalize(code), n)
    raise RuntimeError(f"no line accepted within {SAMPLE_CAP} draws")


def _segment_symbols(n: int, k: int) -> list:
    """Per-coordinate symbols: numerals, then tagged up-starts, then down-starts."""
    ups = [(PLUS, a) for a in range(1, n - k + 2)]
    downs = [(MINUS, b) for b in range(k, n + 1)]
    return list(range(1, n + 1)) + ups + downs


def enumerate_segments(n: int, d: int, k: int) -> Iterator[Segment]:
    """All canonical length-k segments of [n]^d, each exactly once."""
    if not 2 <= k <= n:
        raise ValueError(f"segment length k={k} out of [2, n={n}]")
    if d < 1:
        raise ValueError("need d >= 1")
    for code in itertools.product(_segment_symbols(n, k), repeat=d):
        signs = [sym for sym in code if isinstance(sym, tuple)]
        if not signs or signs[0][0] == MINUS:
            continue
        p, v = [], []
        for sym in code:
            if isinstance(sym, tuple):
                p.append(sym[1])
                v.append(1 if sym[0] == PLUS else -1)
            else:
                p.append(sym)
                v.append(0)
        yield Segment(tuple(p), tuple(v), k=k, weight=len(signs))


def count_segments(n: int, d: int, k: int) -> int:
    """Closed-form segment count ((3n-2k+2)^d - n^d) / 2."""
    if not 2 <= k <= n:
        raise ValueError(f"segment length k={k} out of [2, n={n}]")
    if d < 1:
        raise ValueError("need d >= 1")
    return ((3 * n - 2 * k + 2) ** d - n**d) // 2


def format_line(line: CanonicalLine) -> str:
    """Render a canonical pair as `p1,...,pd ; v1,...,vd`."""
    return ",".join(map(str, line.p)) + " ; " + ",".join(map(str, line.v))
