"""Exact maximization of f(w, G) over all grids by branch-and-bound.

The search fills cells in a fixed order (most incident lines first) over the
letters of the word only: in any optimal grid, a cell lying on no matched
line can be recolored to the word's first letter without destroying matches,
since matches are full-line exact patterns. Some optimum therefore uses only
letters of w, and the search space is |letters(w)|^(n^d).

Lines are tracked as bitmasks: for each orientation of each line, a mask of
the cell assignments that contradict it. A line is dead once both
orientations are contradicted; the bound (lines alive) is exact at leaves and
monotone along any branch, so pruning against the incumbent is safe.

Witness sets are reproducible across worker counts: collection prunes
strictly (bound < incumbent), which can never cut a subtree containing an
optimal leaf, whatever the incumbent was at the time. Node and prune tallies
do depend on scheduling and are reported as informational stats only.
"""

from __future__ import annotations

import itertools
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Alphabet, Grid, Word, serialize_grid, symmetry_cell_tables
from .lines import enumerate_lines, line_points
from .core import point_index
from .occurrence import count_word, count_word_set

DEFAULT_CELL_CAP = 64
SET_CELL_CAP = 25
ORACLE_STATE_CAP = 2**28
BEAM_WIDTH = 64
SYMMETRY_DEPTH = 12
MIN_TASKS = 8
BUDGET_CHECK_MASK = 0xFFF
COLLECT_TRIM = 200_000


@dataclass(frozen=True)
class SolveConfig:
    """Search knobs; defaults give an exact single-threaded run."""

    node_budget: int | None = None
    time_budget: float | None = None
    symmetry: bool = True
    enumerate_witnesses: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    bound_prunes: int
    symmetry_prunes: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a search: exact optimum, or a certified interval on budget.

    `witnesses` holds grids achieving `lower`, deduplicated to the
    lexicographically minimal representative of each symmetry class; with
    witness enumeration on, every optimal class is present and `classes`
    counts them. Stats are informational and scheduling-dependent.
    """

    complete: bool
    lower: int
    upper: int
    witnesses: tuple[Grid, ...]
    classes: int | None
    stats: SolveStats

    @property
    def optimum(self) -> int | None:
        return self.lower if self.complete else None

    def canonical_text(self) -> str:
        """Stable rendering of the mathematically meaningful output."""
        out = []
        if self.complete:
            out.append(f"optimum {self.lower}")
        else:
            out.append(f"interval {self.lower} {self.upper}")
        out.append(f"classes {self.classes if self.classes is not None else 'unknown'}")
        out.append(f"witnesses {len(self.witnesses)}")
        for g in self.witnesses:
            out.append(serialize_grid(g).rstrip("\n"))
        return "\n".join(out) + "\n"


class _Problem:
    """Compiled search instance: masks, branch order, symmetry maps."""

    def __init__(self, symbol_rows: Sequence[tuple[int, ...]], letters: tuple[str, ...],
                 n: int, d: int, symmetry: bool):
        self.n, self.d = n, d
        self.letters = letters
        A = len(letters)
        self.A = A
        N = n**d
        self.N = N
        lines = list(enumerate_lines(n, d))
        self.L = len(lines)
        line_cells = [
            [point_index(q, n, d) for q in line_points(line, n)] for line in lines
        ]

        probes: list[tuple[int, ...]] = []
        for row in symbol_rows:
            for pr in (row, row[::-1]):
                if pr not in probes:
                    probes.append(pr)
        self.probes = probes

        # pmask[p][c][a]: lines whose probe-p reading is contradicted by a at c
        pmask = [[[0] * A for _ in range(N)] for _ in probes]
        for pi, pr in enumerate(probes):
            masks = pmask[pi]
            for li, cells in enumerate(line_cells):
                bit = 1 << li
                for t, c in enumerate(cells):
                    want = pr[t]
                    row_masks = masks[c]
                    for a in range(A):
                        if a != want:
                            row_masks[a] |= bit

        incident = [0] * N
        for cells in line_cells:
            for c in cells:
                incident[c] += 1
        self.order = sorted(range(N), key=lambda c: (-incident[c], c))
        pos_of = [0] * N
        for i, c in enumerate(self.order):
            pos_of[c] = i

        # reorder masks by branch position so dfs indexes by depth directly
        self.pmask_by_depth = [
            [tuple(masks[self.order[i]]) for i in range(N)] for masks in pmask
        ]

        self.gmaps: tuple[tuple[int, ...], ...] = ()
        if symmetry:
            tables = symmetry_cell_tables(n, d)
            seen = set()
            gmaps = []
            for tg in tables[1:]:
                gm = tuple(pos_of[tg[self.order[i]]] for i in range(N))
                if gm not in seen:
                    seen.add(gm)
                    gmaps.append(gm)
            self.gmaps = tuple(gmaps)


class _Shared:
    """Cross-task mutable state: monotone incumbent, budgets, stop flag."""

    def __init__(self, incumbent: int, node_budget: int | None, deadline: float | None):
        self.lock = threading.Lock()
        self.incumbent = incumbent
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline
        self.stopped = False

    def raise_incumbent(self, value: int) -> None:
        with self.lock:
            if value > self.incumbent:
                self.incumbent = value

    def charge(self, nodes: int) -> bool:
        """Account a node batch; returns True when the search must stop."""
        with self.lock:
            self.nodes += nodes
            if self.node_budget is not None and self.nodes > self.node_budget:
                self.stopped = True
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.stopped = True
        return self.stopped


@dataclass
class _TaskOutcome:
    best_value: int
    best_leaf: bytes | None
    collected: list[tuple[int, bytes]]
    open_bound: int
    nodes: int
    bound_prunes: int
    symmetry_prunes: int


def _search_letters(words: Sequence[Word]) -> tuple[tuple[str, ...], list[tuple[int, ...]]]:
    """Distinct letters over all words (first-appearance order) and remapped rows."""
    letters: list[str] = []
    for w in words:
        for ch in w.text:
            if ch not in letters:
                letters.append(ch)
    rows = [tuple(letters.index(ch) for ch in w.text) for w in words]
    return tuple(letters), rows


def _beam_seed(problem: _Problem, width: int = BEAM_WIDTH) -> tuple[int, bytes]:
    """Deterministic beam over the branch order; returns (value, assignment)."""
    P = len(problem.probes)
    L, A, N = problem.L, problem.A, problem.N
    masks = problem.pmask_by_depth
    states: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = [(L, (0,) * P, ())]
    for depth in range(N):
        nxt: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []
        for _, bads, s in states:
            for a in range(A):
                nb = tuple(bads[p] | masks[p][depth][a] for p in range(P))
                dead = nb[0]
                for p in range(1, P):
                    dead &= nb[p]
                nxt.append((L - dead.bit_count(), nb, s + (a,)))
        nxt.sort(key=lambda e: (-e[0], e[2]))
        states = nxt[:width]
    best = max(states, key=lambda e: (e[0], tuple(-x for x in e[2])))
    return best[0], bytes(best[2])


def _run_task(problem: _Problem, prefix: tuple[int, ...], shared: _Shared,
              strict: bool, collect: bool, sym_depth: int) -> _TaskOutcome:
    """Depth-first search below one prefix of the branch order."""
    P = len(problem.probes)
    L, A, N = problem.L, problem.A, problem.N
    masks = problem.pmask_by_depth
    gmaps = problem.gmaps
    out = _TaskOutcome(best_value=-1, best_leaf=None, collected=[],
                       open_bound=-1, nodes=0, bound_prunes=0, symmetry_prunes=0)
    s: list[int] = list(prefix)
    counter = [0]

    bads0 = [0] * P
    for depth, a in enumerate(prefix):
        for p in range(P):
            bads0[p] |= masks[p][depth][a]

    def leaf(value: int) -> None:
        if value > shared.incumbent:
            shared.raise_incumbent(value)
        blob = bytes(s)
        if collect and value >= shared.incumbent:
            out.collected.append((value, blob))
            if len(out.collected) > COLLECT_TRIM:
                inc = shared.incumbent
                out.collected[:] = [e for e in out.collected if e[0] >= inc]
        if value > out.best_value or (value == out.best_value and
                                      (out.best_leaf is None or blob < out.best_leaf)):
            out.best_value = value
            out.best_leaf = blob

    def dfs(q: int, bads: tuple[int, ...]) -> None:
        dead = bads[0]
        for p in range(1, P):
            dead &= bads[p]
        bound = L - dead.bit_count()
        if shared.stopped:
            out.open_bound = max(out.open_bound, bound)
            return
        counter[0] += 1
        if counter[0] & BUDGET_CHECK_MASK == 0:
            if shared.charge(BUDGET_CHECK_MASK + 1):
                out.open_bound = max(out.open_bound, bound)
                return
        if 2 <= q <= sym_depth:
            for gm in gmaps:
                for i in range(q):
                    j = gm[i]
                    if j >= q:
                        break
                    vj = s[j]
                    vi = s[i]
                    if vj < vi:
                        out.symmetry_prunes += 1
                        return
                    if vj > vi:
                        break
        if q == N:
            leaf(bound)
            return
        inc = shared.incumbent
        mq = [masks[p][q] for p in range(P)]
        for a in range(A):
            nb = tuple(bads[p] | mq[p][a] for p in range(P))
            ndead = nb[0]
            for p in range(1, P):
                ndead &= nb[p]
            nbound = L - ndead.bit_count()
            if nbound < inc or (not strict and nbound == inc):
                out.bound_prunes += 1
                continue
            s.append(a)
            dfs(q + 1, nb)
            s.pop()
            inc = shared.incumbent

    dfs(len(prefix), tuple(bads0))
    out.nodes = counter[0]
    shared.charge(counter[0] & BUDGET_CHECK_MASK)
    return out


def _hunt_witness(problem: _Problem, target: int, sym_depth: int) -> bytes | None:
    """First leaf in branch order achieving the target; sequential, deterministic."""
    P = len(problem.probes)
    L, A, N = problem.L, problem.A, problem.N
    masks = problem.pmask_by_depth
    gmaps = problem.gmaps
    s: list[int] = []

    def dfs(q: int, bads: tuple[int, ...]) -> bytes | None:
        if 2 <= q <= sym_depth:
            for gm in gmaps:
                for i in range(q):
                    j = gm[i]
                    if j >= q:
                        break
                    if s[j] < s[i]:
                        return None
                    if s[j] > s[i]:
                        break
        if q == N:
            return bytes(s)
        for a in range(A):
            nb = tuple(bads[p] | masks[p][q][a] for p in range(P))
            dead = nb[0]
            for p in range(1, P):
                dead &= nb[p]
            if L - dead.bit_count() < target:
                continue
            s.append(a)
            found = dfs(q + 1, nb)
            s.pop()
            if found is not None:
                return found
        return None

    return dfs(0, (0,) * P)


def _task_prefixes(problem: _Problem, sym_depth: int) -> list[tuple[int, ...]]:
    """Prefixes splitting the tree into a worker-count-independent task list."""
    A, N = problem.A, problem.N
    depth = 0
    while A**depth < MIN_TASKS and depth < N and depth < 4:
        depth += 1
    prefixes = []
    for prefix in itertools.product(range(A), repeat=depth):
        if problem.gmaps and 2 <= depth <= sym_depth:
            pruned = False
            for gm in problem.gmaps:
                for i in range(depth):
                    j = gm[i]
                    if j >= depth:
                        break
                    if prefix[j] < prefix[i]:
                        pruned = True
                        break
                    if prefix[j] > prefix[i]:
                        break
                if pruned:
                    break
            if pruned:
                continue
        prefixes.append(prefix)
    return prefixes


def _canonical_cells(blob: bytes, problem: _Problem) -> bytes:
    """Lexicographically minimal cell array over the symmetry group."""
    N = problem.N
    cells = bytearray(N)
    for depth, a in enumerate(blob):
        cells[problem.order[depth]] = a
    tables = symmetry_cell_tables(problem.n, problem.d)
    return min(bytes(cells[tg[c]] for c in range(N)) for tg in tables)


def _assemble(problem: _Problem, outcomes: list[_TaskOutcome], shared: _Shared,
              beam_value: int, beam_leaf: bytes, enumerate_witnesses: bool,
              elapsed: float, verify) -> SolveResult:
    nodes = sum(o.nodes for o in outcomes)
    bprunes = sum(o.bound_prunes for o in outcomes)
    sprunes = sum(o.symmetry_prunes for o in outcomes)
    stats = SolveStats(nodes=nodes, bound_prunes=bprunes,
                       symmetry_prunes=sprunes, elapsed=elapsed)
    lower = max([shared.incumbent] + [o.best_value for o in outcomes])
    complete = not shared.stopped
    open_bound = max((o.open_bound for o in outcomes), default=-1)
    upper = lower if complete else max(lower, open_bound)

    alphabet = Alphabet(problem.letters)

    def grid_of(cells: bytes) -> Grid:
        return Grid(n=problem.n, d=problem.d, alphabet=alphabet, cells=cells)

    if enumerate_witnesses and complete:
        forms = set()
        for o in outcomes:
            for value, blob in o.collected:
                if value == lower:
                    forms.add(_canonical_cells(blob, problem))
        witnesses = tuple(grid_of(c) for c in sorted(forms))
        classes: int | None = len(witnesses)
    else:
        if complete:
            blob = _hunt_witness(problem, lower, SYMMETRY_DEPTH if problem.gmaps else 0)
        else:
            cands = [o.best_leaf for o in outcomes if o.best_value == lower and o.best_leaf]
            if not cands and beam_value == lower:
                cands = [beam_leaf]
            blob = min(cands) if cands else None
        witnesses = (grid_of(_canonical_cells(blob, problem)),) if blob else ()
        classes = None

    for g in witnesses:
        got = verify(g)
        if got != lower:
            raise AssertionError(f"witness re-verification got {got}, expected {lower}")
    return SolveResult(complete=complete, lower=lower, upper=upper,
                       witnesses=witnesses, classes=classes, stats=stats)


def _solve_rows(words: Sequence[Word], n: int, d: int, cfg: SolveConfig,
                cell_cap: int, verify) -> SolveResult:
    if any(w.n != n for w in words):
        raise ValueError("word length must equal the grid side n")
    if n**d > cell_cap:
        raise ValueError(f"{n}^{d} cells exceed the search cap {cell_cap}")
    letters, rows = _search_letters(words)
    problem = _Problem(rows, letters, n, d, symmetry=cfg.symmetry)
    sym_depth = SYMMETRY_DEPTH if cfg.symmetry else 0

    start = time.monotonic()
    beam_value, beam_leaf = _beam_seed(problem)
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None
    # strict pruning keeps every optimal leaf reachable for enumeration
    strict = cfg.enumerate_witnesses
    shared = _Shared(incumbent=beam_value, node_budget=cfg.node_budget, deadline=deadline)

    prefixes = _task_prefixes(problem, sym_depth)
    if cfg.workers == 1:
        outcomes = [_run_task(problem, pre, shared, strict, cfg.enumerate_witnesses, sym_depth)
                    for pre in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(pool.map(
                lambda pre: _run_task(problem, pre, shared, strict,
                                      cfg.enumerate_witnesses, sym_depth),
                prefixes))
    elapsed = time.monotonic() - start
    return _assemble(problem, outcomes, shared, beam_value, beam_leaf,
                     cfg.enumerate_witnesses, elapsed, verify)


def solve(w: Word, n: int, d: int, cfg: SolveConfig = SolveConfig()) -> SolveResult:
    """Maximize f(w, G) over all (n, d)-grids; exact unless a budget is hit."""
    return _solve_rows([w], n, d, cfg, DEFAULT_CELL_CAP,
                       lambda g: count_word(w, g).total)


def solve_set(words: Sequence[Word], n: int, d: int,
              cfg: SolveConfig = SolveConfig()) -> SolveResult:
    """Maximize f(W, G). The single-word letter reduction does not carry over
    to sets, so the search alphabet is the union of all word letters and the
    cell cap is tighter."""
    word_list = list(words)
    if not word_list:
        raise ValueError("word set must be nonempty")
    return _solve_rows(word_list, n, d, cfg, SET_CELL_CAP,
                       lambda g: count_word_set(word_list, g).total)


def solve_oracle(w: Word, n: int, d: int) -> int:
    """f(w) by plain enumeration of every grid over letters(w).

    No pruning and no symmetry: an independent check on solve. Grids are the
    axes of a |letters|^(n^d) tensor; each line orientation adds 1 on the
    slice of grids reading it, so the tensor maximum is the optimum.
    """
    if w.n != n:
        raise ValueError("word length must equal the grid side n")
    letters, (row,) = _search_letters([w])
    A = len(letters)
    N = n**d
    if A**N > ORACLE_STATE_CAP:
        raise ValueError(f"{A}^{N} grids exceed the oracle cap {ORACLE_STATE_CAP}")
    scores = np.zeros((A,) * N, dtype=np.uint8)
    readings = [row] if row == row[::-1] else [row, row[::-1]]
    for line in enumerate_lines(n, d):
        cells = [point_index(q, n, d) for q in line_points(line, n)]
        for reading in readings:
            slicer: list = [slice(None)] * N
            for t, c in enumerate(cells):
                slicer[c] = reading[t]
            scores[tuple(slicer)] += 1
    return int(scores.max())
