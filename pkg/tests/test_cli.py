"""CLI: golden output, exit codes, and WG1 round-trips through files."""

import pytest

from wordgrid.cli import main
from wordgrid.core import Grid, Word, infer_alphabet, parse_grid, serialize_grid
from wordgrid.occurrence import count_word
from wordgrid.solver import SolveConfig, solve


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- tallies

def test_lines_tallies(capsys):
    code, out, _ = run(capsys, "lines", "-n", "3", "-d", "2")
    assert code == 0
    assert out == "weight 1: 6\nweight 2: 2\ntotal 8\n"


def test_lines_listing(capsys):
    code, out, _ = run(capsys, "lines", "-n", "3", "-d", "2", "--list")
    assert code == 0
    assert len(out.splitlines()) == 8
    assert "1,1 ; 1,1" in out


def test_segments_total(capsys):
    code, out, _ = run(capsys, "segments", "-n", "5", "-d", "2", "-k", "2")
    assert code == 0
    assert out == "total 72\n"


# ---------------------------------------------------------------- construct / count

def test_construct_writes_wg1_and_count_reads_it_back(capsys, tmp_path):
    grid_file = tmp_path / "amm.wg1"
    code, out, _ = run(capsys, "construct", "--word", "AMM", "--out", str(grid_file))
    assert code == 0
    assert "provenance cross(M)" in out
    assert "guaranteed 5" in out
    assert "achieved 5" in out
    parsed = parse_grid(grid_file.read_text())
    assert serialize_grid(parsed) == grid_file.read_text()

    code, out, _ = run(capsys, "count", "--word", "AMM", "--grid", str(grid_file))
    assert code == 0
    assert out.splitlines()[0] == "total 5"
    assert "weight 1: 4" in out
    assert "weight 2: 1" in out


def test_count_matches_listing(capsys, tmp_path):
    grid_file = tmp_path / "amm.wg1"
    run(capsys, "construct", "--word", "AMM", "--out", str(grid_file))
    code, out, _ = run(capsys, "count", "--word", "AMM", "--grid", str(grid_file),
                       "--matches")
    assert code == 0
    assert len([ln for ln in out.splitlines() if ";" in ln]) == 5


def test_construct_specific_methods(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--word", "AMAAM", "--method", "quad",
                       "--letters", "A,M", "--out", str(tmp_path / "q.wg1"))
    assert code == 0
    assert "guaranteed 8" in out
    code, out, _ = run(capsys, "construct", "--word", "AM", "--method", "parity",
                       "-d", "3", "--out", str(tmp_path / "p.wg1"))
    assert code == 0
    assert "achieved 16" in out
    code, out, _ = run(capsys, "construct", "--word", "AMM", "--method", "cross")
    assert code == 1  # cross without --letter


def test_construct_counterpoint_is_uncertified(capsys, tmp_path):
    out_file = tmp_path / "c.wg1"
    code, out, _ = run(capsys, "construct", "--word", "AMM", "--method",
                       "counterpoint", "-d", "3", "--out", str(out_file))
    assert code == 0
    assert "non-certified" in out
    assert parse_grid(out_file.read_text()).d == 3


# ---------------------------------------------------------------- bounds / f1

def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--word", "AMM")
    assert code == 0
    assert "rule non-palindrome: 6" in out
    assert "lower 5" in out
    assert "upper 6" in out
    assert "exact 5 (two-block)" in out


def test_bounds_unknown_exact(capsys):
    code, out, _ = run(capsys, "bounds", "--word", "ABC")
    assert code == 0
    assert "exact unknown" in out


def test_f1_with_witness(capsys):
    code, out, _ = run(capsys, "f1", "--word", "ABCD", "-n", "7", "--witness")
    assert code == 0
    assert out == "value 2\nwitness ABCDCBA\n"


# ---------------------------------------------------------------- solve

def test_solve_word(capsys):
    code, out, _ = run(capsys, "solve", "--word", "AMM")
    assert code == 0
    assert out.startswith("optimum 5\n")


def test_solve_enumerate_prints_witness_grids(capsys):
    code, out, _ = run(capsys, "solve", "--word", "AMM", "--enumerate")
    assert code == 0
    assert "classes 6" in out
    assert "WG1 d=2 n=3 sigma=AM" in out


def test_solve_budget_exhaustion_exits_3(capsys):
    code, out, _ = run(capsys, "solve", "--word", "AAMMM", "--node-budget", "3")
    assert code == 3
    assert out.startswith("interval ")


def test_solve_word_set(capsys):
    code, out, _ = run(capsys, "solve", "--words", "AM,MA")
    assert code == 0
    assert out.startswith("optimum 4\n")


def test_solve_needs_exactly_one_word_source(capsys):
    code, _, err = run(capsys, "solve")
    assert code == 1
    code, _, err = run(capsys, "solve", "--word", "AM", "--words", "AM,MA")
    assert code == 1


# ---------------------------------------------------------------- estimate

def test_estimate_requires_seed(capsys):
    code, _, err = run(capsys, "estimate", "--word", "AMM", "-d", "4",
                       "--samples", "100")
    assert code == 1
    assert "--seed" in err


def test_estimate_reports_fraction_and_radius(capsys):
    code, out, _ = run(capsys, "estimate", "--word", "AMM", "-d", "4",
                       "--samples", "2000", "--seed", "11")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("fraction 0.")
    assert lines[1].startswith("radius 0.")
    assert lines[2] == "samples 2000"


def test_estimate_is_seed_deterministic(capsys):
    args = ("estimate", "--word", "AMM", "-d", "4", "--samples", "500",
            "--seed", "42")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


# ---------------------------------------------------------------- verify

def test_verify_fast_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fast")
    assert code == 0
    lines = out.splitlines()
    assert all("status=PASS" in ln for ln in lines[:-1])
    assert lines[-1].startswith("suite=fast checks=")
    assert lines[-1].endswith("failed=0")
    assert any("check=optimum-amm-2d" in ln for ln in lines)
    assert any("check=line-tallies" in ln for ln in lines)


# ---------------------------------------------------------------- unfold

def write_cube(tmp_path, grid):
    path = tmp_path / "cube.wg1"
    path.write_text(serialize_grid(grid))
    return str(path)


def test_unfold_constant_cube(capsys, tmp_path):
    grid = Grid(n=3, d=3, alphabet=infer_alphabet("A"), cells=bytes(27))
    path = write_cube(tmp_path, grid)
    code, out, _ = run(capsys, "unfold", path)
    assert code == 0
    assert out == (
        "    AAA\n    AAA\n    AAA\n"
        "AAA AAA AAA AAA\nAAA AAA AAA AAA\nAAA AAA AAA AAA\n"
        "    AAA\n    AAA\n    AAA\n"
        "center A\n"
    )


def test_unfold_solver_witness_annotated(capsys, tmp_path):
    w = Word.from_string("AMM")
    res = solve(w, 3, 3, SolveConfig(enumerate_witnesses=True))
    path = write_cube(tmp_path, res.witnesses[0])
    code, out, _ = run(capsys, "unfold", path, "--word", "AMM")
    assert code == 0
    assert out.endswith("f = 28\n")


def test_unfold_rejects_wrong_shape(capsys, tmp_path):
    grid = Grid(n=3, d=2, alphabet=infer_alphabet("A"), cells=bytes(9))
    path = tmp_path / "flat.wg1"
    path.write_text(serialize_grid(grid))
    code, _, err = run(capsys, "unfold", str(path))
    assert code == 1
    assert "unfold requires d=3 n=3" in err


def test_unfold_faces_cover_full_surface(capsys, tmp_path):
    # label the 26 boundary cells with distinct letters: the net must show
    # all 26, as 54 cells with corner/edge/face multiplicities 3/2/1
    from wordgrid.core import Alphabet, all_points, point_index
    letters = tuple(chr(ord("a") + i) for i in range(26))
    boundary = [p for p in all_points(3, 3) if p != (2, 2, 2)]
    cells = bytearray(27)
    for i, p in enumerate(boundary):
        cells[point_index(p, 3, 3)] = i
    cells[point_index((2, 2, 2), 3, 3)] = 0  # center reuses 'a', not on the net
    grid = Grid(n=3, d=3, alphabet=Alphabet(letters), cells=bytes(cells))
    path = write_cube(tmp_path, grid)
    code, out, _ = run(capsys, "unfold", path)
    assert code == 0
    net = "".join(ch for ch in out.split("center")[0] if ch.islower())
    assert len(net) == 54
    assert set(net) == set(letters)


# ---------------------------------------------------------------- errors

def test_bad_grid_file_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.wg1"
    path.write_text("WG1 d=2 n=3 sigma=AM\nAM\n")
    code, _, err = run(capsys, "count", "--word", "AM", "--grid", str(path))
    assert code == 1
    assert "error:" in err


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, "count", "--word", "AM",
                       "--grid", str(tmp_path / "absent.wg1"))
    assert code == 1


def test_unknown_method_letter_errors(capsys):
    code, _, err = run(capsys, "construct", "--word", "AMM", "--method", "cross",
                       "--letter", "Z")
    assert code == 1
