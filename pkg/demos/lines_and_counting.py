"""Lines of an n^d grid and counting where a word appears."""

from wordgrid import (
    Grid,
    Word,
    count_lines,
    count_word,
    enumerate_lines,
    format_line,
    parse_grid,
    sample_line,
    serialize_grid,
)

# A 3x3 board has 3 rows, 3 columns and 2 diagonals. The same bookkeeping
# works in any dimension: a line is a maximal run of n cells stepping by a
# direction vector with entries in {-1, 0, +1}.

for line in enumerate_lines(3, 2):
    print(format_line(line))

per_weight, total = count_lines(3, 2)
print("per weight:", per_weight, "total:", total)

# The tally follows a closed form: weight-r lines number C(d,r) 2^(r-1) n^(d-r).
# A 4-dimensional tic-tac-toe board already has a crowd of diagonals.

per_weight, total = count_lines(3, 4)
print("n=3 d=4 per weight:", per_weight, "total:", total)

# Counting a word in a grid: AMM appears along 5 of the 8 lines of this board.

grid = Grid.from_rows(["AAA", "AMM", "AMM"])
report = count_word(Word.from_string("AMM"), grid)
print("AMM total:", report.total, "by weight:", report.per_weight)

# Grids serialize to a tiny text format and round-trip losslessly.

text = serialize_grid(grid)
print(text, end="")
assert serialize_grid(parse_grid(text)) == text

# Uniform random lines (for sampling estimates in big dimensions): each line
# has the same chance of being drawn, both orientations collapsed to one.

import random

rng = random.Random(7)
draws = [sample_line(3, 2, rng) for _ in range(8000)]
rows = sum(1 for ln in draws if ln.weight == 1)
print("weight-1 fraction:", rows / len(draws), "(expect 6/8)")
