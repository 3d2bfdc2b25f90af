"""Building grids that provably read a word many times."""

from wordgrid import (
    Word,
    best_construction,
    cross_grid,
    few_letter_word,
    parity_grid,
    quad_grid,
    rows_grid,
    stripe_grid,
)


def show(result):
    g = result.grid
    print(f"{result.provenance}: guaranteed {result.guaranteed}, "
          f"achieved {result.achieved}")
    if g.cells is not None and g.d == 2:
        for i in range(1, g.n + 1):
            print("  " + "".join(g.letter_at((i, j)) for j in range(1, g.n + 1)))


# Writing the word along every row already gives n rows plus both diagonals.

show(rows_grid(Word.from_string("ABC")))

# The cross construction puts the word on the rows indexed by a chosen
# letter's positions; those columns then read it too. When every chosen
# position faces the same letter across the middle, the antidiagonal joins.

show(cross_grid(Word.from_string("BAACA"), "A"))
show(cross_grid(Word.from_string("ABACA"), "A"))

# Words that pair a letter with its mirror letter support a four-band layout,
# and binary words support a stripe layout.

show(quad_grid(Word.from_string("AMAAM"), "A", "M"))
show(stripe_grid(Word.from_string("AMAAM")))

# For binary words whose reversal flips every letter, a parity two-coloring
# puts the word on every odd-weight line, in any dimension. Its count is
# computed in closed form, so even astronomically large grids get exact
# certificates.

show(parity_grid(Word.from_string("AM"), 2))
big = parity_grid(Word.from_string("AM"), 19)
print("parity n=2 d=19 achieved:", big.achieved, "(procedural grid, 2^19 cells)")

# Each letter appearing rarely forces the optimum down to n+2, but only just:
# these words have every letter at most n/4 + 1 times yet beat n+2.

for k in (1, 2, 3):
    w = few_letter_word(k)
    r = quad_grid(w, "A", "M")
    print(f"{w.text}: quad guarantees {r.guaranteed} > n+2 = {w.n + 2}")

# The dispatcher runs everything applicable and keeps the best certificate.

show(best_construction(Word.from_string("AMM")))
show(best_construction(Word.from_string("AAMM")))
