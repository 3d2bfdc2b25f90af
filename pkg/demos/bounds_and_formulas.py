"""Closed-form ceilings, exact formulas, and two-sided brackets."""

from wordgrid import (
    Word,
    bracket,
    exact_formula,
    exact_formula_d,
    upper_bound_2d,
    upper_bound_d,
)

# Several counting arguments each cap the 2-D optimum; the report keeps the
# whole table. For AMM the non-palindrome rule gives 6, yet the optimum is 5,
# so a gap can survive every rule.

report = upper_bound_2d(Word.from_string("AMM"))
for rule, value in report.applied:
    print(f"{rule}: {value}")
print("upper:", report.upper)

# Some families have their optimum pinned exactly by a formula.

for text in ("AMM", "AAMMM", "AMA", "AMAM", "ABCDEFGH", "ABC"):
    print(text, "->", exact_formula(Word.from_string(text)))

# In higher dimensions the one exactly solved family is the binary words
# whose reversal flips every letter: the parity construction meets the
# quarter-difference ceiling.

w = Word.from_string("AAMM")
for d in (2, 3, 4):
    print(f"d={d}: ceiling {upper_bound_d(w, d)}, exact {exact_formula_d(w, d)}")

# A bracket combines the best certified construction with the ceilings. If
# the two ever crossed, that would be a verified contradiction, so the
# report raises rather than clamps.

for text in ("AMM", "ABC", "AMA"):
    b = bracket(Word.from_string(text))
    print(f"{text}: lower {b.lower} upper {b.upper} exact {b.exact}")
