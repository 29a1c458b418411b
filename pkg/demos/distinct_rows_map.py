"""
Where do identical rows appear?
===============================

Two different strategies can be interchangeable: every column pairing
elects the same winner.  When that happens some form has two identical
rows and the row voter has a strategy it never needs.  This script maps
the parameter region where that cannot happen, then digs up a concrete
witness pair from the region where it can.
"""

from davote.core import generate_correspondence
from davote.distinctness import (
    all_forms_rows_distinct,
    correspondence_rows_distinct,
    differentiating_set,
    empty_differentiating_pairs,
)

P = 3

# A '#' marks parameters where every form has pairwise distinct rows; a
# '.' marks parameters where some form repeats a row.
print(f"all-forms distinct-rows map for p = {P} (rows alpha, cols beta):")
print("      beta " + " ".join(f"{b:>2}" for b in range(1, 11)))
for alpha in range(1, 9):
    marks = [
        "#" if all_forms_rows_distinct(P, alpha, beta) else "."
        for beta in range(1, 11)
    ]
    print(f"  alpha {alpha:>2}   " + "  ".join(marks))
print()

# The correspondence itself is more forgiving: ties keep enough
# information that rows stay distinct on a wider region.
print(f"correspondence distinct-rows map for p = {P}:")
print("      beta " + " ".join(f"{b:>2}" for b in range(1, 11)))
for alpha in range(1, 9):
    marks = [
        "#" if correspondence_rows_distinct(P, alpha, beta) else "."
        for beta in range(1, 11)
    ]
    print(f"  alpha {alpha:>2}   " + "  ".join(marks))
print()

# Pick a '.' point off the forms map and produce the witness: a pair of
# strategies with an empty differentiating set, meaning no column
# forces their winner sets apart.
alpha, beta = 2, 3
pairs = empty_differentiating_pairs(P, alpha, beta)
print(f"at (p, alpha, beta) = ({P}, {alpha}, {beta}) these pairs collide:")
for x, xp in pairs:
    print(f"  {x} vs {xp}")
x, xp = pairs[0]
assert differentiating_set(x, xp, P, beta) == []
print()

# Seeing it concretely: the two correspondence rows overlap in every
# column, so a form may pick a common winner all the way across.
from davote.core import enumerate_strategies  # noqa: E402

h = generate_correspondence(P, alpha, beta)
xs = enumerate_strategies(P, alpha)
for s in (x, xp):
    cells = h.cells[xs.index(s)]
    rendered = " ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in cells)
    print(f"  row {s}: {rendered}")
print("every column's winner sets intersect, so one form repeats the row.")
