"""
Six ways to say yes or no
=========================

Recognition picks its method from the parameters it infers off the grid
shape: a counting argument when one voter holds many more cards, a
forbidden-pattern scan in the single-card case, winner-count intervals
in the two-card case, a reduction through the tie diagonal for two
candidates, and an exhaustive oracle when the grid is small enough to
brute-force.  Outside all of that it refuses to guess.  This script
sends one input down each path.
"""

import random
import time

from davote.core import Form, generate_correspondence, generate_form
from davote.oracle import oracle_recognize
from davote.recognizer import recognize_correspondence, recognize_form
from davote.special import generate_n_tableau, permute_axes, recognize_n_tableau


def show(tag, result):
    print(f"  {tag:<34} {result.verdict:<10} via {result.method}")


print("one input per recognition path:")

# Plenty of column cards: per-row winner counts pin down each row label.
show("p=3, alpha=1, beta=3 (form)", recognize_form(generate_form(3, 1, 3)))

# The mirrored regime transposes first, then runs the same counting.
show("p=3, alpha=3, beta=1 (form)", recognize_form(generate_form(3, 3, 1)))

# One card each: forbidden-pattern scan plus a greedy labeling.
show("p=4, alpha=beta=1 (form)", recognize_form(generate_form(4, 1, 1)))

# Two cards each: winner-count intervals per line.
show("p=3, alpha=beta=2 (form)", recognize_form(generate_form(3, 2, 2)))

# Two candidates, odd card total: no ties anywhere, so the form behaves
# like a correspondence.
show("p=2, alpha=2, beta=3 (form)", recognize_form(generate_form(2, 2, 3)))

# Small and out of every regime: the exhaustive oracle settles it.
show("p=2, alpha=beta=2 (form)", recognize_form(generate_form(2, 2, 2)))

# Large and out of every regime: undecided, with the reason attached.
big = generate_form(3, 3, 4)
res = recognize_form(big)
show("p=3, alpha=3, beta=4 (form)", res)
print(f"    refusal reason: {res.witness}")
print()

# Witnesses are the other half of the contract.  Break one cell of a
# single-card grid and the rejection names the pattern it found.
bad = Form(candidates=3, cells=((0, 1, 1), (2, 0, 1), (2, 2, 0)))
res = recognize_form(bad)
print("a broken single-card grid:")
print(f"  verdict {res.verdict}, witness: {res.witness.describe()}")
print()

# The oracle agrees, the slow way, and counts how many labelings exist.
report = oracle_recognize(bad)
print(f"oracle on the same grid: is_dav={report.is_dav}, "
      f"nodes explored={report.nodes_explored}")
good = generate_form(2, 3, 3)
report = oracle_recognize(good, cap=50)
print(f"oracle on a valid form:  is_dav={report.is_dav}, "
      f"labelings found={report.labelings_found}")
print()

# Many voters, two candidates: recognition works axis by axis on the
# n-dimensional tableau.
nt = generate_n_tableau((2, 3, 2))
rng = random.Random(11)
perms = [rng.sample(range(w + 1), w + 1) for w in (2, 3, 2)]
res = recognize_n_tableau(permute_axes(nt, perms))
print(f"three voters with cards (2, 3, 2), axes shuffled: {res.verdict}")
print(f"  recovered axis labels: {res.labeling.axis_labels}")
print()

# Speed check: the matching stage is cubic in the column count, so even
# sixty cards a side answers quickly.
t0 = time.monotonic()
res = recognize_correspondence(generate_correspondence(2, 60, 60))
print(f"61 x 61 correspondence recognized in {time.monotonic() - t0:.3f}s "
      f"({res.verdict})")
