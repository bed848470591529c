"""Diagram relations, rewriting, and positivity.

The local moves of the calculus (digons, squares, associativity) are not
axioms here; each instance is checked against the representation functor
as an exact matrix identity.
"""

from qwebs.webs import Ladder, Rung
from qwebs.relations import (
    reduce_to_highest,
    relation_instances,
    simplify,
    verify_report,
)

# Sweep every admissible instance at N=2 and print the verdict lines.
for line in verify_report(2):
    print(line)

# The same sweep at N=3 is larger; count instead of printing.
insts = relation_instances(3)
print(f"\nN=3 sweeps {len(insts)} instances across 5 rules")

# simplify() rewrites stacked rungs: a digon collapses to a scalar times
# the identity strand.
digon = Ladder(2, 2, (2, 0), [Rung(1, -1, 1), Rung(1, 1, 1)])
for lad, coeff in simplify(digon).items():
    print(f"\ndigon -> ({coeff}) * [{lad}]")

# Closed webs reduce to a nonnegative multiple of the highest weight web.
# A theta web made of thick rungs:
theta = Ladder(2, 2, (2, 0), [Rung(1, -1, 2), Rung(1, 1, 2)])
print("\ntheta reduces to:", reduce_to_highest(theta))

# A single circle keeps its value however far it meanders across the
# uprights, and nested circles multiply:
meander = Ladder(
    2, 3, (2, 0, 0),
    [Rung(1, -1, 1), Rung(2, -1, 1), Rung(2, 1, 1), Rung(1, 1, 1)],
)
nested = Ladder(
    2, 2, (2, 0),
    [Rung(1, -1, 1), Rung(1, -1, 1), Rung(1, 1, 1), Rung(1, 1, 1)],
)
print("meandering circle:  ", reduce_to_highest(meander))
print("two nested circles: ", reduce_to_highest(nested))
